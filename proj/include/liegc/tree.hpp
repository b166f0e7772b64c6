#pragma once
// ---- insertion trees: grounded bracket words ----
//
// A vertex of valency n carries a uni-trivalent tree with n ordered leaves,
// one of which (the last, slot n) is the "ground".  We store the tree as a
// bracket word on the remaining leaves 1..n-1: either a single leaf or an
// ordered pair [left, right] of words.  The associated multilinear functional
// is  W(x_1,..,x_n) = B(eval(word), x_n)  where eval substitutes x_i for leaf
// i and evaluates brackets.
//
// The normal-form basis is the left-comb family
//     comb(sigma) = [[..[[1, s_2], s_3].., s_{n-1}]       (sigma a permutation
// of {2..n-1}), of dimension (n-2)!.  Coordinates in this basis are read off
// the free associative expansion: the coefficient of comb(sigma) equals the
// coefficient of the monomial (1, s_2, .., s_{n-1}) (unitriangular extraction).

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace liegc {

struct WordNode;
/// Immutable shared bracket word.
using Word = std::shared_ptr<const WordNode>;

struct WordNode {
  int leaf = 0;   // > 0 for a leaf; 0 for a pair
  Word l, r;      // set iff leaf == 0
};

Word make_leaf(int i);
Word make_pair(Word a, Word b);
bool is_leaf(const Word& w);

/// Leaves of w in left-to-right order.
std::vector<int> word_leaves(const Word& w);

/// True iff the leaves of w are exactly {1..n-1}, each once.
bool word_well_formed(const Word& w, int n);

/// Plain-text form, e.g. "[[1,2],3]".
std::string word_str(const Word& w);

/// Structural equality.
bool word_equal(const Word& a, const Word& b);

/// Insertion tree at a valency-n vertex: a grounded bracket word on leaves
/// 1..n-1 (ground = slot n) with an overall sign.  The JSON form carries the
/// word only; signs arise internally from regrounding.
struct InsertionTree {
  Word word;
  int sign = +1;
};

/// The Y tree [1,2]: the unique valency-3 normal form.
InsertionTree y_tree();

/// Free associative expansion of w: monomial (leaf sequence) -> coefficient.
/// [a,b] expands to ab - ba.  Coefficients are exact (small) integers.
std::map<std::vector<int>, long> expand(const Word& w);

/// Left-comb word for a tail sequence: comb({}) = leaf 1 (n = 3 gives [1,2]
/// via tail {2}).  tail lists the leaves bracketed onto 1 in order.
Word comb_word(const std::vector<int>& tail);

/// Coordinates of w (leaves 1..n-1) in the comb basis, keyed by the tail
/// sequence (s_2,..,s_{n-1}).  Smallest key first by map order.
std::map<std::vector<int>, long> comb_coords(const Word& w, int n);

/// Substitute `sub` for leaf `target` in w.
Word substitute(const Word& w, int target, const Word& sub);

/// Relabel every leaf i to perm.at(i).
Word relabel(const Word& w, const std::map<int, int>& perm);

/// Rewrite the pairing B(eval(w1), eval(w2)) as sign * B(eval(w'), x_g) where
/// g is the leaf found inside w2 that should become the ground.  Returns
/// {sign, w'}: w' contains all leaves of w1 and w2 except g.
std::pair<int, Word> pair_to_ground(const Word& w1, const Word& w2, int g);

/// Move the ground of a valency-n tree word from slot n to slot g: rewrite
/// the functional so the word uses leaves {1..n}\{g} with ground g.  The
/// input word has leaves {1..n-1} (ground n) and must contain g.  Returns
/// {sign, word}.
std::pair<int, Word> reground(const Word& w, int n, int g);

/// Transport a grounded tree through a slot permutation: perm maps each old
/// slot 1..n to its new slot; the result is the same functional written on
/// the new slots, ground back at n.  Returns {sign, word}.
std::pair<int, Word> slot_transport(const Word& w, const std::vector<int>& perm, int n);

}  // namespace liegc
