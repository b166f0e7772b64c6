#include "liegc/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liegc {

Word make_leaf(int i) {
  auto n = std::make_shared<WordNode>();
  n->leaf = i;
  return n;
}

Word make_pair(Word a, Word b) {
  auto n = std::make_shared<WordNode>();
  n->leaf = 0;
  n->l = std::move(a);
  n->r = std::move(b);
  return n;
}

bool is_leaf(const Word& w) { return w && w->leaf > 0; }

static void collect_leaves(const Word& w, std::vector<int>& out) {
  if (!w) return;
  if (w->leaf > 0) {
    out.push_back(w->leaf);
  } else {
    collect_leaves(w->l, out);
    collect_leaves(w->r, out);
  }
}

std::vector<int> word_leaves(const Word& w) {
  std::vector<int> out;
  collect_leaves(w, out);
  return out;
}

bool word_well_formed(const Word& w, int n) {
  if (!w || n < 3) return false;
  std::vector<int> ls = word_leaves(w);
  if (int(ls.size()) != n - 1) return false;
  std::set<int> seen(ls.begin(), ls.end());
  if (int(seen.size()) != n - 1) return false;
  return *seen.begin() == 1 && *seen.rbegin() == n - 1;
}

std::string word_str(const Word& w) {
  if (!w) return "<null>";
  if (w->leaf > 0) return std::to_string(w->leaf);
  return "[" + word_str(w->l) + "," + word_str(w->r) + "]";
}

bool word_equal(const Word& a, const Word& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->leaf != b->leaf) return false;
  if (a->leaf > 0) return true;
  return word_equal(a->l, b->l) && word_equal(a->r, b->r);
}

InsertionTree y_tree() { return InsertionTree{make_pair(make_leaf(1), make_leaf(2)), +1}; }

std::map<std::vector<int>, long> expand(const Word& w) {
  std::map<std::vector<int>, long> out;
  if (!w) return out;
  if (w->leaf > 0) {
    out[{w->leaf}] = 1;
    return out;
  }
  const auto L = expand(w->l);
  const auto R = expand(w->r);
  for (const auto& [ml, cl] : L) {
    for (const auto& [mr, cr] : R) {
      std::vector<int> ab = ml;
      ab.insert(ab.end(), mr.begin(), mr.end());
      out[ab] += cl * cr;
      std::vector<int> ba = mr;
      ba.insert(ba.end(), ml.begin(), ml.end());
      out[ba] -= cl * cr;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

Word comb_word(const std::vector<int>& tail) {
  Word w = make_leaf(1);
  for (int t : tail) w = make_pair(w, make_leaf(t));
  return w;
}

std::map<std::vector<int>, long> comb_coords(const Word& w, int n) {
  // Coefficient of comb(s_2,..,s_{n-1}) = coefficient of the associative
  // monomial (1, s_2, .., s_{n-1}); comb expansions are unitriangular with
  // exactly one monomial starting at leaf 1.
  std::map<std::vector<int>, long> out;
  for (const auto& [mono, c] : expand(w)) {
    if (mono.front() != 1) continue;
    out[std::vector<int>(mono.begin() + 1, mono.end())] = c;
  }
  (void)n;
  return out;
}

Word substitute(const Word& w, int target, const Word& sub) {
  if (!w) return w;
  if (w->leaf > 0) return (w->leaf == target) ? sub : w;
  return make_pair(substitute(w->l, target, sub), substitute(w->r, target, sub));
}

Word relabel(const Word& w, const std::map<int, int>& perm) {
  if (!w) return w;
  if (w->leaf > 0) {
    auto it = perm.find(w->leaf);
    return make_leaf(it == perm.end() ? w->leaf : it->second);
  }
  return make_pair(relabel(w->l, perm), relabel(w->r, perm));
}

static bool contains_leaf(const Word& w, int g) {
  if (!w) return false;
  if (w->leaf > 0) return w->leaf == g;
  return contains_leaf(w->l, g) || contains_leaf(w->r, g);
}

std::pair<int, Word> pair_to_ground(const Word& w1, const Word& w2, int g) {
  // Invariant: the value is sign * B(eval(w1), eval(w2)) and g sits in w2.
  // B(x, [c, d]) = B([x, c], d) = -B([x, d], c)  (ad-invariance).
  if (is_leaf(w2) && w2->leaf == g) return {+1, w1};
  if (!w2 || w2->leaf > 0) throw std::invalid_argument("pair_to_ground: ground not in word");
  if (contains_leaf(w2->r, g)) {
    return pair_to_ground(make_pair(w1, w2->l), w2->r, g);
  }
  auto [s, w] = pair_to_ground(make_pair(w1, w2->r), w2->l, g);
  return {-s, w};
}

std::pair<int, Word> reground(const Word& w, int n, int g) {
  // B(eval(w), x_n) = B(x_n, eval(w)); then chase g down w.
  if (g == n) return {+1, w};
  return pair_to_ground(make_leaf(n), w, g);
}

std::pair<int, Word> slot_transport(const Word& w, const std::vector<int>& perm, int n) {
  if (int(perm.size()) != n) throw std::invalid_argument("slot_transport: perm size");
  std::map<int, int> m;
  for (int i = 1; i <= n; ++i) m[i] = perm[i - 1];
  const Word rel = relabel(w, m);
  const int new_ground = m.at(n);
  if (new_ground == n) return {+1, rel};
  // rel is grounded at new_ground; move the ground back to slot n.
  auto [s, out] = pair_to_ground(make_leaf(new_ground), rel, n);
  return {s, out};
}

}  // namespace liegc
