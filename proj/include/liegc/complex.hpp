#pragma once
// ---- the graph complex ----
//
// Classes of decorated graphs modulo the sign relation and the internal
// vertex-wise AS/IHX relations.  A class is represented by a canonical
// topology plus a tuple of comb-basis tree coordinates that survives the
// automorphism quotient; normalize() maps any decorated graph to a rational
// combination of classes.  delta contracts non-self-loop edges with the
// alternating vertex sign; delta_sharp is its self-loop-free projection.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liegc/graph.hpp"
#include "liegc/qlinalg.hpp"
#include "liegc/rational.hpp"

namespace liegc {

// ---- classes and vectors ----

/// Comb tuple: one comb tail sequence per vertex; a valency-n vertex carries
/// a permutation of {2..n-1} (so a trivalent vertex always carries (2) = Y).
using CombTuple = std::vector<std::vector<int>>;

struct GraphClass {
  std::string topo_key;    // canonical topology encoding
  CombTuple tuple;         // normal-form tree coordinates (a basis tuple)

  /// Unique string key (topology + tuple); total order for maps.
  std::string key() const;
  bool operator<(const GraphClass& o) const { return key() < o.key(); }
  bool operator==(const GraphClass& o) const {
    return topo_key == o.topo_key && tuple == o.tuple;
  }
};

/// The canonical decorated representative of a class: canonical topology,
/// default numbering/directions, comb words from the tuple.
DecoratedGraph class_representative(const GraphClass& c);

/// Recover the class from its key() string.
GraphClass class_from_key(const std::string& key);

struct GraphVector {
  std::map<std::string, Rational> terms;   // key() -> coefficient, no zeros

  bool is_zero() const { return terms.empty(); }
  void add_term(const GraphClass& c, const Rational& coeff);
  GraphVector& operator+=(const GraphVector& o);
  GraphVector& operator*=(const Rational& c);
  friend GraphVector operator+(GraphVector a, const GraphVector& b) { a += b; return a; }
  friend GraphVector operator*(const Rational& c, GraphVector v) { v *= c; return v; }
  bool operator==(const GraphVector& o) const { return terms == o.terms; }
};

// ---- core operations ----

/// Map a decorated graph to its value in the complex: canonicalize the
/// topology, standardize numbering/directions (tracking the sign relation),
/// rewrite trees into the comb basis and reduce modulo the automorphism
/// relations.  Result may have several terms.
GraphVector normalize(const DecoratedGraph& g);

/// Contract edge number e (1-based, non-self-loop): merge head vertex into
/// tail vertex at number min(i,j), decrement higher numberings, and join the
/// two insertion trees along the contracted legs.  Throws std::invalid_argument
/// on a self-loop.
DecoratedGraph contract_edge(const DecoratedGraph& g, int e);

/// Differential: delta(G) = sum over non-self-loop edges e=(i->j) of
/// sigma(i,j) * G/e with sigma(i,j) = (-1)^j for j > i, (-1)^(i+1) for j < i.
/// Extended linearly; the image is normalized.
GraphVector delta(const GraphVector& v);

/// Quotient differential: project_quotient(delta(v)).  Throws
/// std::invalid_argument if v contains self-loop classes.
GraphVector delta_sharp(const GraphVector& v);

/// Drop every class whose topology has a self-loop.
GraphVector project_quotient(const GraphVector& v);

/// Bilinear disjoint-union product (graded-commutative).
GraphVector graph_union(const GraphVector& a, const GraphVector& b);

enum class Variant { full, self_loop_only, quotient };

/// Basis of the homogeneous component of order n, degree t: connected classes
/// only unless include_disconnected (disconnected ones are built by union of
/// connected lower-order classes).  Sorted by class key.
std::vector<GraphClass> basis(int n, int t, Variant variant,
                              bool include_disconnected = false);

/// Basis of ker(delta) (full/self_loop_only) or ker(delta_sharp) (quotient)
/// on the degree-0 order-n component.
std::vector<GraphVector> cocycle_basis(int n, Variant variant);

// ---- helpers shared with other modules ----

/// True iff the class's topology contains a self-loop.
bool class_has_self_loop(const GraphClass& c);

/// True iff the class's topology is connected.
bool class_is_connected(const GraphClass& c);

/// Order/degree of a class.
int class_order(const GraphClass& c);
int class_degree(const GraphClass& c);

/// Expose a GraphVector as a QVector keyed by class keys (for exactq).
QVector to_qvector(const GraphVector& v);

}  // namespace liegc
