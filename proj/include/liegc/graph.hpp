#pragma once
// ---- half-edge graphs: topology, decoration, canonical labeling ----
//
// A topological graph is a pair of partitions of the half-edge set {1..H}:
// into unordered pairs (edges) and into sets of size >= 3 (vertices).  A
// decorated graph adds vertex and edge numberings, edge directions and an
// insertion tree per vertex.  Positions in the stored arrays ARE the
// numberings: vertices[i] is vertex number i+1, edges[k] is edge number k+1
// as the ordered pair (tail half-edge, head half-edge).

#include <string>
#include <utility>
#include <vector>

#include "liegc/tree.hpp"

namespace liegc {

struct TopologicalGraph {
  int half_edges = 0;                        // labels 1..half_edges
  std::vector<std::vector<int>> vertices;    // blocks of size >= 3
  std::vector<std::pair<int, int>> edges;    // unordered pairs, stored (lo, hi)
};

/// Structural validity: the two partitions cover {1..H} exactly once and
/// every vertex block has size >= 3.  Violations (if any) are appended to
/// `why` when provided.
bool topology_valid(const TopologicalGraph& g, std::vector<std::string>* why = nullptr);

bool is_connected(const TopologicalGraph& g);
bool has_self_loop(const TopologicalGraph& g);

/// Deterministic encoding of a *canonically labeled* graph; equality of
/// encodings == isomorphism of the underlying graphs.
std::string topology_key(const TopologicalGraph& g);

struct CanonicalResult {
  TopologicalGraph graph;      // canonical form
  std::vector<int> witness;    // witness[h-1] = canonical label of half-edge h
  long aut_count = 0;          // number of leaves attaining the canonical encoding
};

/// Canonical labeling by backtracking over vertex orders (refined by
/// valency / self-loop / neighborhood colors) and per-vertex half-edge
/// orders, choosing the lexicographically least streaming encoding.  The
/// number of optima equals |Aut(g)|.
CanonicalResult canonical_label(const TopologicalGraph& g);

/// |Aut(g)|: half-edge permutations preserving both partitions.
long automorphism_count(const TopologicalGraph& g);

/// The automorphisms themselves, as half-edge permutations p with
/// p[h-1] = image of h.  Independent backtracking implementation
/// (cross-checked against automorphism_count in tests).
std::vector<std::vector<int>> automorphisms(const TopologicalGraph& g);

/// All isomorphism classes of trivalent graphs with 2n vertices (canonical
/// forms, sorted by encoding), filtered by the flags.
std::vector<TopologicalGraph> enumerate_trivalent(int n, bool connected_only,
                                                  bool allow_self_loops);

/// All isomorphism classes with |v| = 2n - t vertices and |e| = 3n - t edges
/// where t extra valencies are distributed over the vertices (valency
/// profiles 3 + lambda_i over partitions lambda of t).  Degree-t slice of the
/// order-n enumeration.
std::vector<TopologicalGraph> enumerate_topologies(int n, int t, bool connected_only,
                                                   bool allow_self_loops);

// ---- decorated graphs ----

struct DecoratedGraph {
  int half_edges = 0;
  std::vector<std::vector<int>> vertices;    // position = vertex number - 1
  std::vector<std::pair<int, int>> edges;    // position = edge number - 1; (tail, head)
  std::vector<InsertionTree> trees;          // aligned with vertices
};

/// All decoration invariants; violations appended to `why` when provided.
bool validate(const DecoratedGraph& g, std::vector<std::string>* why = nullptr);

TopologicalGraph underlying(const DecoratedGraph& g);

int order(const DecoratedGraph& g);    // |e| - |v|
int degree(const DecoratedGraph& g);   // 2|e| - 3|v|

/// Half-edges at vertex number v (1-based), sorted by edge number with the
/// tail half placed just before the head half for self-loops.
std::vector<int> induced_order(const DecoratedGraph& g, int v);

/// Valency of vertex number v.
int valency(const DecoratedGraph& g, int v);

/// Vertex number (1-based) owning half-edge h.
int vertex_of(const DecoratedGraph& g, int h);

/// Deterministic decoration of a canonical topology: vertices numbered in
/// canonical block order, edges numbered lexicographically by half-edge pair,
/// directions low -> high, Y trees at trivalent vertices and left combs at
/// higher valency.
DecoratedGraph default_decoration(const TopologicalGraph& canonical);

/// Sign of the permutation carrying the edge orientation sequence
/// (tail_1, head_1, tail_2, ...) to the vertex orientation sequence (induced
/// orders of v_1, v_2, ...).  Trivalent graphs only.
int relative_orientation(const DecoratedGraph& g);

/// Union with numbering shift: half-edges/vertices/edges of b appended after
/// those of a.  Trees carried verbatim.
DecoratedGraph disjoint_union(const DecoratedGraph& a, const DecoratedGraph& b);

}  // namespace liegc
