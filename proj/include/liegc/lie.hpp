#pragma once
// ---- semi-simple Lie algebra data and weight systems ----
//
// Structure constants over Q with antisymmetry and Jacobi enforced at
// construction, Killing form required invertible (semi-simplicity).  Weight
// systems decorate insertion trees with the cubic trace at nodes and the
// Casimir on internal edges; graph weights contract the vertex tensors
// against Casimir (regular edges) and a fiber tensor xi (self-loops).

#include <optional>
#include <string>
#include <vector>

#include "liegc/complex.hpp"
#include "liegc/graph.hpp"
#include "liegc/qlinalg.hpp"
#include "liegc/rational.hpp"
#include "liegc/tree.hpp"

namespace liegc {

/// Sparse tensor over basis indices 0..dim-1.
struct Tensor {
  int rank = 0;
  int dim = 0;
  std::map<std::vector<int>, Rational> entries;  // no zeros stored

  Rational at(const std::vector<int>& idx) const;
  void set(const std::vector<int>& idx, const Rational& v);
  bool operator==(const Tensor& o) const {
    return rank == o.rank && dim == o.dim && entries == o.entries;
  }
};

class LieAlgebraData {
public:
  /// Build from structure constants c[i][j][k] ([e_i,e_j] = sum_k c_ijk e_k).
  /// Throws std::invalid_argument unless antisymmetry and Jacobi hold and the
  /// Killing form is invertible.
  LieAlgebraData(int dim, std::vector<std::string> basis_names,
                 std::vector<std::vector<std::vector<Rational>>> c);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Rational& c(int i, int j, int k) const { return c_[i][j][k]; }

  /// Built-ins: sl2 with basis (h,e,f), so3 with basis (x,y,z).
  static LieAlgebraData sl2();
  static LieAlgebraData so3();

private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<Rational>>> c_;
};

LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b);

/// [x, y] for rank-1 tensors.
Tensor bracket(const LieAlgebraData& g, const Tensor& x, const Tensor& y);

/// Basis vector e_i as a rank-1 tensor.
Tensor basis_vector(const LieAlgebraData& g, int i);

/// Killing form B_ij = sum_kl c_ik^l c_jl^k (rank 2, symmetric, invertible).
Tensor killing(const LieAlgebraData& g);

/// Casimir = inverse Killing matrix viewed in g (x) g (rank 2, symmetric).
Tensor casimir(const LieAlgebraData& g);

/// Cubic trace Tr[a,b,c] = B([e_a,e_b], e_c) (rank 3, totally antisymmetric).
Tensor cubic_trace(const LieAlgebraData& g);

/// The bracket map L: g (x) g -> g applied to a rank-2 tensor.
Tensor apply_bracket_map(const LieAlgebraData& g, const Tensor& xi);

/// dim ker(L: g (x) g -> g); equals d^2 - d for semi-simple g.
int bracket_kernel_dim(const LieAlgebraData& g);

/// Basis of Lambda^2(g) intersect ker(L), as antisymmetric rank-2 tensors.
std::vector<Tensor> lambda2_kernel_basis(const LieAlgebraData& g);

/// Weight tensor of a valency-n insertion tree: W[x_1..x_n] obtained by
/// decorating the tree with Tr at internal nodes and Casimir on internal
/// edges; equals B(eval(word), x_n) evaluated over all basis tuples.
Tensor weight_of_tree(const LieAlgebraData& g, const InsertionTree& t, int valency);

/// W_I + W_H + W_X == 0 as rank-4 tensors.
bool ihx_check(const LieAlgebraData& g);

/// Scalar weight of a closed decorated graph: vertex tensors contracted with
/// Casimir on regular edges and xi on self-loops (first xi slot = tail).
Rational graph_weight_decorated(const LieAlgebraData& g, const DecoratedGraph& gr,
                                const Tensor& xi);

/// Weight of a class (via its canonical representative).
Rational graph_weight(const LieAlgebraData& g, const GraphClass& c, const Tensor& xi);

/// Check the self-loop contraction identity: contracting xi into two slots of
/// the cubic trace equals B(L(xi), -) on every basis vector, and that the
/// contraction vanishes identically iff L(xi) = 0.
bool fiber_vanishing_check(const LieAlgebraData& g, const Tensor& xi);

/// Two-vertex double-trace contraction with one Casimir and one xi
/// insertion, restricted to external basis indices (a, b), against
/// (1/2) B(L(xi), [e_a, e_b]).  Returns {lhs, rhs}; callers assert equality.
std::pair<Rational, Rational> lemma_641_identity(const LieAlgebraData& g,
                                                 const Tensor& xi, int a, int b);

/// Antisymmetric rank-2 tensor from a wedge e_i ^ e_j.
Tensor wedge(const LieAlgebraData& g, int i, int j);

/// Zero tensor of the given rank.
Tensor zero_tensor(const LieAlgebraData& g, int rank);

}  // namespace liegc
