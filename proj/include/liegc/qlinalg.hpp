#pragma once
// ---- sparse exact linear algebra over Q ----
//
// Vectors are sparse association maps from string basis keys to Rational;
// matrices are row sequences over an explicit, finite column-key universe.
// Everything is exact; echelon forms are made deterministic by always
// pivoting on the smallest column key.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liegc/rational.hpp"

namespace liegc {

/// Sparse vector: absent key = zero; no stored zero entries.
using QVector = std::map<std::string, Rational>;

/// Drop explicit zeros (call after in-place arithmetic).
void prune(QVector& v);

QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);
/// a += c*b, pruned.
void axpy(QVector& a, const Rational& c, const QVector& b);
bool is_zero(const QVector& v);

/// Sparse row-major matrix over an explicit column universe.
struct QMatrix {
  std::vector<std::string> columns;  // sorted ascending, no duplicates
  std::vector<QVector> rows;         // keys drawn from `columns`
};

/// Build a matrix from rows, taking the column universe as the sorted union
/// of all row keys plus `extra_columns`.
QMatrix make_matrix(const std::vector<QVector>& rows,
                    const std::vector<std::string>& extra_columns = {});

struct RrefResult {
  QMatrix m;                          // reduced row-echelon form, zero rows dropped
  std::vector<std::string> pivots;    // pivot column keys, in row order
};

/// Reduced row-echelon form with pivots chosen on the smallest column key.
RrefResult rref(const QMatrix& m);

/// Rank = number of pivots of rref(m).
int rank(const QMatrix& m);

/// Basis of the right kernel {v : m v = 0}; vectors are keyed by column keys.
/// One basis vector per free column, in ascending column order, with the free
/// coordinate set to 1.  |result| = #columns - rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// If v = sum_i c_i basis_i is solvable, return the coefficients (aligned with
/// `basis`); otherwise nullopt.  Exact, deterministic.
std::optional<std::vector<Rational>> in_span(const QVector& v,
                                             const std::vector<QVector>& basis);

/// Matrix-vector product (v keyed by m.columns).
QVector mat_vec(const QMatrix& m, const QVector& v);

}  // namespace liegc
