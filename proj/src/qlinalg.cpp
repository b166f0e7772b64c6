#include "liegc/qlinalg.hpp"

#include <algorithm>
#include <set>

namespace liegc {

void prune(QVector& v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

QVector add(const QVector& a, const QVector& b) {
  QVector r = a;
  for (const auto& [k, x] : b) r[k] += x;
  prune(r);
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  QVector r = a;
  for (const auto& [k, x] : b) r[k] -= x;
  prune(r);
  return r;
}

QVector scale(const Rational& c, const QVector& v) {
  QVector r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : v) r[k] = c * x;
  return r;
}

void axpy(QVector& a, const Rational& c, const QVector& b) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : b) a[k] += c * x;
  prune(a);
}

bool is_zero(const QVector& v) { return v.empty(); }

QMatrix make_matrix(const std::vector<QVector>& rows,
                    const std::vector<std::string>& extra_columns) {
  std::set<std::string> cols(extra_columns.begin(), extra_columns.end());
  for (const auto& r : rows)
    for (const auto& [k, x] : r) cols.insert(k);
  QMatrix m;
  m.columns.assign(cols.begin(), cols.end());
  m.rows = rows;
  for (auto& r : m.rows) prune(r);
  return m;
}

RrefResult rref(const QMatrix& m) {
  std::vector<QVector> rows = m.rows;
  for (auto& r : rows) prune(r);
  std::vector<QVector> done;      // echelon rows in pivot order
  std::vector<std::string> pivots;
  // Columns in ascending key order; map order of QVector gives the least
  // remaining key of each row for free.
  for (const auto& col : m.columns) {
    int pick = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].empty() && rows[i].begin()->first == col) { pick = int(i); break; }
    }
    if (pick < 0) continue;
    QVector piv = rows[pick];
    rows.erase(rows.begin() + pick);
    const Rational lead = piv.begin()->second;
    piv = scale(lead.inv(), piv);
    for (auto& r : rows) {
      auto it = r.find(col);
      if (it != r.end()) axpy(r, -it->second, piv);
    }
    for (std::size_t i = 0; i < done.size(); ++i) {
      auto it = done[i].find(col);
      if (it != done[i].end()) axpy(done[i], -it->second, piv);
    }
    done.push_back(std::move(piv));
    pivots.push_back(col);
  }
  RrefResult res;
  res.m.columns = m.columns;
  res.m.rows = std::move(done);
  res.pivots = std::move(pivots);
  return res;
}

int rank(const QMatrix& m) { return int(rref(m).pivots.size()); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const RrefResult rr = rref(m);
  std::set<std::string> pivot_set(rr.pivots.begin(), rr.pivots.end());
  std::vector<QVector> basis;
  for (const auto& col : m.columns) {
    if (pivot_set.count(col)) continue;
    QVector v;
    v[col] = Rational(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      auto it = rr.m.rows[i].find(col);
      if (it != rr.m.rows[i].end()) v[rr.pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> in_span(const QVector& v,
                                             const std::vector<QVector>& basis) {
  // Solve B c = v by eliminating on the rows (keys); augmented column "#rhs".
  // Build the transposed system: one row per key, columns = basis indices.
  std::set<std::string> keys;
  for (const auto& b : basis)
    for (const auto& [k, x] : b) keys.insert(k);
  for (const auto& [k, x] : v) keys.insert(k);

  // Dense-ish elimination over (|keys| x (|basis|+1)); sizes are small.
  const int nb = int(basis.size());
  std::vector<std::vector<Rational>> rows;
  rows.reserve(keys.size());
  for (const auto& k : keys) {
    std::vector<Rational> row(nb + 1);
    for (int j = 0; j < nb; ++j) {
      auto it = basis[j].find(k);
      if (it != basis[j].end()) row[j] = it->second;
    }
    auto it = v.find(k);
    if (it != v.end()) row[nb] = it->second;
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_row_of_col(nb, -1);
  int r = 0;
  for (int c = 0; c < nb && r < int(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if (!rows[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (int j = c; j <= nb; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_row_of_col[c] = r;
    ++r;
  }
  // Inconsistent iff some row is (0..0 | nonzero).
  for (const auto& row : rows) {
    bool lhs_zero = true;
    for (int j = 0; j < nb; ++j)
      if (!row[j].is_zero()) { lhs_zero = false; break; }
    if (lhs_zero && !row[nb].is_zero()) return std::nullopt;
  }
  std::vector<Rational> coeff(nb);
  for (int c = 0; c < nb; ++c)
    if (pivot_row_of_col[c] >= 0) coeff[c] = rows[pivot_row_of_col[c]][nb];
  return coeff;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  QVector out;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Rational s;
    for (const auto& [k, x] : m.rows[i]) {
      auto it = v.find(k);
      if (it != v.end()) s += x * it->second;
    }
    if (!s.is_zero()) out[std::to_string(i)] = s;
  }
  return out;
}

}  // namespace liegc
