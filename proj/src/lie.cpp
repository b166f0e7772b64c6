#include "liegc/lie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liegc {

// ---- Tensor ----

Rational Tensor::at(const std::vector<int>& idx) const {
  if (int(idx.size()) != rank) throw std::invalid_argument("Tensor::at: rank mismatch");
  const auto it = entries.find(idx);
  return it == entries.end() ? Rational(0) : it->second;
}

void Tensor::set(const std::vector<int>& idx, const Rational& v) {
  if (int(idx.size()) != rank) throw std::invalid_argument("Tensor::set: rank mismatch");
  for (int i : idx)
    if (i < 0 || i >= dim) throw std::invalid_argument("Tensor::set: index out of range");
  if (v.is_zero())
    entries.erase(idx);
  else
    entries[idx] = v;
}

Tensor zero_tensor(const LieAlgebraData& g, int rank) {
  Tensor t;
  t.rank = rank;
  t.dim = g.dim();
  return t;
}

// ---- dense helpers ----

namespace {

using Mat = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse; empty result if singular.
Mat invert(const Mat& a) {
  const int n = int(a.size());
  Mat work = a;
  Mat inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!work[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return {};
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = work[col][col];
    for (int j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      const Rational f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Mat killing_matrix(const LieAlgebraData& g) {
  const int d = g.dim();
  Mat B(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational s(0);
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) s += g.c(i, k, l) * g.c(j, l, k);
      B[i][j] = s;
    }
  return B;
}

std::string pair_key(int i, int j) {
  std::ostringstream os;
  os << i << "," << j;
  return os.str();
}

}  // namespace

// ---- LieAlgebraData ----

LieAlgebraData::LieAlgebraData(int dim, std::vector<std::string> basis_names,
                               std::vector<std::vector<std::vector<Rational>>> c)
    : dim_(dim), names_(std::move(basis_names)), c_(std::move(c)) {
  if (dim_ < 1) throw std::invalid_argument("LieAlgebraData: dim must be positive");
  if (int(names_.size()) != dim_)
    throw std::invalid_argument("LieAlgebraData: basis name count != dim");
  if (int(c_.size()) != dim_)
    throw std::invalid_argument("LieAlgebraData: structure constant shape");
  for (const auto& ci : c_) {
    if (int(ci.size()) != dim_)
      throw std::invalid_argument("LieAlgebraData: structure constant shape");
    for (const auto& cij : ci)
      if (int(cij.size()) != dim_)
        throw std::invalid_argument("LieAlgebraData: structure constant shape");
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c_[i][j][k] != -c_[j][i][k])
          throw std::invalid_argument("LieAlgebraData: antisymmetry fails");
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          Rational s(0);
          for (int m = 0; m < dim_; ++m)
            s += c_[i][j][m] * c_[m][k][l] + c_[j][k][m] * c_[m][i][l] +
                 c_[k][i][m] * c_[m][j][l];
          if (!s.is_zero()) throw std::invalid_argument("LieAlgebraData: Jacobi fails");
        }
  if (invert(killing_matrix(*this)).empty())
    throw std::invalid_argument("LieAlgebraData: Killing form is singular");
}

LieAlgebraData LieAlgebraData::sl2() {
  const int d = 3;  // h, e, f
  std::vector<std::vector<std::vector<Rational>>> c(
      d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  c[0][1][1] = Rational(2);
  c[1][0][1] = Rational(-2);
  c[0][2][2] = Rational(-2);
  c[2][0][2] = Rational(2);
  c[1][2][0] = Rational(1);
  c[2][1][0] = Rational(-1);
  return LieAlgebraData(d, {"h", "e", "f"}, std::move(c));
}

LieAlgebraData LieAlgebraData::so3() {
  const int d = 3;  // x, y, z: [x,y]=z, [y,z]=x, [z,x]=y
  std::vector<std::vector<std::vector<Rational>>> c(
      d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  c[0][1][2] = Rational(1);
  c[1][0][2] = Rational(-1);
  c[1][2][0] = Rational(1);
  c[2][1][0] = Rational(-1);
  c[2][0][1] = Rational(1);
  c[0][2][1] = Rational(-1);
  return LieAlgebraData(d, {"x", "y", "z"}, std::move(c));
}

LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b) {
  const int d = a.dim() + b.dim();
  std::vector<std::vector<std::vector<Rational>>> c(
      d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) c[i][j][k] = a.c(i, j, k);
  const int off = a.dim();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k) c[off + i][off + j][off + k] = b.c(i, j, k);
  std::vector<std::string> names;
  bool clash = false;
  for (const auto& n : a.basis_names()) names.push_back(n);
  for (const auto& n : b.basis_names()) {
    if (std::find(names.begin(), names.end(), n) != names.end()) clash = true;
    names.push_back(n);
  }
  if (clash) {
    names.clear();
    for (const auto& n : a.basis_names()) names.push_back(n + "_1");
    for (const auto& n : b.basis_names()) names.push_back(n + "_2");
  }
  return LieAlgebraData(d, std::move(names), std::move(c));
}

// ---- elementary tensors ----

Tensor basis_vector(const LieAlgebraData& g, int i) {
  Tensor t = zero_tensor(g, 1);
  t.set({i}, Rational(1));
  return t;
}

Tensor bracket(const LieAlgebraData& g, const Tensor& x, const Tensor& y) {
  if (x.rank != 1 || y.rank != 1)
    throw std::invalid_argument("bracket: rank-1 tensors required");
  Tensor z = zero_tensor(g, 1);
  for (const auto& [ix, cx] : x.entries)
    for (const auto& [iy, cy] : y.entries)
      for (int k = 0; k < g.dim(); ++k) {
        const Rational& c = g.c(ix[0], iy[0], k);
        if (c.is_zero()) continue;
        z.set({k}, z.at({k}) + cx * cy * c);
      }
  return z;
}

Tensor killing(const LieAlgebraData& g) {
  const Mat B = killing_matrix(g);
  Tensor t = zero_tensor(g, 2);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) t.set({i, j}, B[i][j]);
  return t;
}

Tensor casimir(const LieAlgebraData& g) {
  const Mat inv = invert(killing_matrix(g));
  Tensor t = zero_tensor(g, 2);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) t.set({i, j}, inv[i][j]);
  return t;
}

Tensor cubic_trace(const LieAlgebraData& g) {
  const Mat B = killing_matrix(g);
  Tensor t = zero_tensor(g, 3);
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b)
      for (int c = 0; c < g.dim(); ++c) {
        Rational s(0);
        for (int m = 0; m < g.dim(); ++m) s += g.c(a, b, m) * B[m][c];
        t.set({a, b, c}, s);
      }
  return t;
}

Tensor apply_bracket_map(const LieAlgebraData& g, const Tensor& xi) {
  if (xi.rank != 2) throw std::invalid_argument("apply_bracket_map: rank-2 required");
  Tensor out = zero_tensor(g, 1);
  for (const auto& [idx, v] : xi.entries)
    for (int k = 0; k < g.dim(); ++k) {
      const Rational& c = g.c(idx[0], idx[1], k);
      if (!c.is_zero()) out.set({k}, out.at({k}) + v * c);
    }
  return out;
}

int bracket_kernel_dim(const LieAlgebraData& g) {
  const int d = g.dim();
  std::vector<QVector> rows;
  for (int k = 0; k < d; ++k) {
    QVector row;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!g.c(i, j, k).is_zero()) row[pair_key(i, j)] = g.c(i, j, k);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const QMatrix m = make_matrix(rows, {});
  return d * d - rank(m);
}

std::vector<Tensor> lambda2_kernel_basis(const LieAlgebraData& g) {
  const int d = g.dim();
  // coordinates: a_{ij} for i<j on e_i ^ e_j; L(e_i ^ e_j) = 2 [e_i, e_j]
  std::vector<std::string> cols;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) cols.push_back(pair_key(i, j));
  std::vector<QVector> rows;
  for (int k = 0; k < d; ++k) {
    QVector row;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (!g.c(i, j, k).is_zero()) row[pair_key(i, j)] = g.c(i, j, k);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const QMatrix m = make_matrix(rows, cols);
  std::vector<Tensor> out;
  for (const auto& kv : kernel_basis(m)) {
    Tensor t = zero_tensor(g, 2);
    for (const auto& [key, v] : kv) {
      const auto comma = key.find(',');
      const int i = std::stoi(key.substr(0, comma));
      const int j = std::stoi(key.substr(comma + 1));
      t.set({i, j}, t.at({i, j}) + v);
      t.set({j, i}, t.at({j, i}) - v);
    }
    out.push_back(std::move(t));
  }
  return out;
}

// ---- tree weights ----

namespace {

Tensor eval_word(const LieAlgebraData& g, const Word& w, const std::vector<int>& leaf_idx) {
  if (is_leaf(w)) return basis_vector(g, leaf_idx.at(w->leaf - 1));
  return bracket(g, eval_word(g, w->l, leaf_idx), eval_word(g, w->r, leaf_idx));
}

}  // namespace

Tensor weight_of_tree(const LieAlgebraData& g, const InsertionTree& t, int valency) {
  if (!word_well_formed(t.word, valency))
    throw std::invalid_argument("weight_of_tree: malformed word for valency");
  const int d = g.dim();
  const Mat B = killing_matrix(g);
  Tensor out = zero_tensor(g, valency);
  std::vector<int> leaf_idx(valency - 1, 0);
  const Rational sg(t.sign);
  // enumerate assignments of the first valency-1 slots; close with B(., x_n)
  while (true) {
    const Tensor v = eval_word(g, t.word, leaf_idx);
    for (int an = 0; an < d; ++an) {
      Rational s(0);
      for (const auto& [k, cv] : v.entries) s += cv * B[k[0]][an];
      if (s.is_zero()) continue;
      std::vector<int> idx = leaf_idx;
      idx.push_back(an);
      out.set(idx, sg * s);
    }
    int p = valency - 2;
    while (p >= 0 && leaf_idx[p] == d - 1) leaf_idx[p--] = 0;
    if (p < 0) break;
    ++leaf_idx[p];
  }
  return out;
}

bool ihx_check(const LieAlgebraData& g) {
  // Jacobi in grounded form: B([[1,2],3],4) + B([[2,3],1],4) + B([[3,1],2],4) = 0
  const Word w1 = make_pair(make_pair(make_leaf(1), make_leaf(2)), make_leaf(3));
  const Word w2 = make_pair(make_pair(make_leaf(2), make_leaf(3)), make_leaf(1));
  const Word w3 = make_pair(make_pair(make_leaf(3), make_leaf(1)), make_leaf(2));
  Tensor sum = zero_tensor(g, 4);
  for (const Word& w : {w1, w2, w3}) {
    const Tensor t = weight_of_tree(g, InsertionTree{w, +1}, 4);
    for (const auto& [idx, v] : t.entries) sum.set(idx, sum.at(idx) + v);
  }
  return sum.entries.empty();
}

// ---- graph weights ----

namespace {

// open-slot tensor: slot i carries half-edge labels[i]
struct NetNode {
  std::vector<int> labels;
  Tensor t;
};

// contract slot s1 of a with slot s2 of b through the rank-2 metric F
// (first F index on a's side); a and b must be distinct nodes.
NetNode join(const LieAlgebraData& g, const NetNode& a, int s1, const NetNode& b, int s2,
             const Tensor& F) {
  NetNode out;
  out.t = zero_tensor(g, a.t.rank + b.t.rank - 2);
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    if (int(i) != s1) out.labels.push_back(a.labels[i]);
  for (std::size_t i = 0; i < b.labels.size(); ++i)
    if (int(i) != s2) out.labels.push_back(b.labels[i]);
  for (const auto& [ia, va] : a.t.entries)
    for (const auto& [ib, vb] : b.t.entries) {
      const Rational f = F.at({ia[s1], ib[s2]});
      if (f.is_zero()) continue;
      std::vector<int> idx;
      for (std::size_t i = 0; i < ia.size(); ++i)
        if (int(i) != s1) idx.push_back(ia[i]);
      for (std::size_t i = 0; i < ib.size(); ++i)
        if (int(i) != s2) idx.push_back(ib[i]);
      out.t.set(idx, out.t.at(idx) + va * vb * f);
    }
  return out;
}

// contract two slots of the same node through F (first F index at s1)
NetNode trace(const LieAlgebraData& g, const NetNode& a, int s1, int s2, const Tensor& F) {
  NetNode out;
  out.t = zero_tensor(g, a.t.rank - 2);
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    if (int(i) != s1 && int(i) != s2) out.labels.push_back(a.labels[i]);
  for (const auto& [ia, va] : a.t.entries) {
    const Rational f = F.at({ia[s1], ia[s2]});
    if (f.is_zero()) continue;
    std::vector<int> idx;
    for (std::size_t i = 0; i < ia.size(); ++i)
      if (int(i) != s1 && int(i) != s2) idx.push_back(ia[i]);
    out.t.set(idx, out.t.at(idx) + va * f);
  }
  return out;
}

}  // namespace

Rational graph_weight_decorated(const LieAlgebraData& g, const DecoratedGraph& gr,
                                const Tensor& xi) {
  if (xi.rank != 2 || xi.dim != g.dim())
    throw std::invalid_argument("graph_weight: xi must be rank 2 over the algebra");
  std::vector<std::string> why;
  if (!validate(gr, &why)) {
    std::string msg = "graph_weight: invalid decorated graph";
    for (const auto& w : why) msg += "; " + w;
    throw std::invalid_argument(msg);
  }
  const Tensor cas = casimir(g);
  std::vector<NetNode> nodes;
  for (std::size_t v = 1; v <= gr.vertices.size(); ++v) {
    NetNode n;
    n.labels = induced_order(gr, int(v));
    n.t = weight_of_tree(g, gr.trees[v - 1], int(n.labels.size()));
    nodes.push_back(std::move(n));
  }
  auto locate = [&](int h) -> std::pair<int, int> {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto it = std::find(nodes[i].labels.begin(), nodes[i].labels.end(), h);
      if (it != nodes[i].labels.end()) return {int(i), int(it - nodes[i].labels.begin())};
    }
    throw std::logic_error("graph_weight: dangling half-edge");
  };
  for (const auto& [tail, head] : gr.edges) {
    const auto [ti, ts] = locate(tail);
    const auto [hi, hs] = locate(head);
    const bool loop = vertex_of(gr, tail) == vertex_of(gr, head);
    const Tensor& F = loop ? xi : cas;
    if (ti == hi) {
      nodes[ti] = trace(g, nodes[ti], ts, hs, F);
    } else {
      NetNode merged = join(g, nodes[ti], ts, nodes[hi], hs, F);
      // replace ti, drop hi (order of the survivors is irrelevant)
      nodes[std::min(ti, hi)] = std::move(merged);
      nodes.erase(nodes.begin() + std::max(ti, hi));
    }
  }
  Rational result(1);
  for (const auto& n : nodes) {
    if (n.t.rank != 0) throw std::logic_error("graph_weight: open slots remain");
    result *= n.t.at({});
  }
  return result;
}

Rational graph_weight(const LieAlgebraData& g, const GraphClass& c, const Tensor& xi) {
  return graph_weight_decorated(g, class_representative(c), xi);
}

// ---- fiber identities ----

Tensor wedge(const LieAlgebraData& g, int i, int j) {
  Tensor t = zero_tensor(g, 2);
  if (i == j) return t;
  t.set({i, j}, Rational(1));
  t.set({j, i}, Rational(-1));
  return t;
}

bool fiber_vanishing_check(const LieAlgebraData& g, const Tensor& xi) {
  if (xi.rank != 2) throw std::invalid_argument("fiber_vanishing_check: rank-2 required");
  const int d = g.dim();
  const Tensor tr = cubic_trace(g);
  const Mat B = killing_matrix(g);
  const Tensor lx = apply_bracket_map(g, xi);
  // R_w = sum_ab xi^{ab} Tr(e_a, e_b, e_w)
  Tensor R = zero_tensor(g, 1);
  for (const auto& [ab, v] : xi.entries)
    for (int w = 0; w < d; ++w) {
      const Rational t = tr.at({ab[0], ab[1], w});
      if (!t.is_zero()) R.set({w}, R.at({w}) + v * t);
    }
  // B(L(xi), .)_w
  Tensor K = zero_tensor(g, 1);
  for (const auto& [k, v] : lx.entries)
    for (int w = 0; w < d; ++w) {
      if (B[k[0]][w].is_zero()) continue;
      K.set({w}, K.at({w}) + v * B[k[0]][w]);
    }
  const bool matches = (R == K);
  const bool iff = (R.entries.empty() == lx.entries.empty());
  return matches && iff;
}

std::pair<Rational, Rational> lemma_641_identity(const LieAlgebraData& g, const Tensor& xi,
                                                 int a, int b) {
  const int d = g.dim();
  if (a < 0 || a >= d || b < 0 || b >= d)
    throw std::invalid_argument("lemma_641_identity: index out of range");
  const Tensor tr = cubic_trace(g);
  const Tensor cas = casimir(g);
  Rational lhs(0);
  for (const auto& [lj, v] : xi.entries) {
    const int l = lj[0], j = lj[1];
    for (const auto& [nm, u] : cas.entries) {
      const int n = nm[0], m = nm[1];
      const Rational t1 = tr.at({l, a, n});
      if (t1.is_zero()) continue;
      const Rational t2 = tr.at({m, j, b});
      if (t2.is_zero()) continue;
      lhs += v * u * t1 * t2;
    }
  }
  const Tensor lx = apply_bracket_map(g, xi);
  const Tensor ab = bracket(g, basis_vector(g, a), basis_vector(g, b));
  const Mat B = killing_matrix(g);
  Rational rhs(0);
  for (const auto& [i, vi] : lx.entries)
    for (const auto& [j, vj] : ab.entries) rhs += vi * vj * B[i[0]][j[0]];
  rhs *= Rational(1, 2);
  return {lhs, rhs};
}

}  // namespace liegc
