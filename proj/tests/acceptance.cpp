// ---- acceptance suite ----
//
// One PASS/FAIL line per criterion; exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liegc/complex.hpp"
#include "liegc/graph.hpp"
#include "liegc/lie.hpp"
#include "liegc/series.hpp"
#include "liegc/tree.hpp"

using namespace liegc;

namespace {

// ---- graph builders ----

InsertionTree tree_of(Word w, int sign = 1) {
  InsertionTree t;
  t.sign = sign;
  t.word = std::move(w);
  return t;
}

Word y_word() { return make_pair(make_leaf(1), make_leaf(2)); }
Word comb23() { return make_pair(make_pair(make_leaf(1), make_leaf(2)), make_leaf(3)); }
Word comb32() { return make_pair(make_pair(make_leaf(1), make_leaf(3)), make_leaf(2)); }
Word grounded_x() { return make_pair(make_pair(make_leaf(2), make_leaf(3)), make_leaf(1)); }

DecoratedGraph theta_graph() {
  DecoratedGraph d;
  d.half_edges = 6;
  d.vertices = {{1, 2, 3}, {4, 5, 6}};
  d.edges = {{1, 4}, {2, 5}, {3, 6}};
  d.trees = {tree_of(y_word()), tree_of(y_word())};
  return d;
}

DecoratedGraph dumbbell_graph() {
  DecoratedGraph d = theta_graph();
  d.edges = {{1, 3}, {2, 5}, {4, 6}};
  return d;
}

DecoratedGraph gamma1() {
  DecoratedGraph d;
  d.half_edges = 12;
  d.vertices = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}};
  d.edges = {{1, 4}, {5, 7}, {8, 10}, {11, 2}, {3, 9}, {6, 12}};
  d.trees = std::vector<InsertionTree>(4, tree_of(y_word()));
  return d;
}

DecoratedGraph gamma2() {
  DecoratedGraph d = gamma1();
  d.edges = {{1, 4}, {7, 10}, {5, 8}, {6, 9}, {2, 11}, {3, 12}};
  return d;
}

DecoratedGraph gamma_loop() {
  DecoratedGraph d;
  d.half_edges = 10;
  d.vertices = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10}};
  d.edges = {{1, 4}, {5, 7}, {6, 8}, {2, 9}, {3, 10}};
  d.trees = {tree_of(y_word()), tree_of(y_word()), tree_of(comb23())};
  return d;
}

DecoratedGraph triple_edge(const Word& w) {
  DecoratedGraph d;
  d.half_edges = 10;
  d.vertices = {{1, 2, 3, 4}, {5, 6, 7}, {8, 9, 10}};
  d.edges = {{1, 5}, {2, 6}, {3, 7}, {4, 8}, {9, 10}};
  d.trees = {tree_of(w), tree_of(y_word()), tree_of(y_word())};
  return d;
}

// ---- vector helpers ----

GraphVector one(const GraphClass& c) {
  GraphVector v;
  v.add_term(c, Rational(1));
  return v;
}

GraphVector scaled(GraphVector v, const Rational& r) {
  v *= r;
  return v;
}

bool equal(const GraphVector& a, const GraphVector& b) {
  GraphVector d = a;
  d += scaled(b, Rational(-1));
  return d.is_zero();
}

// ---- independent sign oracle (first principles, no library transport) ----

std::vector<int> slots_at(const DecoratedGraph& g, int v) {
  std::set<int> mem(g.vertices[std::size_t(v) - 1].begin(),
                    g.vertices[std::size_t(v) - 1].end());
  std::vector<int> out;
  for (auto [a, b] : g.edges) {
    if (mem.count(a)) out.push_back(a);
    if (mem.count(b)) out.push_back(b);
  }
  return out;
}

int inversion_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

struct Perturbed {
  DecoratedGraph graph;
  int sign = 1;
  bool ok = true;
};

Perturbed perturb(const DecoratedGraph& d, std::mt19937& rng) {
  const int V = int(d.vertices.size());
  const int E = int(d.edges.size());
  const int H = d.half_edges;
  std::vector<int> rho(static_cast<std::size_t>(V));
  std::vector<int> tau(static_cast<std::size_t>(E));
  std::vector<int> pi(static_cast<std::size_t>(H) + 1);
  std::iota(rho.begin(), rho.end(), 0);
  std::iota(tau.begin(), tau.end(), 0);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(rho.begin(), rho.end(), rng);
  std::shuffle(tau.begin(), tau.end(), rng);
  std::shuffle(pi.begin() + 1, pi.end(), rng);
  std::bernoulli_distribution coin(0.5);

  Perturbed out;
  out.graph.half_edges = H;
  out.graph.vertices.resize(std::size_t(V));
  out.graph.trees.resize(std::size_t(V));
  for (int i = 0; i < V; ++i) {
    std::vector<int> blk;
    for (int h : d.vertices[std::size_t(i)]) blk.push_back(pi[std::size_t(h)]);
    std::shuffle(blk.begin(), blk.end(), rng);
    out.graph.vertices[std::size_t(rho[std::size_t(i)])] = std::move(blk);
    out.graph.trees[std::size_t(rho[std::size_t(i)])] = d.trees[std::size_t(i)];
  }
  out.graph.edges.resize(std::size_t(E));
  int reversals = 0;
  for (int j = 0; j < E; ++j) {
    auto [a, b] = d.edges[std::size_t(j)];
    int x = pi[std::size_t(a)], y = pi[std::size_t(b)];
    if (coin(rng)) {
      std::swap(x, y);
      ++reversals;
    }
    out.graph.edges[std::size_t(tau[std::size_t(j)])] = {x, y};
  }

  int sign = (reversals % 2 ? -1 : 1) * inversion_sign(rho);
  for (int i = 0; i < V; ++i) {
    const auto before = slots_at(d, i + 1);
    const auto after = slots_at(out.graph, rho[std::size_t(i)] + 1);
    std::vector<int> p;
    for (int h : before) {
      const auto it = std::find(after.begin(), after.end(), pi[std::size_t(h)]);
      if (it == after.end()) {
        out.ok = false;
        return out;
      }
      p.push_back(int(it - after.begin()));
    }
    sign *= inversion_sign(p);
  }
  out.sign = sign;
  return out;
}

// ---- criteria ----

bool criterion1(std::string& note) {
  if (automorphism_count(underlying(theta_graph())) != 12) {
    note = "theta |Aut| != 12";
    return false;
  }
  if (automorphism_count(underlying(dumbbell_graph())) != 8) {
    note = "dumbbell |Aut| != 8";
    return false;
  }
  std::multiset<long> auts;
  for (const auto& g : enumerate_trivalent(2, true, true)) auts.insert(automorphism_count(g));
  if (auts != std::multiset<long>{8, 16, 16, 24, 48}) {
    note = "order-2 |Aut| multiset mismatch";
    return false;
  }
  return true;
}

bool criterion2(std::string& note) {
  if (enumerate_trivalent(1, true, true).size() != 2) {
    note = "order-1 count != 2";
    return false;
  }
  if (enumerate_trivalent(2, true, true).size() != 5) {
    note = "order-2 count != 5";
    return false;
  }
  if (enumerate_trivalent(2, true, false).size() != 2) {
    note = "order-2 loopless count != 2";
    return false;
  }
  return true;
}

bool criterion3(std::string& note) {
  const CensusReport r1 = pairing_census(1);
  if (r1.total_matchings != 15 || !r1.identity_holds || r1.classes.size() != 2) {
    note = "order-1 census shape wrong";
    return false;
  }
  std::map<long, long> buckets;
  for (const auto& c : r1.classes) {
    buckets[c.aut] = c.count;
    if (c.count * c.aut != 72) {
      note = "order-1 identity violated";
      return false;
    }
  }
  if (buckets[12] != 6 || buckets[8] != 9) {
    note = "order-1 buckets wrong";
    return false;
  }
  const CensusReport r2 = pairing_census(2);
  if (r2.total_matchings != 10395 || !r2.identity_holds || r2.classes.size() != 8) {
    note = "order-2 census shape wrong";
    return false;
  }
  for (const auto& c : r2.classes)
    if (c.count * c.aut != 31104) {
      note = "order-2 identity violated";
      return false;
    }
  return true;
}

bool criterion4(std::string& note) {
  for (int n : {1, 2})
    for (int t : {0, 1})
      for (const auto& c : basis(n, t, Variant::full))
        if (!delta(delta(one(c))).is_zero()) {
          note = "delta^2 != 0 at order " + std::to_string(n) + ", degree " +
                 std::to_string(t);
          return false;
        }
  for (const auto& c : basis(2, 0, Variant::full, true))
    if (!delta(delta(one(c))).is_zero()) {
      note = "delta^2 != 0 on a disconnected class";
      return false;
    }
  std::vector<GraphClass> pool;
  for (const auto& c : basis(1, 0, Variant::full)) pool.push_back(c);
  for (const auto& c : basis(1, 1, Variant::full)) pool.push_back(c);
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const GraphVector a = one(x), b = one(y);
      GraphVector rhs = graph_union(delta(a), b);
      rhs += scaled(graph_union(a, delta(b)),
                    class_degree(x) % 2 ? Rational(-1) : Rational(1));
      if (!equal(delta(graph_union(a, b)), rhs)) {
        note = "Leibniz rule fails on an order-1 pair";
        return false;
      }
    }
  return true;
}

bool criterion5(std::string& note) {
  const GraphVector th = normalize(theta_graph());
  const GraphVector db = normalize(dumbbell_graph());
  GraphVector cocycle = th;
  cocycle += scaled(db, Rational(-3, 2));
  if (!delta(cocycle).is_zero()) {
    note = "theta - 3/2 dumbbell is not closed";
    return false;
  }
  if (cocycle_basis(1, Variant::full).size() != 1) {
    note = "full order-1 kernel dimension != 1";
    return false;
  }
  if (!delta_sharp(th).is_zero() || cocycle_basis(1, Variant::quotient).size() != 1) {
    note = "quotient order-1 facts fail";
    return false;
  }
  if (!cocycle_basis(1, Variant::self_loop_only).empty()) {
    note = "self-loop-only order-1 kernel not zero";
    return false;
  }
  const GraphVector g1 = normalize(gamma1());
  const GraphVector g2 = normalize(gamma2());
  const GraphVector gl = normalize(gamma_loop());
  if (!equal(delta_sharp(g1), scaled(gl, Rational(3)))) {
    note = "quotient differential of the first loopless class is not 3x";
    return false;
  }
  if (!equal(delta_sharp(g2), scaled(gl, Rational(2)))) {
    note = "quotient differential of the second loopless class is not 2x";
    return false;
  }
  GraphVector mix = scaled(g1, Rational(1, 12));
  mix += scaled(g2, Rational(-1, 8));
  if (!delta_sharp(mix).is_zero()) {
    note = "1/12 - 1/8 combination is not closed in the quotient";
    return false;
  }
  return true;
}

bool criterion6(std::string& note) {
  const GraphVector th = normalize(theta_graph());
  const GraphVector db = normalize(dumbbell_graph());
  GraphVector expect = scaled(th, Rational(-1, 12));
  expect += scaled(db, Rational(1, 8));
  if (!equal(cs_cocycle(1, true), expect)) {
    note = "order-1 series coefficients wrong";
    return false;
  }
  if (!delta(cs_cocycle(2, true)).is_zero()) {
    note = "order-2 series term is not closed";
    return false;
  }
  const GraphVector proj = project_quotient(cs_cocycle(2, true));
  GraphVector ref = scaled(normalize(gamma1()), Rational(1, 12));
  ref += scaled(normalize(gamma2()), Rational(-1, 8));
  if (proj.is_zero() || ref.is_zero()) {
    note = "projected series term vanished";
    return false;
  }
  const std::string key = ref.terms.begin()->first;
  if (!proj.terms.count(key)) {
    note = "projected series term has unexpected support";
    return false;
  }
  const Rational lambda = proj.terms.at(key) / ref.terms.at(key);
  if (lambda == Rational(0) || !equal(proj, scaled(ref, lambda))) {
    note = "projected series term is not proportional to the reference";
    return false;
  }
  note = "scalar " + lambda.str();
  return true;
}

bool criterion7(std::string& note) {
  const auto sl2 = LieAlgebraData::sl2();
  const Tensor B = killing(sl2);
  if (B.at({0, 0}) != Rational(8) || B.at({1, 2}) != Rational(4) ||
      B.at({0, 1}) != Rational(0) || B.at({0, 2}) != Rational(0)) {
    note = "Killing values wrong";
    return false;
  }
  Tensor expect_cas;
  expect_cas.rank = 2;
  expect_cas.dim = 3;
  expect_cas.set({0, 0}, Rational(1, 8));
  expect_cas.set({1, 2}, Rational(1, 4));
  expect_cas.set({2, 1}, Rational(1, 4));
  if (!(casimir(sl2) == expect_cas)) {
    note = "Casimir tensor wrong";
    return false;
  }
  if (!apply_bracket_map(sl2, casimir(sl2)).entries.empty()) {
    note = "Casimir not in the bracket kernel";
    return false;
  }
  if (bracket_kernel_dim(sl2) != 6 || !lambda2_kernel_basis(sl2).empty()) {
    note = "sl2 kernel dimensions wrong";
    return false;
  }
  // AS exhaustively: W_Y + W_Ybar = 0 as tensors
  const auto g2 = direct_sum(sl2, sl2);
  for (const auto& g : {sl2, g2}) {
    Tensor sum = weight_of_tree(g, tree_of(y_word()), 3);
    const Tensor wbar =
        weight_of_tree(g, tree_of(make_pair(make_leaf(2), make_leaf(1))), 3);
    for (const auto& [idx, val] : wbar.entries) sum.set(idx, sum.at(idx) + val);
    if (!sum.entries.empty()) {
      note = "AS fails";
      return false;
    }
    if (!ihx_check(g)) {
      note = "IHX fails";
      return false;
    }
  }
  if (bracket_kernel_dim(g2) != 30 || lambda2_kernel_basis(g2).size() != 9) {
    note = "double-sl2 kernel dimensions wrong";
    return false;
  }
  return true;
}

bool criterion8(std::string& note) {
  const auto sl2 = LieAlgebraData::sl2();
  const auto g2 = direct_sum(sl2, sl2);
  const auto kernel = lambda2_kernel_basis(g2);
  if (kernel.size() != 9) {
    note = "kernel basis dimension != 9";
    return false;
  }
  // classes of order 2 containing a self-loop (connected and disconnected)
  std::vector<GraphClass> loopy;
  for (const auto& c : basis(2, 0, Variant::full, true))
    if (class_has_self_loop(c)) loopy.push_back(c);
  const GraphClass db = class_from_key(normalize(dumbbell_graph()).terms.begin()->first);
  for (const auto& xi : kernel) {
    if (graph_weight(g2, db, xi) != Rational(0)) {
      note = "dumbbell weight nonzero for a kernel fiber";
      return false;
    }
    for (const auto& c : loopy)
      if (graph_weight(g2, c, xi) != Rational(0)) {
        note = "an order-2 self-loop class has nonzero weight";
        return false;
      }
  }
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs) {
    const Tensor xi = wedge(sl2, i, j);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const auto [lhs, rhs] = lemma_641_identity(sl2, xi, a, b);
        if (lhs != rhs) {
          note = "double-trace identity fails";
          return false;
        }
      }
  }
  return true;
}

bool criterion9(std::string& note) {
  std::mt19937 rng(424242);
  std::vector<DecoratedGraph> graphs = {theta_graph(), dumbbell_graph()};
  for (const auto& t : enumerate_trivalent(2, true, true))
    graphs.push_back(default_decoration(t));
  for (const auto& d : graphs) {
    const GraphVector base = normalize(d);
    const int base_or = relative_orientation(d);
    for (int trial = 0; trial < 1000; ++trial) {
      const Perturbed p = perturb(d, rng);
      if (!p.ok || !validate(p.graph)) {
        note = "perturbation produced an invalid graph";
        return false;
      }
      const GraphVector got = normalize(p.graph);
      if (!equal(got, scaled(base, Rational(p.sign)))) {
        note = "sign relation violated after a random perturbation";
        return false;
      }
      if (!equal(scaled(got, Rational(relative_orientation(p.graph))),
                 scaled(base, Rational(base_or)))) {
        note = "orientation bridge violated";
        return false;
      }
    }
  }
  for (const Word& w : {comb23(), comb32(), grounded_x()})
    if (!normalize(triple_edge(w)).is_zero()) {
      note = "a triple-edge graph does not normalize to zero";
      return false;
    }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "automorphism table", 1.0, criterion1},
      {2, "enumeration counts", 5.0, criterion2},
      {3, "matching census identity", 30.0, criterion3},
      {4, "differential suite", 60.0, criterion4},
      {5, "cocycle facts", 10.0, criterion5},
      {6, "generating-series cocycles", 10.0, criterion6},
      {7, "sl2 suite", 30.0, criterion7},
      {8, "vanishing mechanism", 60.0, criterion8},
      {9, "normal-form property suite", 60.0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      ok = false;
      if (!note.empty()) note += "; ";
      note += "over budget";
    }
    if (!ok) ++failures;
    std::printf("%s  %d  %-28s  %6.2f s / %2.0f s%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name, secs, c.budget_s, note.empty() ? "" : "  -- ", note.c_str());
    std::fflush(stdout);
  }
  return failures;
}
