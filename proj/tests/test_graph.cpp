#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "liegc/graph.hpp"

using namespace liegc;

namespace {

TopologicalGraph theta() {
  TopologicalGraph g;
  g.half_edges = 6;
  g.vertices = {{1, 2, 3}, {4, 5, 6}};
  g.edges = {{1, 4}, {2, 5}, {3, 6}};
  return g;
}

TopologicalGraph dumbbell() {
  TopologicalGraph g;
  g.half_edges = 6;
  g.vertices = {{1, 2, 3}, {4, 5, 6}};
  g.edges = {{1, 3}, {2, 5}, {4, 6}};
  return g;
}

// apply a half-edge relabeling to a topological graph
TopologicalGraph relabel_topology(const TopologicalGraph& g, const std::vector<int>& p) {
  TopologicalGraph out;
  out.half_edges = g.half_edges;
  for (const auto& blk : g.vertices) {
    std::vector<int> nb;
    for (int h : blk) nb.push_back(p[h - 1]);
    std::sort(nb.begin(), nb.end());
    out.vertices.push_back(std::move(nb));
  }
  for (auto [a, b] : g.edges) {
    int x = p[a - 1], y = p[b - 1];
    out.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

// ---- validity ----

TEST_CASE("topology_valid rejects structural defects") {
  CHECK(topology_valid(theta()));
  TopologicalGraph g = theta();
  g.vertices = {{1, 2}, {3, 4, 5, 6}};  // block of size 2
  std::vector<std::string> why;
  CHECK(!topology_valid(g, &why));
  CHECK(!why.empty());

  g = theta();
  g.edges = {{1, 4}, {2, 5}, {3, 3}};  // degenerate pair
  CHECK(!topology_valid(g));

  g = theta();
  g.edges = {{1, 4}, {2, 5}, {2, 6}};  // half-edge 2 covered twice, 3 missed
  CHECK(!topology_valid(g));
}

TEST_CASE("connectivity and self-loop detection") {
  CHECK(is_connected(theta()));
  CHECK(!has_self_loop(theta()));
  CHECK(is_connected(dumbbell()));
  CHECK(has_self_loop(dumbbell()));
  TopologicalGraph two;
  two.half_edges = 12;
  two.vertices = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}};
  two.edges = {{1, 4}, {2, 5}, {3, 6}, {7, 10}, {8, 11}, {9, 12}};
  CHECK(!is_connected(two));
}

// ---- canonical labeling ----

TEST_CASE("canonical labels of the order-1 graphs") {
  const auto th = canonical_label(theta());
  CHECK(th.aut_count == 12);
  CHECK(th.graph.edges == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}});
  const auto db = canonical_label(dumbbell());
  CHECK(db.aut_count == 8);
  CHECK(db.graph.edges == std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {4, 6}});
  CHECK(automorphism_count(theta()) == 12);
  CHECK(automorphism_count(dumbbell()) == 8);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937 rng(4711);
  for (const auto& g : {theta(), dumbbell()}) {
    const std::string key = topology_key(canonical_label(g).graph);
    std::vector<int> p(g.half_edges);
    for (int i = 0; i < g.half_edges; ++i) p[i] = i + 1;
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      const TopologicalGraph moved = relabel_topology(g, p);
      REQUIRE(topology_valid(moved));
      CHECK(topology_key(canonical_label(moved).graph) == key);
    }
  }
}

TEST_CASE("canonical labeling is idempotent and witness maps onto it") {
  for (const auto& g : {theta(), dumbbell()}) {
    const auto res = canonical_label(g);
    const auto again = canonical_label(res.graph);
    CHECK(topology_key(again.graph) == topology_key(res.graph));
    // applying the witness to g must literally produce the canonical form
    const TopologicalGraph moved = relabel_topology(g, res.witness);
    CHECK(topology_key(moved) == topology_key(res.graph));
    CHECK(moved.vertices == res.graph.vertices);
    CHECK(moved.edges == res.graph.edges);
  }
}

TEST_CASE("automorphisms are explicit and complete") {
  for (const auto& g : {theta(), dumbbell()}) {
    const auto auts = automorphisms(g);
    CHECK(long(auts.size()) == automorphism_count(g));
    std::set<std::vector<int>> distinct;
    for (const auto& p : auts) {
      distinct.insert(p);
      const TopologicalGraph moved = relabel_topology(g, p);
      // an automorphism preserves both partitions
      auto vs = g.vertices, ms = moved.vertices;
      std::sort(vs.begin(), vs.end());
      std::sort(ms.begin(), ms.end());
      CHECK(vs == ms);
      auto es = g.edges, mes = moved.edges;
      std::sort(es.begin(), es.end());
      std::sort(mes.begin(), mes.end());
      CHECK(es == mes);
    }
    CHECK(distinct.size() == auts.size());
  }
}

// ---- enumeration ----

TEST_CASE("enumeration counts at orders 1 and 2") {
  CHECK(enumerate_trivalent(1, true, true).size() == 2);
  CHECK(enumerate_trivalent(1, true, false).size() == 1);  // theta only
  CHECK(enumerate_trivalent(2, true, true).size() == 5);
  CHECK(enumerate_trivalent(2, true, false).size() == 2);
  CHECK(enumerate_trivalent(2, false, true).size() == 8);  // census classes
  // every enumerated graph is valid, canonical, and respects the flags
  for (const auto& g : enumerate_trivalent(2, true, true)) {
    CHECK(topology_valid(g));
    CHECK(is_connected(g));
    CHECK(topology_key(canonical_label(g).graph) == topology_key(g));
  }
  for (const auto& g : enumerate_trivalent(2, true, false)) CHECK(!has_self_loop(g));
}

TEST_CASE("order-2 automorphism table") {
  std::multiset<long> auts;
  for (const auto& g : enumerate_trivalent(2, true, true))
    auts.insert(automorphism_count(g));
  CHECK(auts == std::multiset<long>{8, 16, 16, 24, 48});
}

TEST_CASE("degree slices of the enumeration") {
  // (n=1, t=1): one vertex, two edges: the figure-eight
  const auto fig8s = enumerate_topologies(1, 1, true, true);
  REQUIRE(fig8s.size() == 1);
  CHECK(fig8s[0].vertices.size() == 1);
  CHECK(fig8s[0].edges.size() == 2);
  CHECK(has_self_loop(fig8s[0]));
  // (n=1, t=0) must agree with enumerate_trivalent
  CHECK(enumerate_topologies(1, 0, true, true).size() == 2);
  // degree-1 slice at order 2: 3 vertices, 5 edges, valency profile (3,3,4)
  for (const auto& g : enumerate_topologies(2, 1, true, true)) {
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges.size() == 5);
    std::multiset<std::size_t> sizes;
    for (const auto& b : g.vertices) sizes.insert(b.size());
    CHECK(sizes == std::multiset<std::size_t>{3, 3, 4});
  }
}

// ---- decorated graphs ----

TEST_CASE("default decoration is valid with low-to-high directions") {
  for (const auto& t : enumerate_trivalent(2, true, true)) {
    const DecoratedGraph d = default_decoration(t);
    CHECK(validate(d));
    for (auto [tail, head] : d.edges) CHECK(tail < head);
    CHECK(order(d) == 2);
    CHECK(degree(d) == 0);
  }
}

TEST_CASE("induced order puts the tail just before the head on self-loops") {
  const DecoratedGraph d = default_decoration(dumbbell());
  // canonical dumbbell: loops (1,3), (4,6), bridge (2,5)
  const auto o1 = induced_order(d, 1);
  REQUIRE(o1.size() == 3);
  CHECK(o1 == std::vector<int>{1, 3, 2});  // loop e1 contributes (1,3), bridge e2 adds 2
  CHECK(vertex_of(d, 1) == 1);
  CHECK(vertex_of(d, 5) == 2);
  CHECK(valency(d, 1) == 3);
}

TEST_CASE("validate rejects malformed decorations") {
  DecoratedGraph d = default_decoration(theta());
  CHECK(validate(d));
  DecoratedGraph bad = d;
  bad.trees[0].sign = 2;
  CHECK(!validate(bad));
  bad = d;
  bad.trees.pop_back();
  CHECK(!validate(bad));
  bad = d;
  bad.trees[0].word = make_leaf(1);  // malformed word for valency 3
  CHECK(!validate(bad));
  bad = d;
  bad.edges[0] = {1, 2};  // not a partition pairing anymore
  CHECK(!validate(bad));
}

TEST_CASE("relative orientation of the order-1 defaults") {
  CHECK(relative_orientation(default_decoration(theta())) == -1);
  CHECK(relative_orientation(default_decoration(dumbbell())) == 1);
  // non-trivalent input throws
  TopologicalGraph fig8;
  fig8.half_edges = 4;
  fig8.vertices = {{1, 2, 3, 4}};
  fig8.edges = {{1, 2}, {3, 4}};
  CHECK_THROWS_AS(relative_orientation(default_decoration(fig8)), std::invalid_argument);
}

TEST_CASE("disjoint union shifts the second factor consistently") {
  const DecoratedGraph a = default_decoration(theta());
  const DecoratedGraph b = default_decoration(dumbbell());
  const DecoratedGraph u = disjoint_union(a, b);
  CHECK(validate(u));
  CHECK(u.half_edges == 12);
  CHECK(u.vertices.size() == 4);
  CHECK(u.edges.size() == 6);
  CHECK(u.edges[3] == std::pair<int, int>{7, 9});  // dumbbell loop shifted by 6
  CHECK(!is_connected(underlying(u)));
}
