#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "liegc/complex.hpp"
#include "liegc/graph.hpp"
#include "liegc/series.hpp"
#include "liegc/tree.hpp"

using namespace liegc;

namespace {

TopologicalGraph theta_topology() {
  TopologicalGraph g;
  g.half_edges = 6;
  g.vertices = {{1, 2, 3}, {4, 5, 6}};
  g.edges = {{1, 4}, {2, 5}, {3, 6}};
  return g;
}

TopologicalGraph dumbbell_topology() {
  TopologicalGraph g;
  g.half_edges = 6;
  g.vertices = {{1, 2, 3}, {4, 5, 6}};
  g.edges = {{1, 3}, {2, 5}, {4, 6}};
  return g;
}

DecoratedGraph gamma1() {
  DecoratedGraph d;
  d.half_edges = 12;
  d.vertices = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}};
  d.edges = {{1, 4}, {5, 7}, {8, 10}, {11, 2}, {3, 9}, {6, 12}};
  d.trees.resize(4);
  for (auto& t : d.trees) {
    t.sign = 1;
    t.word = make_pair(make_leaf(1), make_leaf(2));
  }
  return d;
}

DecoratedGraph gamma2() {
  DecoratedGraph d = gamma1();
  d.edges = {{1, 4}, {7, 10}, {5, 8}, {6, 9}, {2, 11}, {3, 12}};
  return d;
}

bool equal(const GraphVector& a, const GraphVector& b) {
  GraphVector d = a;
  d += Rational(-1) * b;
  return d.is_zero();
}

}  // namespace

// ---- psi and the series terms ----

TEST_CASE("psi twists normalize by the relative orientation") {
  const GraphVector th = normalize(default_decoration(theta_topology()));
  const GraphVector db = normalize(default_decoration(dumbbell_topology()));
  CHECK(equal(psi(theta_topology()), Rational(-1) * th));
  CHECK(equal(psi(dumbbell_topology()), db));
}

TEST_CASE("order-1 series term has the announced coefficients") {
  const GraphVector th = normalize(default_decoration(theta_topology()));
  const GraphVector db = normalize(default_decoration(dumbbell_topology()));
  GraphVector expect = Rational(-1, 12) * th;
  expect += Rational(1, 8) * db;
  CHECK(equal(cs_cocycle(1, true), expect));
  // without self-loops only the theta survives
  CHECK(equal(cs_cocycle(1, false), Rational(-1, 12) * th));
}

TEST_CASE("series terms are cocycles") {
  CHECK(delta(cs_cocycle(1, true)).is_zero());
  CHECK(delta(cs_cocycle(2, true)).is_zero());
  CHECK(delta_sharp(cs_cocycle(1, false)).is_zero());
  CHECK(delta_sharp(cs_cocycle(2, false)).is_zero());
}

TEST_CASE("loopless series term is the quotient projection") {
  CHECK(equal(cs_cocycle(2, false), project_quotient(cs_cocycle(2, true))));
}

TEST_CASE("order-2 loopless term against the hand-built cocycle") {
  const GraphVector g1 = normalize(gamma1());
  const GraphVector g2 = normalize(gamma2());
  GraphVector ref = Rational(1, 12) * g1;
  ref += Rational(-1, 8) * g2;
  CHECK(equal(cs_cocycle(2, false), Rational(-1, 2) * ref));
}

// ---- the matching census ----

TEST_CASE("census at order 1") {
  const CensusReport r = pairing_census(1);
  CHECK(r.order == 1);
  CHECK(r.total_matchings == 15);
  CHECK(r.identity_holds);
  REQUIRE(r.classes.size() == 2);
  std::map<long, long> by_aut;  // aut -> count
  for (const auto& c : r.classes) {
    CHECK(c.identity);
    CHECK(c.connected);
    CHECK(c.count * c.aut == 72);
    by_aut[c.aut] = c.count;
    CHECK(topology_key(canonical_label(c.graph).graph) == topology_key(c.graph));
  }
  CHECK(by_aut.at(12) == 6);
  CHECK(by_aut.at(8) == 9);
  // the two class representatives are the canonical theta and dumbbell
  const std::string tk = topology_key(canonical_label(theta_topology()).graph);
  const std::string dk = topology_key(canonical_label(dumbbell_topology()).graph);
  std::vector<std::string> keys;
  for (const auto& c : r.classes) keys.push_back(topology_key(c.graph));
  CHECK(std::count(keys.begin(), keys.end(), tk) == 1);
  CHECK(std::count(keys.begin(), keys.end(), dk) == 1);
}

TEST_CASE("census at order 2") {
  const CensusReport r = pairing_census(2);
  CHECK(r.total_matchings == 10395);
  CHECK(r.identity_holds);
  REQUIRE(r.classes.size() == 8);
  std::multiset<long> counts, connected_counts;
  int connected = 0;
  for (const auto& c : r.classes) {
    CHECK(c.identity);
    CHECK(c.count * c.aut == 31104);
    counts.insert(c.count);
    if (c.connected) {
      ++connected;
      connected_counts.insert(c.count);
    }
  }
  CHECK(connected == 5);
  CHECK(counts == std::multiset<long>{108, 243, 324, 648, 1296, 1944, 1944, 3888});
  CHECK(connected_counts == std::multiset<long>{648, 1296, 1944, 1944, 3888});
}

TEST_CASE("census is independent of worker count") {
  const CensusReport a = pairing_census(2, 1);
  const CensusReport b = pairing_census(2, 4);
  REQUIRE(a.classes.size() == b.classes.size());
  CHECK(a.total_matchings == b.total_matchings);
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(topology_key(a.classes[i].graph) == topology_key(b.classes[i].graph));
    CHECK(a.classes[i].count == b.classes[i].count);
    CHECK(a.classes[i].aut == b.classes[i].aut);
  }
}

// ---- the generating table ----

TEST_CASE("generating table rows carry or over aut") {
  const auto table = generating_table(2);
  REQUIRE(table.size() == 2);
  CHECK(table[0].order == 1);
  CHECK(table[1].order == 2);
  CHECK(table[0].rows.size() == 2);
  CHECK(table[1].rows.size() == 5);
  CHECK(table[0].is_cocycle);
  CHECK(table[1].is_cocycle);
  for (const auto& ord : table)
    for (const auto& row : ord.rows) {
      CHECK((row.orientation == 1 || row.orientation == -1));
      CHECK(row.coefficient == Rational(row.orientation, int(row.aut)));
      CHECK(row.has_loop == has_self_loop(row.graph));
    }
  // the theta row: |Aut| = 12, orientation -1
  bool found_theta = false;
  const std::string tk = topology_key(canonical_label(theta_topology()).graph);
  for (const auto& row : table[0].rows)
    if (topology_key(row.graph) == tk) {
      found_theta = true;
      CHECK(row.aut == 12);
      CHECK(row.orientation == -1);
      CHECK(row.coefficient == Rational(-1, 12));
    }
  CHECK(found_theta);
}
