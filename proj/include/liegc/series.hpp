#pragma once
// ---- Chern-Simons generating-series cocycles and the matching census ----

#include <map>
#include <string>
#include <vector>

#include "liegc/complex.hpp"
#include "liegc/graph.hpp"

namespace liegc {

/// Psi: or_Gamma * normalize(default_decoration(t)) for trivalent t;
/// decoration-independent.
GraphVector psi(const TopologicalGraph& t);

/// Sum over connected trivalent graphs of order n (with or without
/// self-loops) of 1/|Aut| * psi; a cocycle for delta (resp. delta_sharp).
GraphVector cs_cocycle(int n, bool include_self_loops);

struct CensusClass {
  TopologicalGraph graph;   // canonical form
  long count = 0;           // matchings in this class
  long aut = 0;             // |Aut|
  bool connected = false;
  bool identity = false;    // count * aut == (3!)^(2n) * (2n)!
};

struct CensusReport {
  int order = 0;
  long total_matchings = 0;
  std::vector<CensusClass> classes;   // sorted by canonical key
  bool identity_holds = false;        // all classes pass
};

/// Enumerate all perfect matchings of 6n half-edges against the fixed
/// trivalent vertex partition, bucket by canonical form and verify
/// count * |Aut| = (3!)^(2n) (2n)! for every class (disconnected included).
/// workers <= 0 means hardware concurrency.
CensusReport pairing_census(int n, int workers = 0);

struct GeneratingRow {
  TopologicalGraph graph;
  long aut = 0;
  int orientation = 0;     // or_Gamma of the default decoration
  Rational coefficient;    // or / |Aut|
  bool has_loop = false;
};

struct GeneratingOrder {
  int order = 0;
  std::vector<GeneratingRow> rows;    // connected classes
  bool is_cocycle = false;            // delta(term) == 0
};

/// Per order n <= max_n: the connected classes with |Aut|, orientation and
/// series coefficient, plus the cocycle-verification status of the term.
std::vector<GeneratingOrder> generating_table(int max_n);

}  // namespace liegc
