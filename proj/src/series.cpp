#include "liegc/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace liegc {

// ---- psi and the series terms ----

GraphVector psi(const TopologicalGraph& t) {
  const DecoratedGraph d = default_decoration(t);
  const int orient = relative_orientation(d);
  GraphVector v = normalize(d);
  v *= Rational(orient);
  return v;
}

GraphVector cs_cocycle(int n, bool include_self_loops) {
  if (n < 1) throw std::invalid_argument("cs_cocycle: order must be positive");
  GraphVector out;
  for (const auto& t : enumerate_trivalent(n, /*connected_only=*/true,
                                           /*allow_self_loops=*/include_self_loops)) {
    GraphVector term = psi(t);
    term *= Rational(1, automorphism_count(t));
    out += term;
  }
  return out;
}

// ---- pairing census ----

namespace {

struct Bucket {
  long count = 0;
  TopologicalGraph rep;
};

using BucketMap = std::map<std::string, Bucket>;

void merge_into(BucketMap& into, const BucketMap& from) {
  for (const auto& [k, b] : from) {
    auto& slot = into[k];
    slot.count += b.count;
    if (slot.rep.half_edges == 0) slot.rep = b.rep;
  }
}

// enumerate perfect matchings of the unmatched labels; smallest unmatched
// label pairs with every larger one
void match_rest(std::vector<std::pair<int, int>>& pairs, std::vector<bool>& used, int total,
                const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  int lo = -1;
  for (int h = 1; h <= total; ++h)
    if (!used[h]) { lo = h; break; }
  if (lo < 0) {
    emit(pairs);
    return;
  }
  used[lo] = true;
  for (int p = lo + 1; p <= total; ++p) {
    if (used[p]) continue;
    used[p] = true;
    pairs.emplace_back(lo, p);
    match_rest(pairs, used, total, emit);
    pairs.pop_back();
    used[p] = false;
  }
  used[lo] = false;
}

}  // namespace

CensusReport pairing_census(int n, int workers) {
  if (n < 1) throw std::invalid_argument("pairing_census: order must be positive");
  const int total = 6 * n;
  TopologicalGraph proto;
  proto.half_edges = total;
  for (int v = 0; v < 2 * n; ++v) {
    std::vector<int> blk(3);
    std::iota(blk.begin(), blk.end(), 3 * v + 1);
    proto.vertices.push_back(std::move(blk));
  }

  int nw = workers > 0 ? workers : int(std::thread::hardware_concurrency());
  if (nw < 1) nw = 1;
  nw = std::min(nw, total - 1);

  // split on the partner of half-edge 1; each worker owns a residue class
  std::vector<BucketMap> results(nw);
  auto run = [&](int w) {
    BucketMap& local = results[w];
    auto emit = [&](const std::vector<std::pair<int, int>>& pairs) {
      TopologicalGraph g = proto;
      g.edges = pairs;
      const TopologicalGraph canon = canonical_label(g).graph;
      auto& slot = local[topology_key(canon)];
      ++slot.count;
      if (slot.rep.half_edges == 0) slot.rep = canon;
    };
    for (int p = 2; p <= total; ++p) {
      if ((p - 2) % nw != w) continue;
      std::vector<std::pair<int, int>> pairs{{1, p}};
      std::vector<bool> used(total + 1, false);
      used[1] = used[p] = true;
      match_rest(pairs, used, total, emit);
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < nw; ++w) threads.emplace_back(run, w);
  for (auto& t : threads) t.join();

  BucketMap merged;
  for (const auto& r : results) merge_into(merged, r);

  // expected product (3!)^(2n) * (2n)!
  long expected = 1;
  for (int i = 0; i < 2 * n; ++i) expected *= 6;
  for (int i = 2; i <= 2 * n; ++i) expected *= i;

  CensusReport report;
  report.order = n;
  for (const auto& [key, b] : merged) {
    CensusClass c;
    c.graph = b.rep;  // already canonical
    c.count = b.count;
    c.aut = automorphism_count(b.rep);
    c.connected = is_connected(b.rep);
    c.identity = (c.count * c.aut == expected);
    report.total_matchings += c.count;
    report.classes.push_back(std::move(c));
  }
  report.identity_holds =
      std::all_of(report.classes.begin(), report.classes.end(),
                  [](const CensusClass& c) { return c.identity; });
  return report;
}

// ---- generating table ----

std::vector<GeneratingOrder> generating_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("generating_table: order must be positive");
  std::vector<GeneratingOrder> out;
  for (int n = 1; n <= max_n; ++n) {
    GeneratingOrder row;
    row.order = n;
    for (const auto& t : enumerate_trivalent(n, /*connected_only=*/true,
                                             /*allow_self_loops=*/true)) {
      GeneratingRow r;
      r.graph = t;
      r.aut = automorphism_count(t);
      r.orientation = relative_orientation(default_decoration(t));
      r.coefficient = Rational(r.orientation) * Rational(1, r.aut);
      r.has_loop = has_self_loop(t);
      row.rows.push_back(std::move(r));
    }
    row.is_cocycle = delta(cs_cocycle(n, true)).is_zero();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace liegc
