#include "liegc/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liegc {

// ---- topology basics ----

bool topology_valid(const TopologicalGraph& g, std::vector<std::string>* why) {
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (why) why->push_back(msg);
  };
  const int H = g.half_edges;
  if (H <= 0 || H % 2 != 0) fail("half_edge_count must be a positive even number");
  std::vector<int> vcover(H + 1, 0), ecover(H + 1, 0);
  for (const auto& blk : g.vertices) {
    if (blk.size() < 3) fail("vertex block of size < 3");
    for (int h : blk) {
      if (h < 1 || h > H) fail("vertex block references half-edge out of range");
      else ++vcover[h];
    }
  }
  for (const auto& [a, b] : g.edges) {
    for (int h : {a, b}) {
      if (h < 1 || h > H) fail("edge references half-edge out of range");
      else ++ecover[h];
    }
    if (a == b) fail("edge pairs a half-edge with itself");
  }
  for (int h = 1; h <= H; ++h) {
    if (vcover[h] != 1) fail("half-edge " + std::to_string(h) + " not covered exactly once by vertices");
    if (ecover[h] != 1) fail("half-edge " + std::to_string(h) + " not covered exactly once by edges");
  }
  return ok;
}

static std::vector<int> partner_map(const TopologicalGraph& g) {
  std::vector<int> p(g.half_edges + 1, 0);
  for (const auto& [a, b] : g.edges) {
    p[a] = b;
    p[b] = a;
  }
  return p;
}

static std::vector<int> vertex_map(const TopologicalGraph& g) {
  std::vector<int> v(g.half_edges + 1, -1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (int h : g.vertices[i]) v[h] = int(i);
  return v;
}

bool is_connected(const TopologicalGraph& g) {
  const int nv = int(g.vertices.size());
  if (nv == 0) return false;
  const auto part = partner_map(g);
  const auto vmap = vertex_map(g);
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int h : g.vertices[v]) {
      const int w = vmap[part[h]];
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == nv;
}

bool has_self_loop(const TopologicalGraph& g) {
  const auto vmap = vertex_map(g);
  for (const auto& [a, b] : g.edges)
    if (vmap[a] == vmap[b]) return true;
  return false;
}

std::string topology_key(const TopologicalGraph& g) {
  // Encoding of a canonically labeled graph: block sizes + streaming edge
  // code (partner label if already seen, else 0, in label order).
  std::ostringstream os;
  os << "V";
  for (const auto& blk : g.vertices) os << ":" << blk.size();
  os << "|E";
  const auto part = partner_map(g);
  for (int h = 1; h <= g.half_edges; ++h) os << ":" << (part[h] < h ? part[h] : 0);
  return os.str();
}

// ---- vertex colors (isomorphism-invariant refinement) ----

static std::vector<int> vertex_colors(const TopologicalGraph& g) {
  const int nv = int(g.vertices.size());
  const auto part = partner_map(g);
  const auto vmap = vertex_map(g);
  // Initial color: (valency, #self-loop half-edges at the vertex).
  std::vector<std::pair<int, int>> base(nv);
  for (int v = 0; v < nv; ++v) {
    int loops = 0;
    for (int h : g.vertices[v])
      if (vmap[part[h]] == v) ++loops;
    base[v] = {int(g.vertices[v].size()), loops};
  }
  std::map<std::pair<int, int>, int> base_rank;
  for (const auto& b : base) base_rank.emplace(b, 0);
  int r = 0;
  for (auto& [k, v] : base_rank) v = r++;
  std::vector<int> color(nv);
  for (int v = 0; v < nv; ++v) color[v] = base_rank[base[v]];
  // Weisfeiler-Leman style refinement with neighbor multisets.
  for (int round = 0; round < nv; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(nv);
    for (int v = 0; v < nv; ++v) {
      std::vector<int> nb;
      for (int h : g.vertices[v]) nb.push_back(color[vmap[part[h]]]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {color[v], std::move(nb)};
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int rr = 0;
    for (auto& [k, v] : rank) v = rr++;
    std::vector<int> next(nv);
    for (int v = 0; v < nv; ++v) next[v] = rank[sig[v]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// ---- canonical labeling search ----
//
// Assign new labels vertex block by vertex block.  At each step every
// still-unprocessed vertex of minimal color is a candidate; within the chosen
// vertex all half-edge orders are candidates.  The streaming encoding lists,
// per newly labeled half-edge, its partner's new label if already assigned
// (else 0).  The lexicographically least full encoding is the canonical
// form; the number of leaves attaining it equals |Aut|.

namespace {

struct CanonSearch {
  const TopologicalGraph& g;
  int H, nv;
  std::vector<int> part, vmap, color;
  std::vector<int> newlab;      // old half-edge -> new label (0 = none)
  std::vector<char> vdone;
  std::vector<int> enc;         // current encoding (grows/shrinks)
  std::vector<int> vorder;      // processed vertices, input indices
  std::vector<int> best_enc;
  std::vector<int> best_lab;    // old half-edge -> canonical label
  std::vector<std::vector<int>> best_blocks;  // block sizes in processing order
  bool have_best = false;
  long aut = 0;

  explicit CanonSearch(const TopologicalGraph& gg)
      : g(gg), H(gg.half_edges), nv(int(gg.vertices.size())),
        part(partner_map(gg)), vmap(vertex_map(gg)), color(vertex_colors(gg)),
        newlab(H + 1, 0), vdone(nv, 0) {}

  // status: 0 = prefix equals best so far, -1 = prefix strictly less.
  // Returns true if best was replaced somewhere inside this subtree.
  bool dfs(int status) {
    if (int(vorder.size()) == nv) {
      if (!have_best || status < 0) {
        have_best = true;
        best_enc = enc;
        best_lab.assign(newlab.begin(), newlab.end());
        best_blocks.clear();
        for (int v : vorder) best_blocks.push_back(g.vertices[v]);
        aut = 1;
        return true;
      }
      ++aut;
      return false;
    }
    int cmin = -1;
    for (int v = 0; v < nv; ++v)
      if (!vdone[v] && (cmin < 0 || color[v] < cmin)) cmin = color[v];
    bool replaced = false;
    for (int v = 0; v < nv; ++v) {
      if (vdone[v] || color[v] != cmin) continue;
      std::vector<int> hs = g.vertices[v];
      std::sort(hs.begin(), hs.end());
      // Iterate all orders of this block's half-edges.
      std::vector<int> perm(hs.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        int st = status;
        bool pruned = false;
        const std::size_t enc0 = enc.size();
        int next_label = int(enc0) + 1;
        for (std::size_t i = 0; i < perm.size() && !pruned; ++i) {
          const int h = hs[perm[i]];
          newlab[h] = next_label++;
          const int p = part[h];
          const int code = newlab[p];  // 0 if partner unlabeled
          enc.push_back(code);
          if (have_best && st == 0) {
            const int b = best_enc[enc.size() - 1];
            if (code > b) pruned = true;
            else if (code < b) st = -1;
          }
        }
        if (!pruned) {
          vdone[v] = 1;
          vorder.push_back(v);
          if (dfs(st)) {
            replaced = true;
            status = 0;  // our prefix now coincides with the new best
          }
          vorder.pop_back();
          vdone[v] = 0;
        }
        // undo labels + encoding
        for (std::size_t i = enc.size(); i > enc0; --i) enc.pop_back();
        for (std::size_t i = 0; i < perm.size(); ++i) newlab[hs[perm[i]]] = 0;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return replaced;
  }
};

}  // namespace

CanonicalResult canonical_label(const TopologicalGraph& g) {
  if (!topology_valid(g)) throw std::invalid_argument("canonical_label: invalid topology");
  CanonSearch s(g);
  s.dfs(0);
  CanonicalResult res;
  res.witness.assign(s.best_lab.begin() + 1, s.best_lab.end());
  res.aut_count = s.aut;
  // Rebuild the canonical graph by applying the witness.
  TopologicalGraph c;
  c.half_edges = g.half_edges;
  for (const auto& blk : s.best_blocks) {
    std::vector<int> nb;
    for (int h : blk) nb.push_back(s.best_lab[h]);
    std::sort(nb.begin(), nb.end());
    c.vertices.push_back(std::move(nb));
  }
  for (const auto& [a, b] : g.edges) {
    const int x = s.best_lab[a], y = s.best_lab[b];
    c.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(c.edges.begin(), c.edges.end());
  res.graph = std::move(c);
  return res;
}

long automorphism_count(const TopologicalGraph& g) { return canonical_label(g).aut_count; }

// ---- explicit automorphisms (independent backtracker) ----

namespace {

struct AutSearch {
  const TopologicalGraph& g;
  int H, nv;
  std::vector<int> part, vmap, color;
  std::vector<std::vector<int>> blocks;  // sorted half-edge lists
  std::vector<int> vimg;                 // vertex -> image vertex (-1 = unset)
  std::vector<char> vtaken;
  std::vector<int> himg;                 // half-edge -> image (0 = unset)
  std::vector<std::vector<int>> out;

  explicit AutSearch(const TopologicalGraph& gg)
      : g(gg), H(gg.half_edges), nv(int(gg.vertices.size())),
        part(partner_map(gg)), vmap(vertex_map(gg)), color(vertex_colors(gg)),
        vimg(nv, -1), vtaken(nv, 0), himg(H + 1, 0) {
    for (const auto& blk : g.vertices) {
      auto b = blk;
      std::sort(b.begin(), b.end());
      blocks.push_back(std::move(b));
    }
  }

  bool consistent(int h) const {
    // If both h and its partner are mapped, images must be partners too.
    const int p = part[h];
    if (himg[h] && himg[p]) return part[himg[h]] == himg[p];
    return true;
  }

  void extend(int v) {
    if (v == nv) {
      std::vector<int> perm(H);
      for (int h = 1; h <= H; ++h) perm[h - 1] = himg[h];
      out.push_back(std::move(perm));
      return;
    }
    for (int w = 0; w < nv; ++w) {
      if (vtaken[w] || color[w] != color[v] || blocks[w].size() != blocks[v].size()) continue;
      // try all bijections blocks[v] -> blocks[w]
      std::vector<int> perm(blocks[v].size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i) {
          himg[blocks[v][i]] = blocks[w][perm[i]];
          if (!consistent(blocks[v][i])) ok = false;
        }
        if (ok) {
          vimg[v] = w;
          vtaken[w] = 1;
          extend(v + 1);
          vtaken[w] = 0;
          vimg[v] = -1;
        }
        for (std::size_t i = 0; i < perm.size(); ++i) himg[blocks[v][i]] = 0;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
};

}  // namespace

std::vector<std::vector<int>> automorphisms(const TopologicalGraph& g) {
  AutSearch s(g);
  s.extend(0);
  return s.out;
}

// ---- enumeration ----

namespace {

// All perfect matchings of `elems` (ascending), calling f on each.
void for_matchings(std::vector<int>& elems, std::vector<std::pair<int, int>>& acc,
                   const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
  if (elems.empty()) {
    f(acc);
    return;
  }
  const int a = elems.front();
  for (std::size_t i = 1; i < elems.size(); ++i) {
    const int b = elems[i];
    std::vector<int> rest;
    rest.reserve(elems.size() - 2);
    for (std::size_t j = 1; j < elems.size(); ++j)
      if (j != i) rest.push_back(elems[j]);
    acc.emplace_back(a, b);
    for_matchings(rest, acc, f);
    acc.pop_back();
  }
}

std::vector<TopologicalGraph> enumerate_profile(const std::vector<int>& valencies,
                                                bool connected_only, bool allow_self_loops) {
  TopologicalGraph proto;
  proto.half_edges = std::accumulate(valencies.begin(), valencies.end(), 0);
  int next = 1;
  for (int k : valencies) {
    std::vector<int> blk(k);
    std::iota(blk.begin(), blk.end(), next);
    next += k;
    proto.vertices.push_back(std::move(blk));
  }
  std::map<std::string, TopologicalGraph> buckets;
  std::vector<int> elems(proto.half_edges);
  std::iota(elems.begin(), elems.end(), 1);
  std::vector<std::pair<int, int>> acc;
  for_matchings(elems, acc, [&](const std::vector<std::pair<int, int>>& m) {
    TopologicalGraph g = proto;
    g.edges = m;
    if (!allow_self_loops && has_self_loop(g)) return;
    if (connected_only && !is_connected(g)) return;
    auto canon = canonical_label(g).graph;
    buckets.emplace(topology_key(canon), std::move(canon));
  });
  std::vector<TopologicalGraph> out;
  out.reserve(buckets.size());
  for (auto& [k, v] : buckets) out.push_back(std::move(v));
  return out;
}

void partitions_of(int t, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (t == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(t, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(t - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TopologicalGraph> enumerate_trivalent(int n, bool connected_only,
                                                  bool allow_self_loops) {
  if (n < 1) throw std::invalid_argument("enumerate_trivalent: n >= 1 required");
  return enumerate_profile(std::vector<int>(2 * n, 3), connected_only, allow_self_loops);
}

std::vector<TopologicalGraph> enumerate_topologies(int n, int t, bool connected_only,
                                                   bool allow_self_loops) {
  if (n < 1 || t < 0) throw std::invalid_argument("enumerate_topologies: bad grade");
  const int nv = 2 * n - t;
  if (nv < 1) return {};
  std::map<std::string, TopologicalGraph> buckets;
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_of(t, t, cur, parts);
  for (const auto& lambda : parts) {
    if (int(lambda.size()) > nv) continue;
    std::vector<int> valencies(nv, 3);
    for (std::size_t i = 0; i < lambda.size(); ++i) valencies[i] += lambda[i];
    std::sort(valencies.begin(), valencies.end());
    for (auto& g : enumerate_profile(valencies, connected_only, allow_self_loops))
      buckets.emplace(topology_key(g), std::move(g));
  }
  std::vector<TopologicalGraph> out;
  out.reserve(buckets.size());
  for (auto& [k, v] : buckets) out.push_back(std::move(v));
  return out;
}

// ---- decorated graphs ----

TopologicalGraph underlying(const DecoratedGraph& g) {
  TopologicalGraph t;
  t.half_edges = g.half_edges;
  t.vertices = g.vertices;
  for (const auto& [a, b] : g.edges) t.edges.emplace_back(std::min(a, b), std::max(a, b));
  return t;
}

int order(const DecoratedGraph& g) { return int(g.edges.size()) - int(g.vertices.size()); }
int degree(const DecoratedGraph& g) {
  return 2 * int(g.edges.size()) - 3 * int(g.vertices.size());
}

int vertex_of(const DecoratedGraph& g, int h) {
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (int x : g.vertices[i])
      if (x == h) return int(i) + 1;
  return 0;
}

int valency(const DecoratedGraph& g, int v) { return int(g.vertices.at(v - 1).size()); }

std::vector<int> induced_order(const DecoratedGraph& g, int v) {
  std::vector<int> out;
  const auto& blk = g.vertices.at(v - 1);
  auto at_v = [&](int h) { return std::find(blk.begin(), blk.end(), h) != blk.end(); };
  for (const auto& [tail, head] : g.edges) {
    if (at_v(tail)) out.push_back(tail);   // (i, e, +1) just before (i, e, -1)
    if (at_v(head)) out.push_back(head);
  }
  return out;
}

bool validate(const DecoratedGraph& g, std::vector<std::string>* why) {
  bool ok = topology_valid(underlying(g), why);
  if (g.trees.size() != g.vertices.size()) {
    ok = false;
    if (why) why->push_back("tree count != vertex count");
    return ok;
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const int n = int(g.vertices[i].size());
    const auto& t = g.trees[i];
    if (t.sign != 1 && t.sign != -1) {
      ok = false;
      if (why) why->push_back("tree sign must be +1 or -1 at vertex " + std::to_string(i + 1));
    }
    if (!word_well_formed(t.word, n)) {
      ok = false;
      if (why)
        why->push_back("insertion tree at vertex " + std::to_string(i + 1) +
                       " is not a grounded word on leaves 1.." + std::to_string(n - 1));
    }
  }
  return ok;
}

DecoratedGraph default_decoration(const TopologicalGraph& canonical) {
  DecoratedGraph d;
  d.half_edges = canonical.half_edges;
  d.vertices = canonical.vertices;
  d.edges = canonical.edges;  // already (lo, hi) pairs
  std::sort(d.edges.begin(), d.edges.end());
  for (const auto& blk : canonical.vertices) {
    const int n = int(blk.size());
    std::vector<int> tail(n - 2);
    std::iota(tail.begin(), tail.end(), 2);
    d.trees.push_back(InsertionTree{comb_word(tail), +1});
  }
  return d;
}

int relative_orientation(const DecoratedGraph& g) {
  if (degree(g) != 0)
    throw std::invalid_argument("relative_orientation: trivalent graphs only");
  std::vector<int> edge_seq;
  for (const auto& [t, h] : g.edges) {
    edge_seq.push_back(t);
    edge_seq.push_back(h);
  }
  std::vector<int> vert_seq;
  for (std::size_t v = 1; v <= g.vertices.size(); ++v)
    for (int h : induced_order(g, int(v))) vert_seq.push_back(h);
  // Sign of the permutation taking edge_seq to vert_seq.
  std::vector<int> pos(g.half_edges + 1, 0);
  for (std::size_t i = 0; i < vert_seq.size(); ++i) pos[vert_seq[i]] = int(i);
  std::vector<int> perm;
  perm.reserve(edge_seq.size());
  for (int h : edge_seq) perm.push_back(pos[h]);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

DecoratedGraph disjoint_union(const DecoratedGraph& a, const DecoratedGraph& b) {
  DecoratedGraph u = a;
  const int shift = a.half_edges;
  u.half_edges += b.half_edges;
  for (const auto& blk : b.vertices) {
    std::vector<int> nb;
    for (int h : blk) nb.push_back(h + shift);
    u.vertices.push_back(std::move(nb));
  }
  for (const auto& [t, h] : b.edges) u.edges.emplace_back(t + shift, h + shift);
  for (const auto& t : b.trees) u.trees.push_back(t);
  return u;
}

}  // namespace liegc
