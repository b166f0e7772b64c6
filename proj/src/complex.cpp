#include "liegc/complex.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liegc {

// ---- keys ----

static std::string tuple_key(const CombTuple& t) {
  std::ostringstream os;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (v) os << ";";
    for (std::size_t i = 0; i < t[v].size(); ++i) {
      if (i) os << ",";
      os << t[v][i];
    }
  }
  return os.str();
}

static CombTuple tuple_from_key(const std::string& s, std::size_t nv) {
  CombTuple t;
  std::string cur;
  std::vector<std::string> parts;
  {
    std::stringstream ss(s);
    std::string p;
    while (std::getline(ss, p, ';')) parts.push_back(p);
    while (parts.size() < nv) parts.push_back("");  // empty tails (not expected)
  }
  for (const auto& p : parts) {
    std::vector<int> tail;
    std::stringstream ss(p);
    std::string x;
    while (std::getline(ss, x, ',')) tail.push_back(std::stoi(x));
    t.push_back(std::move(tail));
  }
  return t;
}

std::string GraphClass::key() const { return topo_key + "#" + tuple_key(tuple); }

static TopologicalGraph topology_from_key(const std::string& key) {
  // "V:3:3|E:0:0:0:1:2:3"
  const auto bar = key.find('|');
  if (bar == std::string::npos || key.substr(0, 1) != "V")
    throw std::invalid_argument("topology_from_key: bad key");
  TopologicalGraph g;
  {
    std::stringstream ss(key.substr(1, bar - 1));
    std::string x;
    int next = 1;
    while (std::getline(ss, x, ':')) {
      if (x.empty()) continue;
      const int sz = std::stoi(x);
      std::vector<int> blk(sz);
      std::iota(blk.begin(), blk.end(), next);
      next += sz;
      g.vertices.push_back(std::move(blk));
      g.half_edges += sz;
    }
  }
  {
    std::stringstream ss(key.substr(bar + 2));
    std::string x;
    int h = 0;
    while (std::getline(ss, x, ':')) {
      if (x.empty()) continue;
      ++h;
      const int c = std::stoi(x);
      if (c > 0) g.edges.emplace_back(c, h);
    }
    std::sort(g.edges.begin(), g.edges.end());
  }
  return g;
}

GraphClass class_from_key(const std::string& key) {
  const auto hash = key.find('#');
  if (hash == std::string::npos) throw std::invalid_argument("class_from_key: bad key");
  GraphClass c;
  c.topo_key = key.substr(0, hash);
  const auto g = topology_from_key(c.topo_key);
  c.tuple = tuple_from_key(key.substr(hash + 1), g.vertices.size());
  return c;
}

// ---- GraphVector ----

void GraphVector::add_term(const GraphClass& c, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto& slot = terms[c.key()];
  slot += coeff;
  if (slot.is_zero()) terms.erase(c.key());
}

GraphVector& GraphVector::operator+=(const GraphVector& o) {
  for (const auto& [k, x] : o.terms) {
    auto& slot = terms[k];
    slot += x;
    if (slot.is_zero()) terms.erase(k);
  }
  return *this;
}

GraphVector& GraphVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [k, x] : terms) x *= c;
  return *this;
}

QVector to_qvector(const GraphVector& v) {
  QVector q;
  for (const auto& [k, x] : v.terms) q[k] = x;
  return q;
}

// ---- decorated-graph relabeling (tree transport included) ----

namespace {

std::vector<int> induced_order_of(const std::vector<std::vector<int>>& vertices,
                                  const std::vector<std::pair<int, int>>& edges, int v) {
  std::vector<int> out;
  const auto& blk = vertices.at(v - 1);
  auto at_v = [&](int h) { return std::find(blk.begin(), blk.end(), h) != blk.end(); };
  for (const auto& [tail, head] : edges) {
    if (at_v(tail)) out.push_back(tail);
    if (at_v(head)) out.push_back(head);
  }
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Relabel all half-edges through perm (old label -> new label), keeping all
// numberings; trees are transported through the induced-order slot change.
DecoratedGraph relabel_decorated(const DecoratedGraph& g, const std::vector<int>& perm) {
  DecoratedGraph out;
  out.half_edges = g.half_edges;
  auto map_h = [&](int h) { return perm.at(h - 1); };
  for (const auto& blk : g.vertices) {
    std::vector<int> nb;
    for (int h : blk) nb.push_back(map_h(h));
    std::sort(nb.begin(), nb.end());
    out.vertices.push_back(std::move(nb));
  }
  for (const auto& [t, h] : g.edges) out.edges.emplace_back(map_h(t), map_h(h));
  out.trees.resize(g.trees.size());
  for (std::size_t v = 1; v <= g.vertices.size(); ++v) {
    const auto old_ord = induced_order(g, int(v));
    const auto new_ord = induced_order_of(out.vertices, out.edges, int(v));
    const int n = int(old_ord.size());
    std::vector<int> slot_map(n);
    for (int p = 0; p < n; ++p) {
      const int img = map_h(old_ord[p]);
      const auto it = std::find(new_ord.begin(), new_ord.end(), img);
      slot_map[p] = int(it - new_ord.begin()) + 1;
    }
    const auto& t = g.trees[v - 1];
    auto [s, w] = slot_transport(t.word, slot_map, n);
    out.trees[v - 1] = InsertionTree{w, t.sign * s};
  }
  return out;
}

// ---- topology info: skeleton + automorphism quotient of the tree space ----

struct TopologyInfo {
  TopologicalGraph canon;
  std::string key;
  DecoratedGraph skeleton;                       // default decoration (comb trees)
  std::vector<CombTuple> basis_tuples;           // all tuples, lex order
  std::vector<CombTuple> class_tuples;           // non-pivot tuples
  std::map<std::string, CombTuple> tuple_of_key;
  std::map<std::string, QVector> reduction;      // tuple key -> class-tuple combo
};

// Standardize a decorated graph whose half-edge labels and vertex blocks
// already match `skel` (as sets): fix directions, renumber edges and
// vertices, and return the overall sign together with the comb coordinates
// of the tree tuple.
std::pair<Rational, std::map<std::string, Rational>> standardize(
    const DecoratedGraph& input, const DecoratedGraph& skel) {
  DecoratedGraph g = input;
  int sign = 1;

  // (1) directions: canonical is (lo, hi); self-loop reversal also swaps the
  // loop's two adjacent slots in the owner's tree.
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    auto [t, h] = g.edges[k];
    if (t < h) continue;
    const int vt = vertex_of(g, t), vh = vertex_of(g, h);
    if (vt == vh) {
      const auto ord = induced_order(g, vt);
      const int p = int(std::find(ord.begin(), ord.end(), t) - ord.begin()) + 1;
      // tail sits just before head: slots p, p+1 swap
      const int n = int(ord.size());
      std::vector<int> tr(n);
      std::iota(tr.begin(), tr.end(), 1);
      std::swap(tr[p - 1], tr[p]);
      auto [s, w] = slot_transport(g.trees[vt - 1].word, tr, n);
      g.trees[vt - 1].word = w;
      g.trees[vt - 1].sign *= s;
    }
    g.edges[k] = {h, t};
    sign = -sign;
  }

  // (2) edge renumbering to the skeleton's (sorted) order; trees transported
  // through the induced-order change, no intrinsic sign.
  {
    std::vector<std::vector<int>> old_orders;
    for (std::size_t v = 1; v <= g.vertices.size(); ++v)
      old_orders.push_back(induced_order(g, int(v)));
    std::vector<std::pair<int, int>> sorted_edges = g.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    g.edges = sorted_edges;
    for (std::size_t v = 1; v <= g.vertices.size(); ++v) {
      const auto new_ord = induced_order(g, int(v));
      const auto& old_ord = old_orders[v - 1];
      const int n = int(old_ord.size());
      std::vector<int> slot_map(n);
      for (int p = 0; p < n; ++p) {
        const auto it = std::find(new_ord.begin(), new_ord.end(), old_ord[p]);
        slot_map[p] = int(it - new_ord.begin()) + 1;
      }
      auto [s, w] = slot_transport(g.trees[v - 1].word, slot_map, n);
      g.trees[v - 1].word = w;
      g.trees[v - 1].sign *= s;
    }
  }

  // (3) vertex renumbering to the skeleton's block order; sign of the
  // permutation.
  {
    std::map<std::vector<int>, int> target;  // sorted block -> skeleton position
    for (std::size_t i = 0; i < skel.vertices.size(); ++i) {
      auto b = skel.vertices[i];
      std::sort(b.begin(), b.end());
      target[b] = int(i);
    }
    std::vector<int> perm(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      auto b = g.vertices[i];
      std::sort(b.begin(), b.end());
      const auto it = target.find(b);
      if (it == target.end())
        throw std::logic_error("standardize: vertex blocks do not match skeleton");
      perm[i] = it->second;
    }
    sign *= perm_sign(perm);
    std::vector<std::vector<int>> nv(g.vertices.size());
    std::vector<InsertionTree> nt(g.trees.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      nv[perm[i]] = g.vertices[i];
      nt[perm[i]] = g.trees[i];
    }
    g.vertices = std::move(nv);
    g.trees = std::move(nt);
  }

  // (4) comb coordinates of the tree tuple.
  std::map<std::string, Rational> coords;
  std::vector<std::map<std::vector<int>, long>> per_vertex;
  long tree_signs = 1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    per_vertex.push_back(comb_coords(g.trees[v].word, int(g.vertices[v].size())));
    tree_signs *= g.trees[v].sign;
  }
  // cartesian product of sparse per-vertex coordinate maps
  CombTuple tuple(g.vertices.size());
  std::function<void(std::size_t, long)> walk = [&](std::size_t v, long coeff) {
    if (v == per_vertex.size()) {
      coords[tuple_key(tuple)] += Rational(coeff);
      return;
    }
    for (const auto& [tail, c] : per_vertex[v]) {
      tuple[v] = tail;
      walk(v + 1, coeff * c);
    }
  };
  walk(0, sign * tree_signs);
  for (auto it = coords.begin(); it != coords.end();)
    it = it->second.is_zero() ? coords.erase(it) : std::next(it);
  return {Rational(1), coords};
}

std::shared_ptr<const TopologyInfo> build_info(const TopologicalGraph& canon) {
  auto info = std::make_shared<TopologyInfo>();
  info->canon = canon;
  info->key = topology_key(canon);
  info->skeleton = default_decoration(canon);

  // all basis tuples, lexicographic
  std::vector<std::vector<std::vector<int>>> per_vertex_tails;
  for (const auto& blk : canon.vertices) {
    const int n = int(blk.size());
    std::vector<int> tail(n - 2);
    std::iota(tail.begin(), tail.end(), 2);
    std::vector<std::vector<int>> tails;
    do {
      tails.push_back(tail);
    } while (std::next_permutation(tail.begin(), tail.end()));
    per_vertex_tails.push_back(std::move(tails));
  }
  CombTuple cur(canon.vertices.size());
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == per_vertex_tails.size()) {
      info->basis_tuples.push_back(cur);
      return;
    }
    for (const auto& tail : per_vertex_tails[v]) {
      cur[v] = tail;
      walk(v + 1);
    }
  };
  walk(0);
  for (const auto& t : info->basis_tuples) info->tuple_of_key[tuple_key(t)] = t;

  // relation rows: A_sigma(b) - b over all automorphisms and basis tuples
  const auto auts = automorphisms(canon);
  std::vector<QVector> rows;
  for (const auto& sigma : auts) {
    bool identity = true;
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (sigma[i] != int(i) + 1) { identity = false; break; }
    if (identity) continue;
    for (const auto& b : info->basis_tuples) {
      DecoratedGraph rep = info->skeleton;
      for (std::size_t v = 0; v < b.size(); ++v)
        rep.trees[v] = InsertionTree{comb_word(b[v]), +1};
      const DecoratedGraph moved = relabel_decorated(rep, sigma);
      auto [one, coords] = standardize(moved, info->skeleton);
      (void)one;
      QVector row;
      for (const auto& [tk, c] : coords) row[tk] = c;
      auto it = row.find(tuple_key(b));
      if (it != row.end()) {
        it->second -= Rational(1);
        if (it->second.is_zero()) row.erase(it);
      } else {
        row[tuple_key(b)] = Rational(-1);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  std::vector<std::string> all_keys;
  for (const auto& t : info->basis_tuples) all_keys.push_back(tuple_key(t));
  const QMatrix m = make_matrix(rows, all_keys);
  const RrefResult rr = rref(m);
  std::set<std::string> pivot_set(rr.pivots.begin(), rr.pivots.end());
  for (const auto& t : info->basis_tuples) {
    const std::string tk = tuple_key(t);
    if (pivot_set.count(tk)) continue;
    info->class_tuples.push_back(t);
    QVector self;
    self[tk] = Rational(1);
    info->reduction[tk] = std::move(self);
  }
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    QVector img;
    for (const auto& [k, x] : rr.m.rows[i])
      if (k != rr.pivots[i]) img[k] = -x;
    info->reduction[rr.pivots[i]] = std::move(img);
  }
  return info;
}

std::map<std::string, std::shared_ptr<const TopologyInfo>>& info_cache() {
  static std::map<std::string, std::shared_ptr<const TopologyInfo>> cache;
  return cache;
}
std::mutex& info_mutex() {
  static std::mutex mu;
  return mu;
}

std::shared_ptr<const TopologyInfo> topology_info(const TopologicalGraph& canon) {
  const std::string key = topology_key(canon);
  {
    std::lock_guard<std::mutex> lk(info_mutex());
    auto it = info_cache().find(key);
    if (it != info_cache().end()) return it->second;
  }
  auto built = build_info(canon);
  std::lock_guard<std::mutex> lk(info_mutex());
  auto [it, inserted] = info_cache().emplace(key, std::move(built));
  return it->second;  // insert-if-absent: a concurrent build wins the race once
}

}  // namespace

// ---- class representative ----

DecoratedGraph class_representative(const GraphClass& c) {
  const auto topo = topology_from_key(c.topo_key);
  DecoratedGraph rep = default_decoration(topo);
  if (c.tuple.size() != rep.vertices.size())
    throw std::invalid_argument("class_representative: tuple/vertex mismatch");
  for (std::size_t v = 0; v < c.tuple.size(); ++v)
    rep.trees[v] = InsertionTree{comb_word(c.tuple[v]), +1};
  return rep;
}

bool class_has_self_loop(const GraphClass& c) {
  return has_self_loop(topology_from_key(c.topo_key));
}

bool class_is_connected(const GraphClass& c) {
  return is_connected(topology_from_key(c.topo_key));
}

int class_order(const GraphClass& c) {
  const auto t = topology_from_key(c.topo_key);
  return int(t.edges.size()) - int(t.vertices.size());
}

int class_degree(const GraphClass& c) {
  const auto t = topology_from_key(c.topo_key);
  return 2 * int(t.edges.size()) - 3 * int(t.vertices.size());
}

// ---- normalize ----

GraphVector normalize(const DecoratedGraph& g) {
  std::vector<std::string> why;
  if (!validate(g, &why)) {
    std::string msg = "normalize: invalid decorated graph";
    for (const auto& w : why) msg += "; " + w;
    throw std::invalid_argument(msg);
  }
  const auto canon_res = canonical_label(underlying(g));
  const auto info = topology_info(canon_res.graph);
  const DecoratedGraph aligned = relabel_decorated(g, canon_res.witness);
  auto [one, coords] = standardize(aligned, info->skeleton);
  (void)one;
  GraphVector out;
  for (const auto& [tk, c] : coords) {
    const auto red = info->reduction.find(tk);
    if (red == info->reduction.end())
      throw std::logic_error("normalize: unknown tuple key " + tk);
    for (const auto& [ck, x] : red->second) {
      GraphClass cls{info->key, info->tuple_of_key.at(ck)};
      out.add_term(cls, c * x);
    }
  }
  return out;
}

// ---- contraction ----

DecoratedGraph contract_edge(const DecoratedGraph& g, int e) {
  if (e < 1 || e > int(g.edges.size()))
    throw std::invalid_argument("contract_edge: edge number out of range");
  const auto [th, hh] = g.edges[e - 1];
  const int i = vertex_of(g, th), j = vertex_of(g, hh);
  if (i == j) throw std::invalid_argument("contract_edge: cannot contract a self-loop");

  const int ni = valency(g, i), nj = valency(g, j);
  const auto Oi = induced_order(g, i), Oj = induced_order(g, j);
  const int k_slot = int(std::find(Oi.begin(), Oi.end(), th) - Oi.begin()) + 1;
  const int l_slot = int(std::find(Oj.begin(), Oj.end(), hh) - Oj.begin()) + 1;

  // merge the two grounded words:  value = B(eval u_i, eval u_j)
  const auto& Ti = g.trees[i - 1];
  const auto& Tj = g.trees[j - 1];
  auto [sa, ui] = reground(Ti.word, ni, k_slot);
  auto [sb, uj0] = reground(Tj.word, nj, l_slot);
  std::map<int, int> shift;
  for (int s = 1; s <= nj; ++s) shift[s] = s + ni;
  const Word uj = relabel(uj0, shift);
  const int z = (l_slot == nj) ? (ni + nj - 1) : (ni + nj);
  auto [sc, merged0] = pair_to_ground(ui, uj, z);
  int tree_sign = Ti.sign * Tj.sign * sa * sb * sc;

  // build the contracted graph (keep old half-edge labels, compress later)
  const int lo = std::min(i, j), hi = std::max(i, j);
  DecoratedGraph out;
  out.half_edges = g.half_edges;  // two labels retired below
  for (int v = 1; v <= int(g.vertices.size()); ++v) {
    if (v == hi) continue;
    if (v == lo) {
      std::vector<int> blk;
      for (int h : g.vertices[i - 1])
        if (h != th) blk.push_back(h);
      for (int h : g.vertices[j - 1])
        if (h != hh) blk.push_back(h);
      std::sort(blk.begin(), blk.end());
      out.vertices.push_back(std::move(blk));
    } else {
      out.vertices.push_back(g.vertices[v - 1]);
    }
  }
  for (int k = 1; k <= int(g.edges.size()); ++k) {
    if (k == e) continue;
    out.edges.push_back(g.edges[k - 1]);
  }
  // trees: merged vertex gets the joined word transported to its new induced
  // order; all other vertices keep their trees (their slot orders are
  // untouched by removing an edge they are not incident to).
  for (int v = 1; v <= int(g.vertices.size()); ++v) {
    if (v == hi) continue;
    if (v != lo) {
      out.trees.push_back(g.trees[v - 1]);
      continue;
    }
    // juxtaposed slots: 1..ni = Oi, ni+1..ni+nj = Oj; removed: k_slot, ni+l_slot
    const auto new_ord = induced_order_of(out.vertices, out.edges, int(out.trees.size()) + 1);
    const int m = int(new_ord.size());
    auto final_slot = [&](int r) {
      const int h = (r <= ni) ? Oi[r - 1] : Oj[r - ni - 1];
      return int(std::find(new_ord.begin(), new_ord.end(), h) - new_ord.begin()) + 1;
    };
    std::map<int, int> to_final;
    for (int r = 1; r <= ni + nj; ++r) {
      if (r == k_slot || r == ni + l_slot) continue;
      to_final[r] = final_slot(r);
    }
    Word w = relabel(merged0, to_final);
    const int gz = to_final.at(z);
    if (gz != m) {
      auto [sd, w2] = pair_to_ground(make_leaf(gz), w, m);
      w = w2;
      tree_sign *= sd;
    }
    out.trees.push_back(InsertionTree{w, tree_sign});
  }

  // compress half-edge labels to 1..H-2 (order-preserving; slot orders and
  // trees unaffected)
  std::vector<int> remap(g.half_edges + 1, 0);
  int next = 1;
  for (int h = 1; h <= g.half_edges; ++h)
    if (h != th && h != hh) remap[h] = next++;
  out.half_edges = g.half_edges - 2;
  for (auto& blk : out.vertices)
    for (auto& h : blk) h = remap[h];
  for (auto& [t2, h2] : out.edges) {
    t2 = remap[t2];
    h2 = remap[h2];
  }
  return out;
}

// ---- differential ----

static int sigma_sign(int i, int j) {
  // (-1)^j for j > i, (-1)^(i+1) for j < i
  const int exp = (j > i) ? j : i + 1;
  return (exp % 2 == 0) ? +1 : -1;
}

GraphVector delta(const GraphVector& v) {
  GraphVector out;
  for (const auto& [key, coeff] : v.terms) {
    const GraphClass cls = class_from_key(key);
    const DecoratedGraph rep = class_representative(cls);
    for (int e = 1; e <= int(rep.edges.size()); ++e) {
      const auto [th, hh] = rep.edges[e - 1];
      const int i = vertex_of(rep, th), j = vertex_of(rep, hh);
      if (i == j) continue;  // self-loops are not contracted
      GraphVector piece = normalize(contract_edge(rep, e));
      piece *= coeff * Rational(sigma_sign(i, j));
      out += piece;
    }
  }
  return out;
}

GraphVector project_quotient(const GraphVector& v) {
  GraphVector out;
  for (const auto& [key, coeff] : v.terms) {
    if (!class_has_self_loop(class_from_key(key))) out.terms[key] = coeff;
  }
  return out;
}

GraphVector delta_sharp(const GraphVector& v) {
  for (const auto& [key, coeff] : v.terms) {
    if (class_has_self_loop(class_from_key(key)))
      throw std::invalid_argument("delta_sharp: input contains self-loop classes");
  }
  return project_quotient(delta(v));
}

GraphVector graph_union(const GraphVector& a, const GraphVector& b) {
  GraphVector out;
  for (const auto& [ka, ca] : a.terms) {
    const DecoratedGraph ra = class_representative(class_from_key(ka));
    for (const auto& [kb, cb] : b.terms) {
      const DecoratedGraph rb = class_representative(class_from_key(kb));
      GraphVector piece = normalize(disjoint_union(ra, rb));
      piece *= ca * cb;
      out += piece;
    }
  }
  return out;
}

// ---- bases ----

std::vector<GraphClass> basis(int n, int t, Variant variant, bool include_disconnected) {
  if (n < 1 || t < 0) throw std::invalid_argument("basis: unsupported grade");
  const bool allow_loops = (variant != Variant::quotient);
  auto topos = enumerate_topologies(n, t, /*connected_only=*/!include_disconnected,
                                    allow_loops);
  std::vector<GraphClass> out;
  for (const auto& topo : topos) {
    if (variant == Variant::self_loop_only && !has_self_loop(topo)) continue;
    const auto info = topology_info(topo);
    for (const auto& tup : info->class_tuples) out.push_back(GraphClass{info->key, tup});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphVector> cocycle_basis(int n, Variant variant) {
  const auto b0 = basis(n, 0, variant);
  std::vector<std::string> cols;
  for (const auto& c : b0) cols.push_back(c.key());
  // rows: target class keys discovered on the fly
  std::map<std::string, QVector> rows;  // target key -> (source key -> coeff)
  for (const auto& c : b0) {
    GraphVector unit;
    unit.add_term(c, Rational(1));
    const GraphVector img = (variant == Variant::quotient) ? delta_sharp(unit) : delta(unit);
    for (const auto& [tk, x] : img.terms) rows[tk][c.key()] = x;
  }
  std::vector<QVector> row_list;
  for (auto& [k, r] : rows) row_list.push_back(std::move(r));
  const QMatrix m = make_matrix(row_list, cols);
  std::vector<GraphVector> out;
  for (const auto& kv : kernel_basis(m)) {
    GraphVector v;
    for (const auto& [key, x] : kv) v.terms[key] = x;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace liegc
