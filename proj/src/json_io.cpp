#include "liegc/json_io.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liegc {

using nlohmann::json;

// ---- small helpers ----

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

json word_to_json(const Word& w) {
  if (is_leaf(w)) return json(w->leaf);
  return json::array({word_to_json(w->l), word_to_json(w->r)});
}

Word word_from_json(const json& j) {
  if (j.is_number_integer()) return make_leaf(j.get<int>());
  if (j.is_array() && j.size() == 2)
    return make_pair(word_from_json(j[0]), word_from_json(j[1]));
  throw std::invalid_argument("malformed tree word (expected leaf int or [l,r])");
}

Word default_word(int valency) {
  std::vector<int> tail(valency - 2);
  std::iota(tail.begin(), tail.end(), 2);
  return comb_word(tail);
}

json tree_to_json(const InsertionTree& t) {
  if (t.sign == 1) return word_to_json(t.word);
  return json{{"sign", t.sign}, {"word", word_to_json(t.word)}};
}

InsertionTree tree_from_json(const json& j, int valency) {
  if (j.is_null()) return InsertionTree{default_word(valency), +1};
  if (j.is_object()) {
    if (!j.contains("word")) throw std::invalid_argument("tree object needs \"word\"");
    const int sign = j.value("sign", 1);
    if (sign != 1 && sign != -1) throw std::invalid_argument("tree sign must be +-1");
    return InsertionTree{word_from_json(j.at("word")), sign};
  }
  return InsertionTree{word_from_json(j), +1};
}

}  // namespace

// ---- graphs ----

json graph_to_json(const DecoratedGraph& g) {
  json jv = json::array(), je = json::array(), jt = json::array();
  for (const auto& blk : g.vertices) jv.push_back(blk);
  for (const auto& [t, h] : g.edges) je.push_back(json::array({t, h}));
  for (const auto& t : g.trees) jt.push_back(tree_to_json(t));
  return json{{"half_edges", g.half_edges},
              {"vertices", jv},
              {"edges", je},
              {"trees", jt}};
}

DecoratedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("half_edges") || !j.contains("vertices") ||
      !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs half_edges, vertices, edges");
  DecoratedGraph g;
  g.half_edges = j.at("half_edges").get<int>();
  for (const auto& blk : j.at("vertices")) g.vertices.push_back(blk.get<std::vector<int>>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edge entries must be [tail, head]");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const json trees = j.value("trees", json::array());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const json jt = v < trees.size() ? trees[v] : json();
    g.trees.push_back(tree_from_json(jt, int(g.vertices[v].size())));
  }
  std::vector<std::string> why;
  if (!validate(g, &why)) {
    std::string msg = "invalid graph";
    for (const auto& w : why) msg += "; " + w;
    throw std::invalid_argument(msg);
  }
  return g;
}

json topology_to_json(const TopologicalGraph& g) {
  json jv = json::array(), je = json::array();
  for (const auto& blk : g.vertices) jv.push_back(blk);
  for (const auto& [a, b] : g.edges) je.push_back(json::array({a, b}));
  return json{{"half_edges", g.half_edges}, {"vertices", jv}, {"edges", je}};
}

// ---- vectors ----

json vector_to_json(const GraphVector& v) {
  json terms = json::array();
  for (const auto& [key, coeff] : v.terms) {
    const GraphClass c = class_from_key(key);
    terms.push_back(json{{"coeff", coeff.str()},
                         {"graph", graph_to_json(class_representative(c))}});
  }
  return json{{"terms", terms}};
}

GraphVector vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("vector JSON needs \"terms\"");
  GraphVector out;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("graph"))
      throw std::invalid_argument("vector term needs coeff and graph");
    GraphVector piece = normalize(graph_from_json(t.at("graph")));
    piece *= rational_from_json(t.at("coeff"));
    out += piece;
  }
  return out;
}

// ---- census ----

json census_to_json(const CensusReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back(json{{"graph", topology_to_json(c.graph)},
                           {"count", c.count},
                           {"aut", c.aut},
                           {"connected", c.connected},
                           {"identity", c.identity}});
  }
  return json{{"order", r.order},
              {"total_matchings", r.total_matchings},
              {"identity_holds", r.identity_holds},
              {"classes", classes}};
}

// ---- Lie algebras ----

LieAlgebraData algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
    throw std::invalid_argument("algebra JSON needs dim and brackets");
  const int d = j.at("dim").get<int>();
  if (d < 1) throw std::invalid_argument("algebra dim must be positive");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    names = j.at("basis").get<std::vector<std::string>>();
  } else {
    for (int i = 1; i <= d; ++i) names.push_back("e" + std::to_string(i));
  }
  std::vector<std::vector<std::vector<Rational>>> c(
      d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  std::vector<std::vector<std::vector<bool>>> given(
      d, std::vector<std::vector<bool>>(d, std::vector<bool>(d, false)));
  for (const auto& e : j.at("brackets")) {
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument("bracket entries must be [i, j, k, value]");
    const int i = e[0].get<int>() - 1, jj = e[1].get<int>() - 1, k = e[2].get<int>() - 1;
    if (i < 0 || i >= d || jj < 0 || jj >= d || k < 0 || k >= d)
      throw std::invalid_argument("bracket index out of range");
    c[i][jj][k] = rational_from_json(e[3]);
    given[i][jj][k] = true;
  }
  // antisymmetric completion for entries only given one way around
  for (int i = 0; i < d; ++i)
    for (int jj = 0; jj < d; ++jj)
      for (int k = 0; k < d; ++k)
        if (given[i][jj][k] && !given[jj][i][k]) c[jj][i][k] = -c[i][jj][k];
  return LieAlgebraData(d, std::move(names), std::move(c));
}

json algebra_to_json(const LieAlgebraData& g) {
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      for (int k = 0; k < g.dim(); ++k)
        if (!g.c(i, j, k).is_zero())
          brackets.push_back(json::array({i + 1, j + 1, k + 1, g.c(i, j, k).str()}));
  return json{{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

Tensor xi_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("xi JSON needs dim and entries");
  const int d = j.at("dim").get<int>();
  Tensor t;
  t.rank = 2;
  t.dim = d;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("xi entries must be [i, j, value]");
    const int a = e[0].get<int>() - 1, b = e[1].get<int>() - 1;
    if (a < 0 || a >= d || b < 0 || b >= d)
      throw std::invalid_argument("xi index out of range");
    t.set({a, b}, rational_from_json(e[2]));
  }
  return t;
}

// ---- DOT ----

std::string to_dot(const DecoratedGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t v = 1; v <= g.vertices.size(); ++v)
    os << "  v" << v << " [label=\"v" << v << "\"];\n";
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [t, h] = g.edges[e];
    os << "  v" << vertex_of(g, t) << " -> v" << vertex_of(g, h) << " [label=\"e"
       << (e + 1) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace liegc
