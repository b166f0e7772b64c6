#pragma once
// ---- JSON (de)serialization and DOT export ----
//
// Graph:       {"half_edges": H, "vertices": [[ids],..], "edges": [[t,h],..],
//               "trees": [null-or-word, ..]}  (1-based; null tree = Y).
// GraphVector: {"terms": [{"coeff": "p/q", "graph": <graph>}, ..]}.
// Lie algebra: {"dim": d, "basis": [names], "brackets": [[i,j,k,"p/q"], ..]}
//              (1-based, antisymmetric completion on load).
// xi tensor:   {"dim": d, "entries": [[i,j,"p/q"], ..]} (1-based).

#include <string>

#include "json.hpp"

#include "liegc/complex.hpp"
#include "liegc/graph.hpp"
#include "liegc/lie.hpp"
#include "liegc/series.hpp"

namespace liegc {

nlohmann::json graph_to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json topology_to_json(const TopologicalGraph& g);

nlohmann::json vector_to_json(const GraphVector& v);
/// Every term is normalized and merged on load.
GraphVector vector_from_json(const nlohmann::json& j);

nlohmann::json census_to_json(const CensusReport& r);

LieAlgebraData algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const LieAlgebraData& g);

Tensor xi_from_json(const nlohmann::json& j);

/// DOT export: vertices v1..vn, directed edges labeled e1..em.
std::string to_dot(const DecoratedGraph& g);

}  // namespace liegc
