#pragma once

#include <string>

#include <json.hpp>

#include "betti_lab/complex.hpp"
#include "betti_lab/diagram.hpp"
#include "betti_lab/formulas.hpp"
#include "betti_lab/graph.hpp"

namespace betti::io {

using nlohmann::json;

/// {n, edges: [[u,v],...], labels?}; labels are written only when they are
/// not the identity.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {universe, facets: [[...],...]}. The void complex has "void": true.
json complex_to_json(const SimplicialComplex& delta);
SimplicialComplex complex_from_json(const json& j);

/// {n, char, entries: [[i, j, beta], ...]} with entries sorted by (i, j).
json diagram_to_json(const BettiDiagram& d);
BettiDiagram diagram_from_json(const json& j);

/// "i,j,beta" header then one line per nonzero entry.
std::string diagram_to_csv(const BettiDiagram& d);

/// Computer-algebra style Betti table: columns i, rows j - i, a total row,
/// "." for zero.
std::string diagram_to_table(const BettiDiagram& d);

json formula_report_to_json(const formulas::FormulaReport& r);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace betti::io
