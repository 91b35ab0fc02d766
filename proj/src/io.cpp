#include "betti_lab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace betti::io {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json out = {{"n", g.num_vertices()}, {"edges", edges}};
  if (!g.has_identity_labels()) out["labels"] = g.labels();
  return out;
}

Graph graph_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph JSON: n must be in [0, 64]");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: an edge is a pair");
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("graph JSON: endpoint out of range");
    if (u == v) throw std::invalid_argument("graph JSON: loops are not allowed");
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  std::vector<int> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
  return Graph::from_adjacency(std::move(rows), std::move(labels));
}

json complex_to_json(const SimplicialComplex& delta) {
  json out = {{"universe", delta.universe()}};
  if (delta.is_void()) {
    out["void"] = true;
    out["facets"] = json::array();
    return out;
  }
  json facets = json::array();
  for (Face f : delta.facets()) facets.push_back(to_vector(f));
  out["facets"] = facets;
  return out;
}

SimplicialComplex complex_from_json(const json& j) {
  const int universe = j.at("universe").get<int>();
  if (j.value("void", false)) return SimplicialComplex::void_complex(universe);
  std::vector<Face> facets;
  for (const auto& f : j.at("facets")) {
    const auto vs = f.get<std::vector<int>>();
    for (int v : vs)
      if (v < 0 || v >= universe) throw std::out_of_range("complex JSON: vertex out of range");
    facets.push_back(to_set(vs));
  }
  return SimplicialComplex::from_facets(universe, facets);
}

json diagram_to_json(const BettiDiagram& d) {
  json entries = json::array();
  for (const auto& [key, value] : d.entries()) entries.push_back({key.first, key.second, value});
  return {{"n", d.ambient_vertices()}, {"char", d.field().characteristic()}, {"entries", entries}};
}

BettiDiagram diagram_from_json(const json& j) {
  BettiDiagram d(j.at("n").get<int>(), FieldSpec(j.value("char", 2u)));
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("diagram JSON: entries are [i, j, beta]");
    d.set(e[0].get<int>(), e[1].get<int>(), e[2].get<std::uint64_t>());
  }
  return d;
}

std::string diagram_to_csv(const BettiDiagram& d) {
  std::ostringstream os;
  os << "i,j,beta\n";
  for (const auto& [key, value] : d.entries()) os << key.first << ',' << key.second << ',' << value << '\n';
  return os.str();
}

std::string diagram_to_table(const BettiDiagram& d) {
  if (d.is_zero()) return "zero ideal\n";
  const int columns = *projective_dimension(d) + 1;
  int first_row = 0;
  int last_row = 0;
  bool seen = false;
  for (const auto& [key, value] : d.entries()) {
    const int row = key.second - key.first;
    first_row = seen ? std::min(first_row, row) : row;
    last_row = seen ? std::max(last_row, row) : row;
    seen = true;
  }

  std::vector<std::string> labels{"", "total:"};
  std::vector<std::vector<std::string>> cells(2);
  for (int i = 0; i < columns; ++i) {
    std::uint64_t total = 0;
    for (const auto& [key, value] : d.entries())
      if (key.first == i) total += value;
    cells[0].push_back(std::to_string(i));
    cells[1].push_back(std::to_string(total));
  }
  for (int row = first_row; row <= last_row; ++row) {
    labels.push_back(std::to_string(row) + ":");
    std::vector<std::string> line;
    for (int i = 0; i < columns; ++i) {
      const std::uint64_t b = d.at(i, i + row);
      line.push_back(b == 0 ? "." : std::to_string(b));
    }
    cells.push_back(std::move(line));
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(columns), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = std::string(label_width - labels[r].size(), ' ') + labels[r];
    for (std::size_t c = 0; c < cells[r].size(); ++c)
      line += ' ' + std::string(width[c] - cells[r][c].size(), ' ') + cells[r][c];
    os << line << '\n';
  }
  return os.str();
}

json formula_report_to_json(const formulas::FormulaReport& r) {
  json params = json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  return {{"quantity", r.quantity}, {"params", params}, {"predicted", r.predicted}, {"source", r.source}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace betti::io
