#include "betti_lab/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti {

namespace {

void check_universe(int universe) {
  if (universe < 0 || universe > kMaxVertices)
    throw std::invalid_argument("complex universe must be in [0, 64]");
}

void collect_independent_sets(std::span<const VertexSet> adj, Face face, VertexSet candidates,
                              std::vector<Face>& out) {
  while (candidates != 0) {
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    const Face grown = face | bit(v);
    out.push_back(grown);
    collect_independent_sets(adj, grown, candidates & ~adj[v], out);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int universe) : universe_(universe) { check_universe(universe); }

SimplicialComplex SimplicialComplex::void_complex(int universe) {
  SimplicialComplex c(universe);
  c.has_empty_face_ = false;
  return c;
}

SimplicialComplex from_closed_faces(int universe, bool has_empty_face, std::vector<Face> faces) {
  check_universe(universe);
  SimplicialComplex c(universe);
  c.has_empty_face_ = has_empty_face;
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (!faces.empty() && faces.front() == 0) faces.erase(faces.begin());
  if (!faces.empty() && !has_empty_face)
    throw std::invalid_argument("a complex with faces must contain the empty face");
  const VertexSet allowed = full_set(universe);
  for (Face f : faces) {
    if ((f & ~allowed) != 0) throw std::invalid_argument("face outside the universe");
    const auto d = static_cast<std::size_t>(set_size(f) - 1);
    if (c.by_dim_.size() <= d) c.by_dim_.resize(d + 1);
    c.by_dim_[d].push_back(f);
  }
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(int universe, std::span<const Face> generators) {
  std::vector<Face> faces;
  for (Face g : generators) {
    for (Face sub = g; sub != 0; sub = (sub - 1) & g) faces.push_back(sub);
  }
  return from_closed_faces(universe, true, std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex(int universe, VertexSet vertices) {
  const Face gens[] = {vertices};
  return from_facets(universe, gens);
}

int SimplicialComplex::dimension() const {
  if (!has_empty_face_) return -2;
  return static_cast<int>(by_dim_.size()) - 1;
}

bool SimplicialComplex::contains(Face f) const {
  if (f == 0) return has_empty_face_;
  return index_of(f).has_value();
}

std::span<const Face> SimplicialComplex::faces(int d) const {
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return {};
  return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(Face f) const {
  const auto layer = faces(set_size(f) - 1);
  const auto it = std::lower_bound(layer.begin(), layer.end(), f);
  if (it == layer.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  f.push_back(has_empty_face_ ? 1 : 0);
  for (const auto& layer : by_dim_) f.push_back(layer.size());
  return f;
}

std::size_t SimplicialComplex::num_faces() const {
  std::size_t total = has_empty_face_ ? 1 : 0;
  for (const auto& layer : by_dim_) total += layer.size();
  return total;
}

VertexSet SimplicialComplex::vertex_set() const {
  VertexSet s = 0;
  for (Face f : faces(0)) s |= f;
  return s;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  if (!has_empty_face_) return out;
  if (by_dim_.empty()) return {0};
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    for (Face f : by_dim_[d]) {
      bool maximal = true;
      if (d + 1 < by_dim_.size()) {
        for (Face g : by_dim_[d + 1])
          if ((g & f) == f) {
            maximal = false;
            break;
          }
      }
      if (maximal) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  if (has_empty_face_) out.push_back(0);
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

SimplicialComplex independence_complex(const Graph& g) {
  std::vector<Face> faces;
  collect_independent_sets(g.adjacency(), 0, g.vertex_set(), faces);
  return from_closed_faces(g.num_vertices(), true, std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& delta, Face sigma) {
  if (!delta.contains(sigma)) throw std::invalid_argument("link: sigma is not a face");
  std::vector<Face> faces;
  for (Face tau : delta.all_faces())
    if ((tau & sigma) == 0 && delta.contains(tau | sigma)) faces.push_back(tau);
  return from_closed_faces(delta.universe(), true, std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& delta, Face sigma) {
  if (!delta.contains(sigma)) throw std::invalid_argument("deletion: sigma is not a face");
  std::vector<Face> faces;
  for (Face tau : delta.all_faces())
    if ((tau & sigma) == 0) faces.push_back(tau);
  return from_closed_faces(delta.universe(), true, std::move(faces));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& delta, VertexSet w) {
  if (delta.is_void()) return SimplicialComplex::void_complex(delta.universe());
  std::vector<Face> faces;
  for (Face tau : delta.all_faces())
    if ((tau & ~w) == 0) faces.push_back(tau);
  return from_closed_faces(delta.universe(), true, std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if ((a.vertex_set() & b.vertex_set()) != 0)
    throw std::invalid_argument("join: vertex sets overlap; relabel one side first");
  const int universe = std::max(a.universe(), b.universe());
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(universe);
  std::vector<Face> faces;
  const auto fa = a.all_faces();
  const auto fb = b.all_faces();
  faces.reserve(fa.size() * fb.size());
  for (Face x : fa)
    for (Face y : fb) faces.push_back(x | y);
  return from_closed_faces(universe, true, std::move(faces));
}

SimplicialComplex shifted(const SimplicialComplex& delta, int offset) {
  if (offset < 0 || delta.universe() + offset > kMaxVertices)
    throw std::invalid_argument("shift leaves the 64-vertex universe");
  if (delta.is_void()) return SimplicialComplex::void_complex(delta.universe() + offset);
  std::vector<Face> faces;
  for (Face f : delta.all_faces()) faces.push_back(f << offset);
  return from_closed_faces(delta.universe() + offset, true, std::move(faces));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& delta) {
  if (delta.is_void()) return {0};
  const VertexSet universe = full_set(delta.universe());
  std::vector<Face> out;
  for (Face f : delta.all_faces()) {
    for_each_vertex(universe & ~f, [&](int v) {
      const Face s = f | bit(v);
      if (delta.contains(s)) return;
      bool minimal = true;
      for_each_vertex(s, [&](int w) { minimal = minimal && delta.contains(s & ~bit(w)); });
      if (minimal) out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
  const VertexSet universe = full_set(delta.universe());
  const std::vector<Face> minimal = minimal_nonfaces(delta);
  if (minimal.empty()) return SimplicialComplex::void_complex(delta.universe());
  std::vector<Face> generators;
  generators.reserve(minimal.size());
  for (Face m : minimal) generators.push_back(universe & ~m);
  return SimplicialComplex::from_facets(delta.universe(), generators);
}

}  // namespace betti
