#include "betti_lab/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace betti {

// HomologyProfile ------------------------------------------------------------

HomologyProfile HomologyProfile::from_dims(std::vector<std::uint64_t> dims) {
  HomologyProfile p;
  p.dims_ = std::move(dims);
  p.trim();
  return p;
}

HomologyProfile HomologyProfile::void_profile() {
  HomologyProfile p;
  p.void_ = true;
  return p;
}

HomologyProfile HomologyProfile::concentrated(int degree, std::uint64_t dim) {
  if (degree < -1) throw std::invalid_argument("homology degrees start at -1");
  std::vector<std::uint64_t> dims(static_cast<std::size_t>(degree + 2), 0);
  dims.back() = dim;
  return from_dims(std::move(dims));
}

void HomologyProfile::trim() {
  while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

std::uint64_t HomologyProfile::operator[](int degree) const {
  const int idx = degree + 1;
  if (idx < 0 || idx >= static_cast<int>(dims_.size())) return 0;
  return dims_[static_cast<std::size_t>(idx)];
}

long long HomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const int degree = static_cast<int>(i) - 1;
    chi += (degree % 2 == 0 ? 1 : -1) * static_cast<long long>(dims_[i]);
  }
  return chi;
}

HomologyProfile HomologyProfile::shifted(int by) const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] == 0) continue;
    const long long idx = static_cast<long long>(i) + by;
    if (idx < 0) throw std::invalid_argument("shift moves homology below degree -1");
    if (out.size() <= static_cast<std::size_t>(idx)) out.resize(static_cast<std::size_t>(idx) + 1, 0);
    out[static_cast<std::size_t>(idx)] = dims_[i];
  }
  HomologyProfile p = from_dims(std::move(out));
  p.void_ = void_;
  return p;
}

std::string HomologyProfile::to_string() const {
  if (void_) return "void";
  if (dims_.empty()) return "acyclic";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] == 0) continue;
    if (!first) os << ", ";
    os << "H" << static_cast<int>(i) - 1 << "=" << dims_[i];
    first = false;
  }
  return os.str();
}

HomologyProfile join_profile(const HomologyProfile& a, const HomologyProfile& b) {
  if (a.is_void() || b.is_void()) return HomologyProfile::void_profile();
  const auto& da = a.dims();
  const auto& db = b.dims();
  if (da.empty() || db.empty()) return {};
  // Index space is degree + 1, where a + b = i - 1 becomes ia + ib = ii.
  std::vector<std::uint64_t> out(da.size() + db.size() - 1, 0);
  for (std::size_t i = 0; i < da.size(); ++i)
    for (std::size_t j = 0; j < db.size(); ++j) out[i + j] += da[i] * db[j];
  return HomologyProfile::from_dims(std::move(out));
}

long long reduced_euler_characteristic(const SimplicialComplex& delta) {
  const auto f = delta.f_vector();
  long long chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int dim = static_cast<int>(i) - 1;
    chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  }
  return chi;
}

// Boundary maps --------------------------------------------------------------

Matrix boundary_matrix(const SimplicialComplex& delta, int d, const FieldSpec& field) {
  if (d < -1 || d > delta.dimension())
    throw std::invalid_argument("boundary degree outside [-1, dim]");
  if (d == -1) return Matrix(0, delta.includes_empty_face() ? 1 : 0);
  const auto cols = delta.faces(d);
  if (d == 0) {
    Matrix m(1, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.at(0, c) = 1;
    return m;
  }
  const auto rows = delta.faces(d - 1);
  Matrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int position = 0;
    for_each_vertex(cols[c], [&](int v) {
      const auto r = delta.index_of(cols[c] & ~bit(v));
      m.at(*r, c) = field.reduce(position % 2 == 0 ? 1 : -1);
      ++position;
    });
  }
  return m;
}

std::size_t boundary_rank(const SimplicialComplex& delta, int d, const FieldSpec& field) {
  if (d <= -1 || d > delta.dimension()) return 0;
  const auto faces = delta.faces(d);
  if (d == 0) return faces.empty() ? 0 : 1;
  const auto lower = delta.faces(d - 1);
  if (faces.empty() || lower.empty()) return 0;
  // Rows are d-faces (the transpose has the same rank).
  if (field.is_binary()) {
    BitMatrix m(faces.size(), lower.size());
    for (std::size_t r = 0; r < faces.size(); ++r)
      for_each_vertex(faces[r], [&](int v) { m.set(r, *delta.index_of(faces[r] & ~bit(v))); });
    return m.rank_in_place();
  }
  Matrix m(faces.size(), lower.size());
  for (std::size_t r = 0; r < faces.size(); ++r) {
    int position = 0;
    for_each_vertex(faces[r], [&](int v) {
      m.at(r, *delta.index_of(faces[r] & ~bit(v))) = field.reduce(position % 2 == 0 ? 1 : -1);
      ++position;
    });
  }
  return rank_mod_p(std::move(m), field.characteristic());
}

HomologyProfile reduced_homology(const SimplicialComplex& delta, const FieldSpec& field) {
  if (delta.is_void()) return HomologyProfile::void_profile();
  const int top = delta.dimension();
  const auto f = delta.f_vector();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);  // ranks[d+1] = rank d_d
  for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d + 1)] = boundary_rank(delta, d, field);
  std::vector<std::uint64_t> dims(static_cast<std::size_t>(top + 2), 0);
  for (int j = -1; j <= top; ++j) {
    const auto idx = static_cast<std::size_t>(j + 1);
    dims[idx] = f[idx] - ranks[idx] - ranks[idx + 1];
  }
  return HomologyProfile::from_dims(std::move(dims));
}

// Graph-level engine ---------------------------------------------------------

namespace {

void collect_independent(std::span<const VertexSet> adj, Face face, VertexSet candidates,
                         std::vector<Face>& out) {
  while (candidates != 0) {
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    const Face grown = face | bit(v);
    out.push_back(grown);
    collect_independent(adj, grown, candidates & ~adj[v], out);
  }
}

}  // namespace

HomologyProfile induced_homology_direct(std::span<const VertexSet> adj, VertexSet mask,
                                        const FieldSpec& field) {
  std::vector<Face> faces;
  collect_independent(adj, 0, mask, faces);
  const int universe = mask == 0 ? 0 : 64 - std::countl_zero(mask);
  return reduced_homology(from_closed_faces(universe, true, std::move(faces)), field);
}

HomologyProfile induced_homology(std::span<const VertexSet> adj, VertexSet mask, const FieldSpec& field) {
  if (mask == 0) return HomologyProfile::concentrated(-1);

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexSet rest = mask; rest != 0; rest &= rest - 1) {
      const int u = lowest(rest);
      const VertexSet nu = adj[u] & mask;
      if (nu == 0) return {};
      // Every v adjacent to all of N(u) has N(u) inside N(v).
      VertexSet dominating = mask & ~bit(u);
      for_each_vertex(nu, [&](int w) { dominating &= adj[w]; });
      if (dominating != 0) {
        mask &= ~bit(lowest(dominating));
        changed = true;
        break;
      }
    }
  }

  const std::vector<VertexSet> parts = components(adj, mask);
  if (parts.size() > 1) {
    HomologyProfile result = HomologyProfile::concentrated(-1);
    for (VertexSet part : parts) {
      result = join_profile(result, induced_homology(adj, part, field));
      if (result.is_acyclic()) break;
    }
    return result;
  }
  if (set_size(mask) == 2) return HomologyProfile::concentrated(0);
  return induced_homology_direct(adj, mask, field);
}

HomologyProfile graph_homology(const Graph& g, const FieldSpec& field) {
  return induced_homology(g.adjacency(), g.vertex_set(), field);
}

// Mayer-Vietoris -------------------------------------------------------------

MayerVietorisReport mayer_vietoris_check(const SimplicialComplex& delta, int v, const FieldSpec& field) {
  if (v < 0 || v >= delta.universe() || !delta.contains(bit(v)))
    throw std::invalid_argument("Mayer-Vietoris check needs a vertex of the complex");
  const SimplicialComplex lk = link(delta, bit(v));
  if (lk.dimension() == -1) throw std::invalid_argument("link is {empty face}; sequence not defined");

  MayerVietorisReport report;
  report.complex = reduced_homology(delta, field);
  report.link = reduced_homology(lk, field);
  report.deletion = reduced_homology(deletion(delta, bit(v)), field);
  const auto& X = report.complex;
  const auto& L = report.link;
  const auto& D = report.deletion;
  const int top = std::max({X.top_degree(), L.top_degree(), D.top_degree(), 0}) + 1;

  // ... -> L_j -> D_j -> X_j -> L_{j-1} -> ... -> L_0 -> D_0 -> X_0 -> 0
  std::vector<std::uint64_t> seq{0};
  for (int j = top; j >= 0; --j) {
    seq.push_back(L[j]);
    seq.push_back(D[j]);
    seq.push_back(X[j]);
  }
  seq.push_back(0);
  report.exactness_bounds_hold = true;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i)
    if (seq[i] > seq[i - 1] + seq[i + 1]) report.exactness_bounds_hold = false;
  long long alternating = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    alternating += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(seq[i]);
  report.alternating_sum_vanishes = alternating == 0;

  auto vanishes_from = [top](const HomologyProfile& p, int r) {
    for (int j = r; j <= top; ++j)
      if (p[j] != 0) return false;
    return true;
  };
  report.acyclic_link_rule_holds = true;
  report.acyclic_deletion_rule_holds = true;
  for (int r = 0; r <= top; ++r) {
    if (vanishes_from(L, r))
      for (int j = r + 1; j <= top; ++j)
        if (X[j] != D[j]) report.acyclic_link_rule_holds = false;
    if (vanishes_from(D, r))
      for (int j = r + 1; j <= top; ++j)
        if (X[j] != L[j - 1]) report.acyclic_deletion_rule_holds = false;
  }
  return report;
}

}  // namespace betti
