#include "betti_lab/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti {

BettiDiagram::BettiDiagram(int ambient_vertices, FieldSpec field) : n_(ambient_vertices), field_(field) {
  if (ambient_vertices < 0) throw std::invalid_argument("ambient vertex count must be nonnegative");
}

std::uint64_t BettiDiagram::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiDiagram::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  if (i < 0 || j < 0) throw std::invalid_argument("Betti indices must be nonnegative");
  entries_[{i, j}] += value;
}

void BettiDiagram::set(int i, int j, std::uint64_t value) {
  if (i < 0 || j < 0) throw std::invalid_argument("Betti indices must be nonnegative");
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

std::uint64_t BettiDiagram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : entries_) sum += value;
  return sum;
}

bool DiagramShape::is_subset_of(const DiagramShape& other) const {
  return std::includes(other.cells.begin(), other.cells.end(), cells.begin(), cells.end());
}

std::optional<int> regularity(const BettiDiagram& d) {
  if (d.is_zero()) return std::nullopt;
  int best = 0;
  bool first = true;
  for (const auto& [key, value] : d.entries()) {
    const int row = key.second - key.first;
    if (first || row > best) best = row;
    first = false;
  }
  return best;
}

std::optional<int> projective_dimension(const BettiDiagram& d) {
  if (d.is_zero()) return std::nullopt;
  int best = 0;
  for (const auto& [key, value] : d.entries()) best = std::max(best, key.first);
  return best;
}

DiagramShape diagram_shape(const BettiDiagram& d) {
  DiagramShape shape;
  for (const auto& [key, value] : d.entries()) shape.cells.emplace(key.first, key.second - key.first);
  return shape;
}

std::vector<std::uint64_t> diagram_row(const BettiDiagram& d, int row) {
  int last = -1;
  for (const auto& [key, value] : d.entries())
    if (key.second - key.first == row) last = std::max(last, key.first);
  std::vector<std::uint64_t> out;
  for (int i = 0; i <= last; ++i) out.push_back(d.at(i, i + row));
  return out;
}

std::vector<std::uint64_t> main_diagonal(const BettiDiagram& d) {
  std::vector<std::uint64_t> out;
  for (int i = 0; 2 * (i + 1) <= d.ambient_vertices(); ++i) out.push_back(d.at(i, 2 * (i + 1)));
  return out;
}

}  // namespace betti
