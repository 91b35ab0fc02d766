#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "betti_lab/linalg.hpp"

namespace betti {

/// Graded Betti numbers beta_{i,j} of an ideal, indexed by homological
/// position i (i = 0 is the generators of the ideal) and internal degree j.
/// Only nonzero entries are stored.
class BettiDiagram {
 public:
  explicit BettiDiagram(int ambient_vertices = 0, FieldSpec field = FieldSpec{});

  int ambient_vertices() const { return n_; }
  const FieldSpec& field() const { return field_; }

  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t value);
  void set(int i, int j, std::uint64_t value);

  /// Nonzero entries keyed by (i, j), in lexicographic order.
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::uint64_t total() const;

  /// Equal ambient size and entries. The field is metadata and is ignored,
  /// so diagrams over different primes can be compared directly.
  friend bool operator==(const BettiDiagram& a, const BettiDiagram& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  FieldSpec field_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Support of a Betti diagram in table coordinates (column i, row j - i).
struct DiagramShape {
  std::set<std::pair<int, int>> cells;

  bool contains(int column, int row) const { return cells.count({column, row}) != 0; }
  bool is_subset_of(const DiagramShape& other) const;
  friend bool operator==(const DiagramShape&, const DiagramShape&) = default;
};

/// Largest row j - i with a nonzero entry; nullopt for the zero diagram.
std::optional<int> regularity(const BettiDiagram& d);
/// Largest column with a nonzero entry; nullopt for the zero diagram.
std::optional<int> projective_dimension(const BettiDiagram& d);

DiagramShape diagram_shape(const BettiDiagram& d);

/// beta_{i,i+row} for i = 0..last, where last is the final nonzero column in that row
/// (empty when the row is zero).
std::vector<std::uint64_t> diagram_row(const BettiDiagram& d, int row);
/// beta_{i,2(i+1)} for i = 0..floor(n/2)-1.
std::vector<std::uint64_t> main_diagonal(const BettiDiagram& d);

}  // namespace betti
