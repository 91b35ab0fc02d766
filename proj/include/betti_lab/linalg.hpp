#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace betti {

/// Prime field GF(p) over which homology ranks are computed.
class FieldSpec {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit FieldSpec(std::uint32_t characteristic = 2);

  std::uint32_t characteristic() const { return p_; }
  bool is_binary() const { return p_ == 2; }

  /// Canonical representative of v mod p.
  std::uint32_t reduce(long long v) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

/// Dense row-major matrix with entries in [0, p).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Rows packed 64 columns per word; elimination is XOR of rows.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Destroys the contents.
  std::size_t rank_in_place();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

/// Rank over GF(field), by Gaussian elimination on a copy.
std::size_t rank(const Matrix& m, const FieldSpec& field);

/// Rank over GF(p), consuming the matrix.
std::size_t rank_mod_p(Matrix m, std::uint32_t p);

}  // namespace betti
