#include "betti_lab/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace betti {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (characteristic >= (1U << 31) || !is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(characteristic));
}

std::uint32_t FieldSpec::reduce(long long v) const {
  const long long p = p_;
  return static_cast<std::uint32_t>(((v % p) + p) % p);
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

std::size_t BitMatrix::rank_in_place() {
  std::size_t rank = 0;
  for (std::size_t w = 0; w < words_ && rank < rows_; ++w) {
    for (unsigned b = 0; b < 64 && rank < rows_; ++b) {
      const std::uint64_t mask = std::uint64_t{1} << b;
      std::size_t pivot = rank;
      while (pivot < rows_ && (data_[pivot * words_ + w] & mask) == 0) ++pivot;
      if (pivot == rows_) continue;
      std::uint64_t* prow = &data_[pivot * words_];
      if (pivot != rank) {
        std::uint64_t* rrow = &data_[rank * words_];
        for (std::size_t i = w; i < words_; ++i) std::swap(prow[i], rrow[i]);
        prow = rrow;
      }
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        std::uint64_t* row = &data_[r * words_];
        if ((row[w] & mask) != 0)
          for (std::size_t i = w; i < words_; ++i) row[i] ^= prow[i];
      }
      ++rank;
    }
  }
  return rank;
}

std::size_t rank_mod_p(Matrix m, std::uint32_t p) {
  const std::uint64_t mod = p;
  auto inverse = [mod](std::uint64_t a) {
    std::uint64_t result = 1;
    std::uint64_t base = a % mod;
    for (std::uint64_t e = mod - 2; e > 0; e >>= 1) {
      if (e & 1U) result = result * base % mod;
      base = base * base % mod;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const std::uint64_t inv = inverse(m.at(rank, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(rank, j) = static_cast<std::uint32_t>(m.at(rank, j) * inv % mod);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const std::uint64_t factor = m.at(r, c);
      if (factor == 0) continue;
      const std::uint64_t neg = mod - factor;
      for (std::size_t j = c; j < m.cols; ++j) {
        const std::uint32_t pv = m.at(rank, j);
        if (pv != 0) m.at(r, j) = static_cast<std::uint32_t>((m.at(r, j) + neg * pv) % mod);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const Matrix& m, const FieldSpec& field) {
  if (field.is_binary()) {
    BitMatrix bits(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        if (m.at(r, c) & 1U) bits.set(r, c);
    return bits.rank_in_place();
  }
  return rank_mod_p(m, field.characteristic());
}

}  // namespace betti
