#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace relmach {

/// Dense boolean matrix with rows packed into 64-bit words.
///
/// The boolean product routes all row combination through whole-word ORs,
/// which is what keeps composition and reflexive-transitive closure cheap
/// on carriers of a few thousand elements. Bits past the column count are
/// kept at zero so word-level comparisons are exact.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  void clear(std::size_t r, std::size_t c) {
    data_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
  }

  void or_with(const BitMatrix& other) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] |= other.data_[i];
  }

  bool is_subset_of(const BitMatrix& other) const {
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (data_[i] & ~other.data_[i]) return false;
    }
    return true;
  }

  bool any() const {
    for (auto w : data_) {
      if (w) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : data_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// out[r][c] = OR_k lhs[r][k] & rhs[k][c]. Row-oriented: for every set bit
  /// k of an lhs row, the whole rhs row k is ORed in.
  static BitMatrix product(const BitMatrix& lhs, const BitMatrix& rhs);

  BitMatrix transposed() const;

  static BitMatrix identity(std::size_t n);

  /// Visits set bits in row-major order, i.e. sorted by (row, col).
  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::uint64_t* row = &data_[r * words_];
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          f(r, w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          bits &= bits - 1;
        }
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return data_; }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace relmach
