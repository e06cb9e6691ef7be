#include "relmach/bitmatrix.hpp"

namespace relmach {

BitMatrix BitMatrix::product(const BitMatrix& lhs, const BitMatrix& rhs) {
  BitMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    std::uint64_t* out_row = &out.data_[r * out.words_];
    const std::uint64_t* lrow = &lhs.data_[r * lhs.words_];
    for (std::size_t w = 0; w < lhs.words_; ++w) {
      std::uint64_t bits = lrow[w];
      while (bits) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* rrow = &rhs.data_[k * rhs.words_];
        for (std::size_t j = 0; j < out.words_; ++j) out_row[j] |= rrow[j];
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for_each_set([&](std::size_t r, std::size_t c) { out.set(c, r); });
  return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i);
  return out;
}

}  // namespace relmach
