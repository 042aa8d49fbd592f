#include "sposet/bit_matrix.hpp"

namespace sposet {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(rows * ((cols + 63) / 64), 0) {}

std::vector<std::size_t> BitMatrix::row_indices(std::size_t r) const {
  std::vector<std::size_t> out;
  for_each_bit(row(r), [&](std::size_t c) { out.push_back(c); });
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_bit(row(r), [&](std::size_t c) { t.set(c, r); });
  }
  return t;
}

}  // namespace sposet
