#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sposet/bitset_kernels.hpp"

namespace sposet {

// Dense row-major bit matrix; each row is padded to whole 64-bit words so the
// rows can be fed straight to the bitset kernels.
class BitMatrix {
 public:
  using Word = kernels::Word;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    data_[r * words_ + c / 64] |= Word{1} << (c % 64);
  }
  void reset(std::size_t r, std::size_t c) noexcept {
    data_[r * words_ + c / 64] &= ~(Word{1} << (c % 64));
  }

  std::span<Word> row(std::size_t r) noexcept {
    return {data_.data() + r * words_, words_};
  }
  std::span<const Word> row(std::size_t r) const noexcept {
    return {data_.data() + r * words_, words_};
  }

  // Column indices of the set bits of row r, ascending.
  std::vector<std::size_t> row_indices(std::size_t r) const;

  BitMatrix transposed() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

// Calls fn(index) for each set bit of a packed row, ascending.
template <typename Fn>
void for_each_bit(std::span<const kernels::Word> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    kernels::Word bits = row[w];
    while (bits != 0) {
      const int tz = __builtin_ctzll(bits);
      fn(w * 64 + static_cast<std::size_t>(tz));
      bits &= bits - 1;
    }
  }
}

}  // namespace sposet
