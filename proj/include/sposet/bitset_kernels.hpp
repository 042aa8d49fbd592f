#pragma once

// Word-parallel kernels over packed bit rows.  Every kernel has a portable
// scalar reference and, where the build and the CPU allow it, an AVX2
// variant.  active_kernels() picks the best table once per process; the
// individual tables stay reachable so tests can compare them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace sposet::kernels {

using Word = std::uint64_t;
using Row = std::span<Word>;
using ConstRow = std::span<const Word>;

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= src
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  // (a & b) != 0
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  // (a & ~b) == 0
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
};

const KernelTable& scalar_kernels();

// nullptr when AVX2 was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

const KernelTable& active_kernels();

// Span front-ends over active_kernels().  Sizes must match.
void or_into(Row dst, ConstRow src);
void and_into(Row dst, ConstRow src);
bool intersects(ConstRow a, ConstRow b);
bool is_subset(ConstRow a, ConstRow b);
std::size_t popcount(ConstRow a);
std::size_t and_popcount(ConstRow a, ConstRow b);

}  // namespace sposet::kernels
