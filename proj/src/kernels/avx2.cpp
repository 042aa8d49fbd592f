#include "kernels_internal.hpp"

#if defined(SPOSET_HAVE_AVX2) && defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace sposet::kernels {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble lookup popcount; the per-byte counts are summed into 64-bit lanes
// with a SAD against zero.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                         _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i v) {
  alignas(32) Word lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void avx2_or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

void avx2_and_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

bool avx2_intersects(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    // testz returns 1 when (a & b) == 0
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool avx2_is_subset(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    // testc returns 1 when (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

std::size_t avx2_popcount(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t avx2_and_popcount(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    acc = _mm256_add_epi64(
        acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace

const KernelTable* avx2_table_if_compiled() {
  static const KernelTable table{
      Isa::kAvx2,      "avx2",          avx2_or_into,
      avx2_and_into,   avx2_intersects, avx2_is_subset,
      avx2_popcount,   avx2_and_popcount,
  };
  return &table;
}

}  // namespace sposet::kernels

#else

namespace sposet::kernels {
const KernelTable* avx2_table_if_compiled() { return nullptr; }
}  // namespace sposet::kernels

#endif
