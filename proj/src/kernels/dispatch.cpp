#include <cassert>

#include "kernels_internal.hpp"

namespace sposet::kernels {

const KernelTable* avx2_kernels() {
  static const KernelTable* table = []() -> const KernelTable* {
    const KernelTable* compiled = avx2_table_if_compiled();
    if (compiled == nullptr) return nullptr;
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt")) {
      return compiled;
    }
#endif
    return nullptr;
  }();
  return table;
}

const KernelTable& active_kernels() {
  static const KernelTable& table =
      avx2_kernels() != nullptr ? *avx2_kernels() : scalar_kernels();
  return table;
}

void or_into(Row dst, ConstRow src) {
  assert(dst.size() == src.size());
  active_kernels().or_into(dst.data(), src.data(), dst.size());
}

void and_into(Row dst, ConstRow src) {
  assert(dst.size() == src.size());
  active_kernels().and_into(dst.data(), src.data(), dst.size());
}

bool intersects(ConstRow a, ConstRow b) {
  assert(a.size() == b.size());
  return active_kernels().intersects(a.data(), b.data(), a.size());
}

bool is_subset(ConstRow a, ConstRow b) {
  assert(a.size() == b.size());
  return active_kernels().is_subset(a.data(), b.data(), a.size());
}

std::size_t popcount(ConstRow a) {
  return active_kernels().popcount(a.data(), a.size());
}

std::size_t and_popcount(ConstRow a, ConstRow b) {
  assert(a.size() == b.size());
  return active_kernels().and_popcount(a.data(), b.data(), a.size());
}

}  // namespace sposet::kernels
