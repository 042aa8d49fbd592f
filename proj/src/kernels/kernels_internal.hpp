#pragma once

#include "sposet/bitset_kernels.hpp"

namespace sposet::kernels {

// Defined in avx2.cpp; returns nullptr in builds without AVX2 support.
const KernelTable* avx2_table_if_compiled();

}  // namespace sposet::kernels
