#pragma once

#include <kcenter/kernels.hpp>

namespace kcenter::kernels::detail {

// Table of AVX2 entry points; only defined when the AVX2 translation unit is built.
const KernelSet& avx2_table() noexcept;

}  // namespace kcenter::kernels::detail
