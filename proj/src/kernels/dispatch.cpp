#include "kernels_internal.hpp"

#include <cstdlib>
#include <string_view>

namespace kcenter::kernels {

const KernelSet* avx2_kernels() noexcept {
#if defined(KCENTER_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() noexcept {
  static const KernelSet* selected = [] {
    const char* forced = std::getenv("KCENTER_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar_kernels();
    const KernelSet* simd = avx2_kernels();
    return simd != nullptr ? simd : &scalar_kernels();
  }();
  return *selected;
}

}  // namespace kcenter::kernels
