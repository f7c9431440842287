#pragma once

// Data-parallel inner loops shared by the oracle, solvers and validators.
//
// Every kernel has a portable scalar reference implementation and, on x86-64
// builds, an AVX2 variant. The variant is chosen once at runtime from CPU
// support; setting KCENTER_KERNELS=scalar forces the reference path. All
// kernels only compare, add, or take min/max of doubles, so the variants are
// bit-identical on finite and infinite inputs.

#include <cstddef>
#include <span>
#include <string_view>

namespace kcenter::kernels {

struct KernelSet {
  std::string_view name;

  // acc[i] = min(acc[i], row[i])
  void (*min_update)(double* acc, const double* row, std::size_t n);
  // acc[i] = min(acc[i], offset + row[i])
  void (*min_plus_update)(double* acc, const double* row, std::size_t n, double offset);
  // max over v (-inf when n == 0)
  double (*max_value)(const double* v, std::size_t n);
  // smallest index attaining the maximum (n when n == 0)
  std::size_t (*argmax)(const double* v, std::size_t n);
  // #{i : v[i] <= threshold}
  std::size_t (*count_le)(const double* v, std::size_t n, double threshold);
  // #{i : a[i] <= threshold && b[i] <= threshold}
  std::size_t (*count_both_le)(const double* a, const double* b, std::size_t n, double threshold);
  // smallest i with lhs[i] > offset + rhs[i], or n
  std::size_t (*first_exceeding)(const double* lhs, const double* rhs, std::size_t n,
                                 double offset);
};

const KernelSet& scalar_kernels() noexcept;

/// AVX2 variant, or nullptr when it was not compiled in or the CPU lacks AVX2.
const KernelSet* avx2_kernels() noexcept;

/// The runtime-selected variant.
const KernelSet& active() noexcept;

inline void min_update(std::span<double> acc, std::span<const double> row) noexcept {
  active().min_update(acc.data(), row.data(), acc.size());
}
inline void min_plus_update(std::span<double> acc, std::span<const double> row,
                            double offset) noexcept {
  active().min_plus_update(acc.data(), row.data(), acc.size(), offset);
}
inline double max_value(std::span<const double> v) noexcept {
  return active().max_value(v.data(), v.size());
}
inline std::size_t argmax(std::span<const double> v) noexcept {
  return active().argmax(v.data(), v.size());
}
inline std::size_t count_le(std::span<const double> v, double threshold) noexcept {
  return active().count_le(v.data(), v.size(), threshold);
}
inline std::size_t count_both_le(std::span<const double> a, std::span<const double> b,
                                 double threshold) noexcept {
  return active().count_both_le(a.data(), b.data(), a.size(), threshold);
}
inline std::size_t first_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                                   double offset) noexcept {
  return active().first_exceeding(lhs.data(), rhs.data(), lhs.size(), offset);
}

}  // namespace kcenter::kernels
