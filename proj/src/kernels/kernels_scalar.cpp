#include "kernels_internal.hpp"

#include <limits>

namespace kcenter::kernels {
namespace {

void min_update_scalar(double* acc, const double* row, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (row[i] < acc[i]) acc[i] = row[i];
  }
}

void min_plus_update_scalar(double* acc, const double* row, std::size_t n, double offset) {
  for (std::size_t i = 0; i < n; ++i) {
    const double candidate = offset + row[i];
    if (candidate < acc[i]) acc[i] = candidate;
  }
}

double max_value_scalar(const double* v, std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] > best) best = v[i];
  }
  return best;
}

std::size_t argmax_scalar(const double* v, std::size_t n) {
  if (n == 0) return 0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

std::size_t count_le_scalar(const double* v, std::size_t n, double threshold) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += v[i] <= threshold ? 1 : 0;
  return count;
}

std::size_t count_both_le_scalar(const double* a, const double* b, std::size_t n,
                                 double threshold) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += (a[i] <= threshold && b[i] <= threshold) ? 1 : 0;
  return count;
}

std::size_t first_exceeding_scalar(const double* lhs, const double* rhs, std::size_t n,
                                   double offset) {
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs[i] > offset + rhs[i]) return i;
  }
  return n;
}

}  // namespace

const KernelSet& scalar_kernels() noexcept {
  static const KernelSet set{
      "scalar",          min_update_scalar,    min_plus_update_scalar, max_value_scalar,
      argmax_scalar,     count_le_scalar,      count_both_le_scalar,   first_exceeding_scalar,
  };
  return set;
}

}  // namespace kcenter::kernels
