#include "kernels_internal.hpp"

#include <immintrin.h>

#include <bit>
#include <limits>

namespace kcenter::kernels::detail {
namespace {

constexpr std::size_t lanes = 4;

void min_update_avx2(double* acc, const double* row, std::size_t n) {
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    const __m256d r = _mm256_loadu_pd(row + i);
    const __m256d a = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_min_pd(r, a));
  }
  for (; i < n; ++i) {
    if (row[i] < acc[i]) acc[i] = row[i];
  }
}

void min_plus_update_avx2(double* acc, const double* row, std::size_t n, double offset) {
  const __m256d off = _mm256_set1_pd(offset);
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    const __m256d c = _mm256_add_pd(off, _mm256_loadu_pd(row + i));
    const __m256d a = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_min_pd(c, a));
  }
  for (; i < n; ++i) {
    const double candidate = offset + row[i];
    if (candidate < acc[i]) acc[i] = candidate;
  }
}

double max_value_avx2(const double* v, std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= lanes) {
    __m256d m = _mm256_set1_pd(best);
    for (; i + lanes <= n; i += lanes) m = _mm256_max_pd(_mm256_loadu_pd(v + i), m);
    alignas(32) double parts[lanes];
    _mm256_store_pd(parts, m);
    for (double p : parts) {
      if (p > best) best = p;
    }
  }
  for (; i < n; ++i) {
    if (v[i] > best) best = v[i];
  }
  return best;
}

std::size_t argmax_avx2(const double* v, std::size_t n) {
  if (n == 0) return 0;
  const double best = max_value_avx2(v, n);
  const __m256d b = _mm256_set1_pd(best);
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(v + i), b, _CMP_EQ_OQ));
    if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    if (v[i] == best) return i;
  }
  return 0;
}

std::size_t count_le_avx2(const double* v, std::size_t n, double threshold) {
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(v + i), t, _CMP_LE_OQ));
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) count += v[i] <= threshold ? 1 : 0;
  return count;
}

std::size_t count_both_le_avx2(const double* a, const double* b, std::size_t n,
                               double threshold) {
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    const __m256d ma = _mm256_cmp_pd(_mm256_loadu_pd(a + i), t, _CMP_LE_OQ);
    const __m256d mb = _mm256_cmp_pd(_mm256_loadu_pd(b + i), t, _CMP_LE_OQ);
    const int mask = _mm256_movemask_pd(_mm256_and_pd(ma, mb));
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) count += (a[i] <= threshold && b[i] <= threshold) ? 1 : 0;
  return count;
}

std::size_t first_exceeding_avx2(const double* lhs, const double* rhs, std::size_t n,
                                 double offset) {
  const __m256d off = _mm256_set1_pd(offset);
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    const __m256d bound = _mm256_add_pd(off, _mm256_loadu_pd(rhs + i));
    const int mask =
        _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(lhs + i), bound, _CMP_GT_OQ));
    if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    if (lhs[i] > offset + rhs[i]) return i;
  }
  return n;
}

}  // namespace

const KernelSet& avx2_table() noexcept {
  static const KernelSet set{
      "avx2",      min_update_avx2, min_plus_update_avx2, max_value_avx2,
      argmax_avx2, count_le_avx2,   count_both_le_avx2,   first_exceeding_avx2,
  };
  return set;
}

}  // namespace kcenter::kernels::detail
