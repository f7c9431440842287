#include <kcenter/instance.hpp>

#include <limits>

namespace kcenter {

// Hungarian method (shortest augmenting paths with potentials) on cost = -weight.
std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<long long>>& weight) {
  const std::size_t m = weight.size();
  constexpr long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(m + 1, 0), v(m + 1, 0);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);
  for (std::size_t row = 1; row <= m; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<long long> minv(m + 1, inf);
    std::vector<bool> used(m + 1, false);
    do {
      used[col0] = true;
      const std::size_t r = match[col0];
      long long delta = inf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= m; ++col) {
        if (used[col]) continue;
        const long long reduced = -weight[r - 1][col - 1] - u[r] - v[col];
        if (reduced < minv[col]) {
          minv[col] = reduced;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= m; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> row_to_col(m, 0);
  for (std::size_t col = 1; col <= m; ++col) row_to_col[match[col] - 1] = col - 1;
  return row_to_col;
}

std::size_t misclassified(const Clustering& a, const Clustering& b) {
  if (a.k != b.k) {
    throw Error(ErrorCode::mismatched_k, "clusterings have k = " + std::to_string(a.k) +
                                             " and k = " + std::to_string(b.k));
  }
  if (a.size() != b.size()) {
    throw Error(ErrorCode::invalid_argument, "clusterings cover different point counts");
  }
  std::vector<std::vector<long long>> overlap(a.k, std::vector<long long>(a.k, 0));
  for (PointId p = 0; p < a.size(); ++p) ++overlap[a.assignment[p]][b.assignment[p]];
  const auto matching = max_weight_assignment(overlap);
  long long kept = 0;
  for (std::size_t i = 0; i < a.k; ++i) kept += overlap[i][matching[i]];
  return a.size() - static_cast<std::size_t>(kept);
}

double epsilon_distance(const Clustering& a, const Clustering& b) {
  if (a.size() == 0) return 0.0;
  return static_cast<double>(misclassified(a, b)) / static_cast<double>(a.size());
}

}  // namespace kcenter
