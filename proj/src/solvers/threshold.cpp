#include <kcenter/kernels.hpp>
#include <kcenter/solvers.hpp>

#include <algorithm>

namespace kcenter {

namespace {

void require_symmetric(const Instance& instance, const char* solver) {
  if (instance.mode() != Mode::symmetric) {
    throw Error(ErrorCode::asymmetric_input, std::string(solver) + " needs a symmetric instance");
  }
}

SolveOutcome from_components(const Instance& instance, std::size_t k,
                             const std::vector<std::vector<PointId>>& components,
                             Failure failure, double r) {
  SolveOutcome outcome;
  outcome.diagnostics["components"] = std::to_string(components.size());
  if (components.size() != k) {
    outcome.status = SolveStatus::not_resilient;
    outcome.failure = failure;
    outcome.failure_count = components.size();
    return outcome;
  }
  outcome.clustering = clustering_from_groups(instance, components);
  outcome.status = SolveStatus::exact_claim;
  outcome.radius_used = r;
  return outcome;
}

}  // namespace

SolveOutcome symmetric_3eps(const Instance& instance, std::size_t k, double r_star) {
  require_symmetric(instance, "threshold components");
  if (k == 0 || k > instance.size()) throw Error(ErrorCode::invalid_argument, "k must lie in [1, n]");
  return from_components(instance, k, threshold_components(instance, r_star),
                         Failure::not_resilient, r_star);
}

SolveOutcome approx_stability_2eps(const Instance& instance, std::size_t k, double r_star,
                                   double epsilon) {
  require_symmetric(instance, "ball-intersection linkage");
  const std::size_t n = instance.size();
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "k must lie in [1, n]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must lie in [0, 1]");
  }
  const std::size_t needed = fraction_floor(epsilon, n);
  const double reach = 2.0 * r_star;
  DisjointSets sets(n);
  std::size_t edges = 0;
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      const std::size_t shared =
          kernels::count_both_le(instance.table().row(p), instance.table().row(q), reach);
      if (shared > needed) {
        ++edges;
        sets.unite(p, q);
      }
    }
  }
  std::vector<std::vector<PointId>> by_root(n);
  for (PointId p = 0; p < n; ++p) by_root[sets.find(p)].push_back(p);
  std::vector<std::vector<PointId>> components;
  for (auto& component : by_root) {
    if (!component.empty()) components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  SolveOutcome outcome = from_components(instance, k, components, Failure::not_stable, r_star);
  outcome.diagnostics["edges"] = std::to_string(edges);
  outcome.diagnostics["shared_points_needed"] = std::to_string(needed + 1);
  return outcome;
}

}  // namespace kcenter
