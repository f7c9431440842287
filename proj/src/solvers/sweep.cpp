#include <kcenter/solvers.hpp>

#include <algorithm>

namespace kcenter {

namespace {

double cover_factor(SolverId id) {
  switch (id) {
    case SolverId::hs: return 2.0;
    case SolverId::alg2_3eps_asym: return 3.0;
    default: return 1.0;
  }
}

bool self_consistent(const DistanceTable& table, const Clustering& clustering, double limit) {
  for (const auto& members : clustering.clusters()) {
    if (one_center_radius(table, members) > limit) return false;
  }
  return true;
}

}  // namespace

std::vector<double> candidate_radii(const DistanceTable& table) {
  std::vector<double> radii{0.0};
  for (PointId p = 0; p < table.size(); ++p) {
    for (PointId q = 0; q < table.size(); ++q) {
      if (p != q) radii.push_back(table(p, q));
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

SolveOutcome sweep_radius(SolverId id, const Instance& instance, std::size_t k,
                          const SolverOptions& options) {
  if (!takes_radius(id)) {
    throw Error(ErrorCode::invalid_argument,
                std::string(to_string(id)) + " does not take a radius");
  }
  const double factor = cover_factor(id);
  const auto radii = candidate_radii(instance);
  std::size_t tried = 0;
  std::size_t budget_skips = 0;
  for (double r : radii) {
    ++tried;
    SolveOutcome outcome;
    try {
      outcome = run_at_radius(id, instance, k, r, options);
    } catch (const Error& error) {
      if (error.code() != ErrorCode::budget_exceeded) throw;
      ++budget_skips;
      continue;
    }
    if (!outcome.ok() || !self_consistent(instance, *outcome.clustering, factor * r)) continue;
    outcome.radius_used = r;
    outcome.diagnostics["sweep_candidates_tried"] = std::to_string(tried);
    if (budget_skips > 0) outcome.diagnostics["sweep_budget_skips"] = std::to_string(budget_skips);
    return outcome;
  }
  SolveOutcome outcome;
  outcome.status = SolveStatus::not_resilient;
  outcome.failure = Failure::no_candidate_works;
  outcome.failure_count = radii.size();
  outcome.diagnostics["sweep_candidates_tried"] = std::to_string(tried);
  if (budget_skips > 0) outcome.diagnostics["sweep_budget_skips"] = std::to_string(budget_skips);
  return outcome;
}

}  // namespace kcenter
