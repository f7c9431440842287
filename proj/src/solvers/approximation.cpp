#include <kcenter/kernels.hpp>
#include <kcenter/solvers.hpp>

#include <limits>

namespace kcenter {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::exact_claim: return "exact-claim";
    case SolveStatus::eps_close_claim: return "eps-close-claim";
    case SolveStatus::approximation_only: return "approximation-only";
    case SolveStatus::not_resilient: return "not-resilient";
  }
  return "unknown";
}

std::string_view to_string(Failure failure) {
  switch (failure) {
    case Failure::none: return "none";
    case Failure::not_resilient: return "NotResilient";
    case Failure::no_cover: return "NoCover";
    case Failure::not_stable: return "NotStable";
    case Failure::verifier_stuck: return "VerifierStuck";
    case Failure::needs_more_centers: return "NeedsMoreCenters";
    case Failure::no_candidate_works: return "NoCandidateWorks";
  }
  return "unknown";
}

std::vector<PointId> farthest_first(const Instance& instance, std::size_t k) {
  if (instance.mode() != Mode::symmetric) {
    throw Error(ErrorCode::asymmetric_input, "farthest-first traversal needs a symmetric instance");
  }
  const std::size_t n = instance.size();
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "k must lie in [1, n]");
  std::vector<PointId> centers{0};
  std::vector<bool> chosen(n, false);
  chosen[0] = true;
  std::vector<double> nearest(instance.table().row(0).begin(), instance.table().row(0).end());
  while (centers.size() < k) {
    PointId next = kernels::argmax(nearest);
    if (nearest[next] == 0.0) {
      next = 0;
      while (chosen[next]) ++next;
    }
    chosen[next] = true;
    centers.push_back(next);
    kernels::min_update(nearest, instance.table().row(next));
  }
  return centers;
}

CoverResult hochbaum_shmoys_cover(const DistanceTable& table, double r, std::size_t k) {
  const std::size_t n = table.size();
  CoverResult result;
  std::vector<bool> marked(n, false);
  const double reach = 2.0 * r;
  for (PointId c = 0; c < n; ++c) {
    if (marked[c]) continue;
    result.centers.push_back(c);
    const auto row = table.row(c);
    for (PointId q = 0; q < n; ++q) {
      if (row[q] <= reach) marked[q] = true;
    }
  }
  result.success = result.centers.size() <= k;
  return result;
}

SolveOutcome exact_via_approximation(const Instance& instance, std::size_t k,
                                     const CenterProcedure& approx) {
  const auto centers = approx(instance, k);
  SolveOutcome outcome;
  outcome.clustering = voronoi_partition(instance, centers);
  outcome.status = SolveStatus::exact_claim;
  outcome.diagnostics["approx_cost"] = format_double(outcome.clustering->radius);
  return outcome;
}

}  // namespace kcenter
