#include <kcenter/solvers.hpp>

#include <array>

namespace kcenter {

namespace {

constexpr std::array<SolverId, 8> ids{
    SolverId::ff2,       SolverId::hs,           SolverId::thm3,
    SolverId::alg1_2pr,  SolverId::thm5_3eps,    SolverId::alg2_3eps_asym,
    SolverId::alg3_linkage, SolverId::alg4_2eps_as,
};

// Pads a short center list with the smallest unused points.
std::vector<PointId> pad_centers(std::vector<PointId> centers, std::size_t k, std::size_t n) {
  std::vector<bool> used(n, false);
  for (PointId c : centers) used[c] = true;
  for (PointId p = 0; p < n && centers.size() < k; ++p) {
    if (!used[p]) centers.push_back(p);
  }
  return centers;
}

}  // namespace

std::string_view to_string(SolverId id) {
  switch (id) {
    case SolverId::ff2: return "ff2";
    case SolverId::hs: return "hs";
    case SolverId::thm3: return "thm3";
    case SolverId::alg1_2pr: return "alg1-2pr";
    case SolverId::thm5_3eps: return "thm5-3eps";
    case SolverId::alg2_3eps_asym: return "alg2-3eps-asym";
    case SolverId::alg3_linkage: return "alg3-linkage";
    case SolverId::alg4_2eps_as: return "alg4-2eps-as";
  }
  return "unknown";
}

std::optional<SolverId> parse_solver_id(std::string_view text) {
  for (SolverId id : ids) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::span<const SolverId> all_solver_ids() { return ids; }

bool takes_radius(SolverId id) {
  return id != SolverId::ff2 && id != SolverId::thm3 && id != SolverId::alg3_linkage;
}

SolveOutcome run_at_radius(SolverId id, const Instance& instance, std::size_t k, double r,
                           const SolverOptions& options) {
  switch (id) {
    case SolverId::hs: {
      if (k == 0 || k > instance.size()) {
        throw Error(ErrorCode::invalid_argument, "k must lie in [1, n]");
      }
      const CoverResult cover = hochbaum_shmoys_cover(instance, r, k);
      SolveOutcome outcome;
      outcome.diagnostics["centers_used"] = std::to_string(cover.centers.size());
      if (!cover.success) {
        outcome.status = SolveStatus::not_resilient;
        outcome.failure = Failure::needs_more_centers;
        outcome.failure_count = cover.centers.size();
        return outcome;
      }
      outcome.clustering =
          voronoi_partition(instance, pad_centers(cover.centers, k, instance.size()));
      outcome.status = SolveStatus::approximation_only;
      outcome.radius_used = r;
      return outcome;
    }
    case SolverId::alg1_2pr: return asymmetric_2pr(instance, k, r);
    case SolverId::thm5_3eps: return symmetric_3eps(instance, k, r);
    case SolverId::alg2_3eps_asym: return asymmetric_3eps(instance, k, r, options.cover_budget);
    case SolverId::alg4_2eps_as: return approx_stability_2eps(instance, k, r, options.epsilon);
    default:
      throw Error(ErrorCode::invalid_argument,
                  std::string(to_string(id)) + " does not take a radius");
  }
}

SolveOutcome run_solver(SolverId id, const Instance& instance, std::size_t k,
                        const SolverOptions& options) {
  switch (id) {
    case SolverId::ff2: {
      SolveOutcome outcome;
      outcome.clustering = voronoi_partition(instance, farthest_first(instance, k));
      outcome.status = SolveStatus::approximation_only;
      return outcome;
    }
    case SolverId::thm3: return exact_via_approximation(instance, k, farthest_first);
    case SolverId::alg3_linkage:
      return weak_proximity_linkage(instance, k, ClusterVerifier::equal_size(instance.size(), k));
    default: break;
  }
  if (options.r_star) {
    SolveOutcome outcome = run_at_radius(id, instance, k, *options.r_star, options);
    if (outcome.ok()) outcome.radius_used = *options.r_star;
    return outcome;
  }
  return sweep_radius(id, instance, k, options);
}

}  // namespace kcenter
