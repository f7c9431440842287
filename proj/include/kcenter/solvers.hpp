#pragma once

#include <kcenter/instance.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcenter {

enum class SolveStatus { exact_claim, eps_close_claim, approximation_only, not_resilient };

enum class Failure {
  none,
  not_resilient,       // surviving sets or components differ from k
  no_cover,            // no candidate set covers every point within 3 r
  not_stable,          // intersection-graph components differ from k
  verifier_stuck,      // no eligible merge while more than k components remain
  needs_more_centers,  // the greedy cover consumed more than k centers
  no_candidate_works,  // radius sweep exhausted every candidate
};

std::string_view to_string(SolveStatus status);
std::string_view to_string(Failure failure);

struct SolveOutcome {
  std::optional<Clustering> clustering;
  SolveStatus status = SolveStatus::not_resilient;
  Failure failure = Failure::none;
  std::size_t failure_count = 0;  // the offending count for count-based failures
  std::map<std::string, std::string> diagnostics;
  std::optional<double> radius_used;

  bool ok() const noexcept { return status != SolveStatus::not_resilient; }
};

/// Gonzalez traversal from point 0; ties toward the smaller index. Throws
/// Error(asymmetric_input) on asymmetric tables.
std::vector<PointId> farthest_first(const Instance& instance, std::size_t k);

struct CoverResult {
  std::vector<PointId> centers;
  bool success = false;
};

/// Marks everything within 2r of the smallest unmarked point until all points
/// are marked. Succeeds when at most k centers were used.
CoverResult hochbaum_shmoys_cover(const DistanceTable& table, double r, std::size_t k);

using CenterProcedure = std::function<std::vector<PointId>(const Instance&, std::size_t)>;

/// Voronoi partition of the approximate centers, reported as exact.
SolveOutcome exact_via_approximation(const Instance& instance, std::size_t k,
                                     const CenterProcedure& approx);

SolveOutcome asymmetric_2pr(const Instance& instance, std::size_t k, double r_star);

SolveOutcome symmetric_3eps(const Instance& instance, std::size_t k, double r_star);

inline constexpr std::uint64_t default_cover_budget = 50'000'000;

/// Hop-metric cover of the symmetrized set followed by a brute-force repair of
/// at most six centers. Throws Error(budget_exceeded) when more than `budget`
/// candidate sets would be examined.
SolveOutcome asymmetric_3eps(const Instance& instance, std::size_t k, double r_star,
                             std::uint64_t budget = default_cover_budget);

/// Signed test over point sets: negative for sets strictly inside an optimal
/// cluster, nonnegative for sets containing one.
class ClusterVerifier {
 public:
  using Function = std::function<double(std::span<const PointId>)>;

  /// f(B) = |B| - n/k, evaluated exactly as k|B| - n.
  static ClusterVerifier equal_size(std::size_t n, std::size_t k);
  /// f(B) = (best 1-center radius of B) - target, so sets reaching a cluster's
  /// full radius score nonnegative.
  static ClusterVerifier target_cost(const DistanceTable& table, double target);
  static ClusterVerifier custom(std::string name, Function f);

  double operator()(std::span<const PointId> members) const { return f_(members); }
  const std::string& name() const noexcept { return name_; }

 private:
  ClusterVerifier(std::string name, Function f) : name_(std::move(name)), f_(std::move(f)) {}

  std::string name_;
  Function f_;
};

SolveOutcome weak_proximity_linkage(const Instance& instance, std::size_t k,
                                    const ClusterVerifier& verifier);

SolveOutcome approx_stability_2eps(const Instance& instance, std::size_t k, double r_star,
                                   double epsilon);

enum class SolverId { ff2, hs, thm3, alg1_2pr, thm5_3eps, alg2_3eps_asym, alg3_linkage, alg4_2eps_as };

std::string_view to_string(SolverId id);
std::optional<SolverId> parse_solver_id(std::string_view text);
std::span<const SolverId> all_solver_ids();

/// Whether the solver consumes a radius guess.
bool takes_radius(SolverId id);

struct SolverOptions {
  std::optional<double> r_star;  // absent: sweep the candidate radii
  double epsilon = 0.0;          // alg4 only
  std::uint64_t cover_budget = default_cover_budget;
};

/// Runs a radius-parameterized solver at one radius.
SolveOutcome run_at_radius(SolverId id, const Instance& instance, std::size_t k, double r,
                           const SolverOptions& options);

/// Candidate radii in ascending order: 0 and every distinct off-diagonal distance.
std::vector<double> candidate_radii(const DistanceTable& table);

/// First candidate radius whose outcome succeeds and is self-consistent: each
/// cluster has a member reaching all others within factor * r, where the factor
/// is the solver's own cover guarantee (1 for exact solvers, 2 for hs, 3 for
/// the asymmetric (3,eps) solver).
SolveOutcome sweep_radius(SolverId id, const Instance& instance, std::size_t k,
                          const SolverOptions& options);

/// Dispatches by id, sweeping when the solver needs a radius and none is given.
SolveOutcome run_solver(SolverId id, const Instance& instance, std::size_t k,
                        const SolverOptions& options);

}  // namespace kcenter
