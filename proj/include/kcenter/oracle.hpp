#pragma once

#include <kcenter/instance.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kcenter {

inline constexpr std::uint64_t default_enumeration_budget = 2'000'000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

struct OracleResult {
  double optimal_radius = 0.0;
  std::vector<std::vector<PointId>> optimal_center_sets;  // lexicographic order
  bool partition_unique = true;
  Clustering clustering;  // Voronoi partition of the first optimal set
};

/// Exhaustive search over all k-subsets. Works on any table, metric or not.
/// Throws Error(budget_exceeded) when C(n,k) exceeds `budget`.
OracleResult brute_force_optimal(const DistanceTable& table, std::size_t k,
                                 std::uint64_t budget = default_enumeration_budget);

struct StabilityParams {
  double alpha = 1.0;
  double epsilon = 0.0;

  /// Throws Error(invalid_argument) unless alpha >= 1 and 0 <= epsilon <= 1.
  void validate() const;
};

struct Perturbation {
  double alpha = 1.0;
  DistanceTable dprime;
};

/// Description of the first pair breaking d <= d' <= alpha d, if any.
std::optional<std::string> perturbation_violation(const DistanceTable& base,
                                                  const Perturbation& perturbation);

using PointPair = std::pair<PointId, PointId>;

/// d'(p,q) = min(alpha d, alpha r*) on capped pairs and alpha d elsewhere.
/// Throws Error(cap_too_tight) if a capped pair has d(p,q) > alpha r*.
Perturbation build_lemma1_perturbation(const DistanceTable& table, double r_star, double alpha,
                                       std::span<const PointPair> capped_pairs);

/// Every off-diagonal entry scaled by an independent factor uniform on [1, alpha].
/// Each (seed, pair) gets its own stream, so the table does not depend on fill order.
Perturbation sample_perturbation(const DistanceTable& table, double alpha, std::uint64_t seed);

struct Counterexample {
  Perturbation perturbation;
  Clustering opt;        // optimum under the original distances
  Clustering violating;  // an optimum under d'
  std::size_t moved = 0; // misclassified(opt, violating)
  double eps_distance = 0.0;
  bool dprime_unique = true;  // whether all d'-optima share one partition
  std::string origin;         // which perturbation family produced it
};

struct FalsifyResult {
  enum class Verdict { falsified, none_found };

  Verdict verdict = Verdict::none_found;
  std::optional<Counterexample> counterexample;
  std::size_t perturbations_tried = 0;
  bool targeted_phase_complete = false;
  Clustering opt;
  bool reference_used = false;
  double r_star = 0.0;
};

std::string_view to_string(FalsifyResult::Verdict verdict);

/// Searches for an alpha-perturbation whose optimum is more than epsilon from
/// OPT: the identity, then capped-pair families, then seeded random scalings,
/// stopping after `budget` perturbations. A returned counterexample has already
/// been re-checked against the bounds and the oracle; a failed re-check throws
/// Error(internal). When `reference` is an optimum under d (its centers attain
/// r* and it is their Voronoi partition) it stands in for OPT; otherwise the
/// oracle's first optimum does.
FalsifyResult falsify_resilience(const DistanceTable& table, std::size_t k,
                                 const StabilityParams& params, std::size_t budget,
                                 std::uint64_t seed = 0,
                                 std::uint64_t enumeration_budget = default_enumeration_budget,
                                 const Clustering* reference = nullptr);

/// Independent re-validation of a counterexample; returns the reason it fails.
std::optional<std::string> recheck_counterexample(const DistanceTable& table, std::size_t k,
                                                  const StabilityParams& params,
                                                  const Counterexample& counterexample,
                                                  std::uint64_t enumeration_budget =
                                                      default_enumeration_budget);

struct EmissionStats {
  std::uint64_t emitted = 0;
  std::uint64_t rechecked = 0;
};

/// Process-wide tally of counterexamples returned by falsify_resilience and of
/// those that passed the re-check on emission.
EmissionStats emission_stats() noexcept;

}  // namespace kcenter
