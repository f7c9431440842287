#include <kcenter/kernels.hpp>
#include <kcenter/oracle.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

namespace kcenter {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

std::atomic<std::uint64_t> emitted_count{0};
std::atomic<std::uint64_t> rechecked_count{0};

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Lexicographic k-subset enumeration with one min-accumulator per depth.
class SubsetSearch {
 public:
  SubsetSearch(const DistanceTable& table, std::size_t k)
      : table_(table), k_(k), acc_(k + 1, std::vector<double>(table.size(), infinity)),
        chosen_(k) {}

  OracleResult run() {
    descend(0, 0);
    OracleResult result;
    result.optimal_radius = best_;
    result.optimal_center_sets = std::move(minimizers_);
    return result;
  }

 private:
  void descend(std::size_t depth, PointId start) {
    const std::size_t n = table_.size();
    if (depth == k_) {
      const double value = kernels::max_value(acc_[depth]);
      if (value < best_) {
        best_ = value;
        minimizers_.clear();
      }
      if (value == best_) minimizers_.push_back(chosen_);
      return;
    }
    for (PointId c = start; c + (k_ - depth) <= n; ++c) {
      chosen_[depth] = c;
      acc_[depth + 1] = acc_[depth];
      kernels::min_update(acc_[depth + 1], table_.row(c));
      descend(depth + 1, c + 1);
    }
  }

  const DistanceTable& table_;
  std::size_t k_;
  std::vector<std::vector<double>> acc_;
  std::vector<PointId> chosen_;
  double best_ = infinity;
  std::vector<std::vector<PointId>> minimizers_;
};

void require_square_match(const DistanceTable& a, const DistanceTable& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::invalid_argument, "perturbed table size differs from the base");
  }
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using wide = unsigned __int128;
  wide value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(value);
}

OracleResult brute_force_optimal(const DistanceTable& table, std::size_t k,
                                 std::uint64_t budget) {
  const std::size_t n = table.size();
  if (k == 0 || k > n) {
    throw Error(ErrorCode::invalid_argument,
                "k must lie in [1, n]; got k = " + std::to_string(k) + ", n = " +
                    std::to_string(n));
  }
  const std::uint64_t subsets = binomial(n, k);
  if (subsets > budget) {
    throw Error(ErrorCode::budget_exceeded, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                ") subsets exceed the enumeration budget of " +
                                                std::to_string(budget));
  }
  OracleResult result = SubsetSearch(table, k).run();
  result.clustering = voronoi_partition(table, result.optimal_center_sets.front());
  const Clustering first = canonical(result.clustering);
  for (std::size_t i = 1; i < result.optimal_center_sets.size() && result.partition_unique; ++i) {
    const Clustering other = voronoi_partition(table, result.optimal_center_sets[i]);
    if (canonical(other).assignment != first.assignment) result.partition_unique = false;
  }
  return result;
}

void StabilityParams::validate() const {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::invalid_argument, "alpha must be a finite value >= 1");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must lie in [0, 1]");
  }
}

std::optional<std::string> perturbation_violation(const DistanceTable& base,
                                                  const Perturbation& perturbation) {
  if (base.size() != perturbation.dprime.size()) return "table sizes differ";
  const double alpha = perturbation.alpha;
  for (PointId p = 0; p < base.size(); ++p) {
    for (PointId q = 0; q < base.size(); ++q) {
      const double d = base(p, q);
      const double dp = perturbation.dprime(p, q);
      if (!(d <= dp && dp <= alpha * d)) {
        return "d'(" + std::to_string(p) + "," + std::to_string(q) + ") = " + format_double(dp) +
               " outside [" + format_double(d) + ", " + format_double(alpha * d) + "]";
      }
    }
  }
  return std::nullopt;
}

Perturbation build_lemma1_perturbation(const DistanceTable& table, double r_star, double alpha,
                                       std::span<const PointPair> capped_pairs) {
  if (!(alpha >= 1.0)) throw Error(ErrorCode::invalid_argument, "alpha must be >= 1");
  const std::size_t n = table.size();
  Perturbation out{alpha, DistanceTable(n)};
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) out.dprime.at(p, q) = alpha * table(p, q);
  }
  const double cap = alpha * r_star;
  for (const auto& [p, q] : capped_pairs) {
    if (p >= n || q >= n) throw Error(ErrorCode::invalid_argument, "capped pair out of range");
    if (table(p, q) > cap) {
      throw Error(ErrorCode::cap_too_tight, "d(" + std::to_string(p) + "," + std::to_string(q) +
                                                ") = " + format_double(table(p, q)) +
                                                " exceeds alpha * r* = " + format_double(cap));
    }
    out.dprime.at(p, q) = std::min(alpha * table(p, q), cap);
  }
  return out;
}

Perturbation sample_perturbation(const DistanceTable& table, double alpha, std::uint64_t seed) {
  if (!(alpha >= 1.0)) throw Error(ErrorCode::invalid_argument, "alpha must be >= 1");
  const std::size_t n = table.size();
  Perturbation out{alpha, table};
  const std::uint64_t stream = splitmix64(seed);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) {
      if (p == q) continue;
      const std::uint64_t pair = static_cast<std::uint64_t>(p) * n + q;
      const double u = 1.0 + (alpha - 1.0) * unit_interval(splitmix64(stream ^ splitmix64(pair)));
      const double d = table(p, q);
      out.dprime.at(p, q) = std::clamp(d * u, d, alpha * d);
    }
  }
  return out;
}

std::string_view to_string(FalsifyResult::Verdict verdict) {
  return verdict == FalsifyResult::Verdict::falsified ? "falsified" : "no violation found";
}

namespace {

struct Probe {
  std::size_t k;
  std::size_t tolerated;  // largest allowed misclassified count
  std::uint64_t enumeration_budget;
};

// Returns the d'-optimum farthest from opt when it moves more than the tolerance.
std::optional<Counterexample> probe(const Probe& config, const Clustering& opt,
                                    Perturbation perturbation, std::string origin) {
  const OracleResult under = brute_force_optimal(perturbation.dprime, config.k,
                                                 config.enumeration_budget);
  std::optional<Counterexample> found;
  for (const auto& centers : under.optimal_center_sets) {
    Clustering candidate = voronoi_partition(perturbation.dprime, centers);
    const std::size_t moved = misclassified(opt, candidate);
    if (moved > config.tolerated && (!found || moved > found->moved)) {
      found = Counterexample{};
      found->violating = std::move(candidate);
      found->moved = moved;
    }
  }
  if (!found) return std::nullopt;
  found->perturbation = std::move(perturbation);
  found->opt = opt;
  found->eps_distance = static_cast<double>(found->moved) / static_cast<double>(opt.size());
  found->dprime_unique = under.partition_unique;
  found->origin = std::move(origin);
  return found;
}

std::vector<PointPair> capped_towards(const DistanceTable& table, PointId from,
                                      const std::vector<PointId>& targets, double cap) {
  std::vector<PointPair> pairs;
  for (PointId x : targets) {
    if (x != from && table(from, x) <= cap) pairs.emplace_back(from, x);
  }
  return pairs;
}

}  // namespace

FalsifyResult falsify_resilience(const DistanceTable& table, std::size_t k,
                                 const StabilityParams& params, std::size_t budget,
                                 std::uint64_t seed, std::uint64_t enumeration_budget,
                                 const Clustering* reference) {
  params.validate();
  const std::size_t n = table.size();
  const OracleResult base = brute_force_optimal(table, k, enumeration_budget);
  FalsifyResult result;
  result.opt = base.clustering;
  result.r_star = base.optimal_radius;
  if (reference != nullptr && reference->k == k && reference->size() == n &&
      cost(table, reference->centers) == base.optimal_radius &&
      same_partition(voronoi_partition(table, reference->centers), *reference)) {
    result.opt = *reference;
    result.reference_used = true;
  }
  const Probe config{k, fraction_floor(params.epsilon, n), enumeration_budget};
  const double cap = params.alpha * result.r_star;
  const auto clusters = result.opt.clusters();

  auto attempt = [&](Perturbation perturbation, std::string origin) {
    ++result.perturbations_tried;
    auto found = probe(config, result.opt, std::move(perturbation), std::move(origin));
    if (!found) return false;
    ++emitted_count;
    if (auto problem = recheck_counterexample(table, k, params, *found, enumeration_budget)) {
      throw Error(ErrorCode::internal, "counterexample failed its re-check: " + *problem);
    }
    ++rechecked_count;
    result.verdict = FalsifyResult::Verdict::falsified;
    result.counterexample = std::move(found);
    return true;
  };
  auto capped = [&](const std::vector<PointPair>& pairs, std::string origin) {
    return attempt(build_lemma1_perturbation(table, result.r_star, params.alpha, pairs),
                   std::move(origin));
  };
  auto exhausted = [&] { return result.perturbations_tried >= budget; };

  if (exhausted()) return result;
  if (attempt(Perturbation{params.alpha, table}, "identity")) return result;

  // q takes over cluster j.
  for (PointId q = 0; q < n; ++q) {
    for (std::size_t j = 0; j < k; ++j) {
      if (exhausted()) return result;
      if (q == result.opt.centers[j]) continue;
      const auto pairs = capped_towards(table, q, clusters[j], cap);
      if (capped(pairs, "cap q=" + std::to_string(q) + " onto cluster " + std::to_string(j))) {
        return result;
      }
    }
  }
  // q serves cluster j together with its own cluster.
  for (PointId q = 0; q < n; ++q) {
    const std::size_t own = result.opt.assignment[q];
    for (std::size_t j = 0; j < k; ++j) {
      if (j == own) continue;
      if (exhausted()) return result;
      auto targets = clusters[j];
      targets.insert(targets.end(), clusters[own].begin(), clusters[own].end());
      const auto pairs = capped_towards(table, q, targets, cap);
      if (capped(pairs, "cap q=" + std::to_string(q) + " onto clusters " + std::to_string(own) +
                            "," + std::to_string(j))) {
        return result;
      }
    }
  }
  // q takes over its own cluster and pulls p away from another one.
  for (PointId q = 0; q < n; ++q) {
    const std::size_t own = result.opt.assignment[q];
    for (PointId p = 0; p < n; ++p) {
      if (result.opt.assignment[p] == own) continue;
      if (exhausted()) return result;
      auto targets = clusters[own];
      targets.push_back(p);
      const auto pairs = capped_towards(table, q, targets, cap);
      if (capped(pairs, "cap q=" + std::to_string(q) + " onto its cluster plus p=" +
                            std::to_string(p))) {
        return result;
      }
    }
  }
  result.targeted_phase_complete = true;

  for (std::uint64_t draw = 0; !exhausted(); ++draw) {
    if (attempt(sample_perturbation(table, params.alpha, seed + draw),
                "random seed " + std::to_string(seed + draw))) {
      return result;
    }
  }
  return result;
}

std::optional<std::string> recheck_counterexample(const DistanceTable& table, std::size_t k,
                                                  const StabilityParams& params,
                                                  const Counterexample& counterexample,
                                                  std::uint64_t enumeration_budget) {
  const auto& dprime = counterexample.perturbation.dprime;
  require_square_match(table, dprime);
  if (counterexample.perturbation.alpha > params.alpha) return "perturbation alpha exceeds alpha";
  if (auto problem = perturbation_violation(table, counterexample.perturbation)) return problem;

  const OracleResult base = brute_force_optimal(table, k, enumeration_budget);
  bool opt_is_optimal = false;
  for (const auto& centers : base.optimal_center_sets) {
    if (same_partition(voronoi_partition(table, centers), counterexample.opt)) {
      opt_is_optimal = true;
      break;
    }
  }
  if (!opt_is_optimal) return "reference clustering is not an optimum under d";

  const auto& centers = counterexample.violating.centers;
  const OracleResult under = brute_force_optimal(dprime, k, enumeration_budget);
  if (cost(dprime, centers) != under.optimal_radius) {
    return "violating center set is not optimal under d'";
  }
  if (!same_partition(voronoi_partition(dprime, centers), counterexample.violating)) {
    return "violating clustering is not the Voronoi partition of its centers under d'";
  }
  const std::size_t moved = misclassified(counterexample.opt, counterexample.violating);
  if (moved <= fraction_floor(params.epsilon, table.size())) {
    return "violating clustering is within epsilon of the reference";
  }
  return std::nullopt;
}

EmissionStats emission_stats() noexcept {
  return EmissionStats{emitted_count.load(), rechecked_count.load()};
}

}  // namespace kcenter
