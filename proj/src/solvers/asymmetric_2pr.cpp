#include <kcenter/solvers.hpp>

#include <algorithm>

namespace kcenter {

namespace {

struct BallPrune {
  std::vector<std::vector<PointId>> balls;  // indexed like the domain
  std::vector<bool> alive;
  std::size_t pruned_by_closer_outsider = 0;
  std::size_t pruned_as_subset = 0;
};

// Steps 2-4 over `domain`: balls around domain points, drop balls with a member
// that some outsider reaches strictly faster than the ball center, then drop
// balls contained in another survivor (equal sets keep the smaller center).
BallPrune prune_balls(const DistanceTable& table, std::span<const PointId> domain, double r) {
  const std::size_t m = domain.size();
  BallPrune prune;
  prune.balls.reserve(m);
  for (PointId c : domain) prune.balls.push_back(ball(table, c, r, domain));
  prune.alive.assign(m, true);

  std::vector<bool> inside(table.size(), false);
  for (std::size_t a = 0; a < m; ++a) {
    const PointId c = domain[a];
    for (PointId p : prune.balls[a]) inside[p] = true;
    bool discard = false;
    for (PointId p : prune.balls[a]) {
      for (PointId q : domain) {
        if (!inside[q] && table(q, p) < table(c, p)) {
          discard = true;
          break;
        }
      }
      if (discard) break;
    }
    for (PointId p : prune.balls[a]) inside[p] = false;
    if (discard) {
      prune.alive[a] = false;
      ++prune.pruned_by_closer_outsider;
    }
  }

  const std::vector<bool> after_step3 = prune.alive;
  for (std::size_t a = 0; a < m; ++a) {
    if (!after_step3[a]) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !after_step3[b]) continue;
      const auto& ga = prune.balls[a];
      const auto& gb = prune.balls[b];
      if (!std::includes(gb.begin(), gb.end(), ga.begin(), ga.end())) continue;
      if (ga.size() < gb.size() || b < a) {
        prune.alive[a] = false;
        ++prune.pruned_as_subset;
        break;
      }
    }
  }
  return prune;
}

SolveOutcome failed(std::size_t count, std::map<std::string, std::string> diagnostics) {
  SolveOutcome outcome;
  outcome.status = SolveStatus::not_resilient;
  outcome.failure = Failure::not_resilient;
  outcome.failure_count = count;
  outcome.diagnostics = std::move(diagnostics);
  return outcome;
}

}  // namespace

SolveOutcome asymmetric_2pr(const Instance& instance, std::size_t k, double r_star) {
  const std::size_t n = instance.size();
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "k must lie in [1, n]");
  std::map<std::string, std::string> diagnostics;
  SymmetrizedSet a;
  try {
    a = symmetrized_set(instance, r_star);
  } catch (const Error& error) {
    if (error.code() != ErrorCode::empty_symmetrized_set) throw;
    diagnostics["a_size"] = "0";
    return failed(0, std::move(diagnostics));
  }
  diagnostics["a_size"] = std::to_string(a.members.size());

  const BallPrune prune = prune_balls(instance, a.members, r_star);
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (prune.alive[i]) survivors.push_back(i);
  }
  diagnostics["pruned_closer_outsider"] = std::to_string(prune.pruned_by_closer_outsider);
  diagnostics["pruned_subset"] = std::to_string(prune.pruned_as_subset);
  diagnostics["survivors"] = std::to_string(survivors.size());

  std::vector<PointId> everything(n);
  for (PointId p = 0; p < n; ++p) everything[p] = p;
  const BallPrune unrestricted = prune_balls(instance, everything, r_star);
  std::size_t unrestricted_count = 0;
  for (PointId c : a.members) unrestricted_count += unrestricted.alive[c] ? 1 : 0;
  diagnostics["survivors_unrestricted_balls"] = std::to_string(unrestricted_count);

  if (survivors.size() != k) return failed(survivors.size(), std::move(diagnostics));

  std::vector<std::size_t> assignment(n, k);
  std::vector<PointId> centers;
  for (std::size_t label = 0; label < k; ++label) {
    const std::size_t index = survivors[label];
    centers.push_back(a.members[index]);
    for (PointId p : prune.balls[index]) {
      if (assignment[p] != k) {
        diagnostics["problem"] = "surviving sets overlap at point " + std::to_string(p);
        return failed(survivors.size(), std::move(diagnostics));
      }
      assignment[p] = label;
    }
  }
  for (PointId p : a.members) {
    if (assignment[p] == k) {
      diagnostics["problem"] = "point " + std::to_string(p) + " of A is in no surviving set";
      return failed(survivors.size(), std::move(diagnostics));
    }
  }
  for (PointId p = 0; p < n; ++p) {
    if (!a.contains[p]) assignment[p] = assignment[a.nearest[p]];
  }
  SolveOutcome outcome;
  outcome.clustering = make_clustering(instance, std::move(assignment), std::move(centers));
  outcome.status = SolveStatus::exact_claim;
  outcome.diagnostics = std::move(diagnostics);
  outcome.radius_used = r_star;
  return outcome;
}

}  // namespace kcenter
