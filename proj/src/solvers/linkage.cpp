#include <kcenter/solvers.hpp>

#include <algorithm>
#include <limits>

namespace kcenter {

ClusterVerifier ClusterVerifier::equal_size(std::size_t n, std::size_t k) {
  const double total = static_cast<double>(n);
  const double parts = static_cast<double>(k);
  return ClusterVerifier("equal-size", [total, parts](std::span<const PointId> members) {
    return parts * static_cast<double>(members.size()) - total;
  });
}

ClusterVerifier ClusterVerifier::target_cost(const DistanceTable& table, double target) {
  return ClusterVerifier("target-cost", [&table, target](std::span<const PointId> members) {
    return one_center_radius(table, members) - target;
  });
}

ClusterVerifier ClusterVerifier::custom(std::string name, Function f) {
  return ClusterVerifier(std::move(name), std::move(f));
}

namespace {

std::vector<std::vector<PointId>> components_of(DisjointSets& sets, std::size_t n) {
  std::vector<std::vector<PointId>> by_root(n);
  for (PointId p = 0; p < n; ++p) by_root[sets.find(p)].push_back(p);
  return by_root;
}

}  // namespace

SolveOutcome weak_proximity_linkage(const Instance& instance, std::size_t k,
                                    const ClusterVerifier& verifier) {
  if (instance.mode() != Mode::symmetric) {
    throw Error(ErrorCode::asymmetric_input, "verifier linkage needs a symmetric instance");
  }
  const std::size_t n = instance.size();
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "k must lie in [1, n]");

  SolveOutcome outcome;
  DisjointSets committed(n);
  std::size_t rounds = 0;
  std::size_t scratch_total = 0;
  while (committed.components() > k) {
    ++rounds;
    DisjointSets working = committed;
    std::optional<std::pair<PointId, PointId>> last_edge;
    while (true) {
      auto members = components_of(working, n);
      std::vector<bool> negative(n, false);
      bool any_negative = false;
      for (PointId root = 0; root < n; ++root) {
        if (members[root].empty()) continue;
        negative[root] = verifier(members[root]) < 0.0;
        any_negative = any_negative || negative[root];
      }
      if (!any_negative) break;

      double best = std::numeric_limits<double>::infinity();
      std::optional<std::pair<PointId, PointId>> pick;
      for (PointId p = 0; p < n; ++p) {
        const std::size_t rp = working.find(p);
        for (PointId q = p + 1; q < n; ++q) {
          const std::size_t rq = working.find(q);
          if (rp == rq || (!negative[rp] && !negative[rq])) continue;
          const double d = instance(p, q);
          if (d < best) {
            best = d;
            pick = std::make_pair(p, q);
          }
        }
      }
      if (!pick) break;
      working.unite(pick->first, pick->second);
      last_edge = pick;
      ++scratch_total;
    }
    if (!last_edge) {
      outcome.status = SolveStatus::not_resilient;
      outcome.failure = Failure::verifier_stuck;
      outcome.failure_count = committed.components();
      outcome.diagnostics["rounds"] = std::to_string(rounds);
      return outcome;
    }
    auto members = components_of(working, n);
    bool settled = true;
    for (const auto& component : members) {
      if (!component.empty() && verifier(component) < 0.0) settled = false;
    }
    if (!settled) {
      outcome.status = SolveStatus::not_resilient;
      outcome.failure = Failure::verifier_stuck;
      outcome.failure_count = working.components();
      outcome.diagnostics["rounds"] = std::to_string(rounds);
      return outcome;
    }
    committed.unite(last_edge->first, last_edge->second);
  }

  std::vector<std::vector<PointId>> groups;
  for (auto& component : components_of(committed, n)) {
    if (!component.empty()) groups.push_back(std::move(component));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  outcome.clustering = clustering_from_groups(instance, groups);
  outcome.status = SolveStatus::exact_claim;
  outcome.diagnostics["rounds"] = std::to_string(rounds);
  outcome.diagnostics["scratch_edges"] = std::to_string(scratch_total);
  outcome.diagnostics["verifier"] = verifier.name();
  return outcome;
}

}  // namespace kcenter
