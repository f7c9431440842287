#include <kcenter/kernels.hpp>
#include <kcenter/solvers.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace kcenter {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();
constexpr std::size_t max_repaired = 6;

// Hop counts in the threshold graph on `vertices` (+inf when unreachable).
DistanceTable hop_metric(const DistanceTable& table, std::span<const PointId> vertices, double r) {
  const std::size_t m = vertices.size();
  std::vector<std::vector<std::size_t>> adjacent(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const PointId p = vertices[a];
      const PointId q = vertices[b];
      if (table(p, q) <= r && table(q, p) <= r) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
      }
    }
  }
  DistanceTable hops(m, infinity);
  for (std::size_t source = 0; source < m; ++source) {
    std::deque<std::size_t> frontier{source};
    hops.at(source, source) = 0.0;
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      for (std::size_t v : adjacent[u]) {
        if (hops(source, v) == infinity) {
          hops.at(source, v) = hops(source, u) + 1.0;
          frontier.push_back(v);
        }
      }
    }
  }
  return hops;
}

// Lexicographic search over (subset of `pool` of size `from_pool`) x (subset of
// the remaining points of size `extra`) for a set reaching every point within
// `reach`.
class RepairSearch {
 public:
  RepairSearch(const DistanceTable& table, std::vector<PointId> pool, double reach,
               std::uint64_t budget)
      : table_(table), pool_(std::move(pool)), reach_(reach), budget_(budget) {}

  std::optional<std::vector<PointId>> run(std::size_t from_pool, std::size_t extra) {
    from_pool_ = from_pool;
    extra_ = extra;
    const std::size_t levels = from_pool + extra;
    acc_.assign(levels + 1, std::vector<double>(table_.size(), infinity));
    chosen_.assign(levels, 0);
    used_.assign(table_.size(), false);
    found_.reset();
    pick_pool(0, 0);
    return found_;
  }

  std::uint64_t examined() const noexcept { return examined_; }

 private:
  void pick_pool(std::size_t depth, std::size_t start) {
    if (found_) return;
    if (depth == from_pool_) {
      pick_extra(depth, 0);
      return;
    }
    for (std::size_t i = start; i + (from_pool_ - depth) <= pool_.size() && !found_; ++i) {
      const PointId c = pool_[i];
      chosen_[depth] = c;
      used_[c] = true;
      acc_[depth + 1] = acc_[depth];
      kernels::min_update(acc_[depth + 1], table_.row(c));
      pick_pool(depth + 1, i + 1);
      used_[c] = false;
    }
  }

  void pick_extra(std::size_t depth, PointId start) {
    if (found_) return;
    const std::size_t n = table_.size();
    if (depth == from_pool_ + extra_) {
      if (++examined_ > budget_) {
        throw Error(ErrorCode::budget_exceeded,
                    "repair search examined more than " + std::to_string(budget_) +
                        " candidate center sets");
      }
      if (kernels::max_value(acc_[depth]) <= reach_) found_ = chosen_;
      return;
    }
    for (PointId c = start; c < n && !found_; ++c) {
      if (used_[c]) continue;
      chosen_[depth] = c;
      acc_[depth + 1] = acc_[depth];
      kernels::min_update(acc_[depth + 1], table_.row(c));
      pick_extra(depth + 1, c + 1);
    }
  }

  const DistanceTable& table_;
  std::vector<PointId> pool_;
  double reach_;
  std::uint64_t budget_;
  std::size_t from_pool_ = 0;
  std::size_t extra_ = 0;
  std::vector<std::vector<double>> acc_;
  std::vector<PointId> chosen_;
  std::vector<bool> used_;
  std::optional<std::vector<PointId>> found_;
  std::uint64_t examined_ = 0;
};

}  // namespace

SolveOutcome asymmetric_3eps(const Instance& instance, std::size_t k, double r_star,
                             std::uint64_t budget) {
  const std::size_t n = instance.size();
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "k must lie in [1, n]");
  SolveOutcome outcome;
  outcome.status = SolveStatus::not_resilient;
  outcome.failure = Failure::no_cover;

  SymmetrizedSet a;
  try {
    a = symmetrized_set(instance, r_star);
  } catch (const Error& error) {
    if (error.code() != ErrorCode::empty_symmetrized_set) throw;
    outcome.diagnostics["a_size"] = "0";
    return outcome;
  }
  outcome.diagnostics["a_size"] = std::to_string(a.members.size());

  const DistanceTable hops = hop_metric(instance, a.members, r_star);
  const CoverResult cover = hochbaum_shmoys_cover(hops, 1.0, k);
  outcome.diagnostics["hs_centers"] = std::to_string(cover.centers.size());
  if (!cover.success) {
    outcome.failure_count = cover.centers.size();
    return outcome;
  }
  const std::size_t first_k_prime = k > max_repaired ? k - max_repaired : 1;
  outcome.diagnostics["k_prime"] = std::to_string(std::max(first_k_prime, cover.centers.size()));

  std::vector<PointId> pool;
  for (std::size_t index : cover.centers) pool.push_back(a.members[index]);

  RepairSearch search(instance, pool, 3.0 * r_star, budget);
  const std::size_t min_extra = k > pool.size() ? k - pool.size() : 0;
  const std::size_t max_extra = std::min(k, std::max(max_repaired, min_extra));
  for (std::size_t x = min_extra; x <= max_extra; ++x) {
    auto found = search.run(k - x, x);
    if (!found) continue;
    std::sort(found->begin(), found->end());
    outcome.clustering = voronoi_partition(instance, *found);
    outcome.status = SolveStatus::eps_close_claim;
    outcome.failure = Failure::none;
    outcome.radius_used = r_star;
    outcome.diagnostics["x"] = std::to_string(x);
    outcome.diagnostics["sets_examined"] = std::to_string(search.examined());
    return outcome;
  }
  outcome.diagnostics["sets_examined"] = std::to_string(search.examined());
  return outcome;
}

}  // namespace kcenter
