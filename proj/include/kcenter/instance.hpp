#pragma once

#include <kcenter/types.hpp>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kcenter {

struct Violation {
  enum class Kind { non_finite, negative_distance, nonzero_diagonal, symmetry, triangle };

  Kind kind;
  PointId p = 0;
  PointId s = 0;  // middle point of a triangle violation, otherwise unused
  PointId q = 0;

  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

std::string_view to_string(Violation::Kind kind);

/// A distance table known to satisfy the metric invariants for its mode.
class Instance {
 public:
  /// Validates and throws Error(invalid_argument) naming the first violation.
  static Instance from_table(DistanceTable table, Mode mode, double slack = 0.0);

  std::size_t size() const noexcept { return table_.size(); }
  Mode mode() const noexcept { return mode_; }
  const DistanceTable& table() const noexcept { return table_; }
  double operator()(PointId from, PointId to) const noexcept { return table_(from, to); }

  operator const DistanceTable&() const noexcept { return table_; }

 private:
  Instance(DistanceTable table, Mode mode) : table_(std::move(table)), mode_(mode) {}

  DistanceTable table_;
  Mode mode_ = Mode::symmetric;

  friend std::variant<Instance, Violation> validate_instance(DistanceTable, Mode, double);
};

/// First violation in scan order: entries row-major (finiteness, sign, diagonal,
/// symmetry), then triangles (p, s, q) lexicographically. `slack` loosens only the
/// symmetry and triangle comparisons.
std::optional<Violation> find_violation(const DistanceTable& table, Mode mode,
                                        double slack = 0.0);

std::variant<Instance, Violation> validate_instance(DistanceTable table, Mode mode,
                                                    double slack = 0.0);

/// All-pairs shortest paths (Floyd-Warshall) over the ordered-pair table.
DistanceTable shortest_path_closure(DistanceTable table);

struct Clustering {
  std::size_t k = 0;
  std::vector<std::size_t> assignment;  // point -> cluster label
  std::vector<PointId> centers;         // centers[i] is assigned to cluster i
  double radius = 0.0;

  std::size_t size() const noexcept { return assignment.size(); }
  /// Members of each label, ascending.
  std::vector<std::vector<PointId>> clusters() const;
};

/// Builds a clustering from labels and centers, computing the radius. Throws
/// Error(invalid_argument) if the result would break a Clustering invariant.
Clustering make_clustering(const DistanceTable& table, std::vector<std::size_t> assignment,
                           std::vector<PointId> centers);

/// Uses the best 1-center of every group (ties to the smallest index).
Clustering clustering_from_groups(const DistanceTable& table,
                                  const std::vector<std::vector<PointId>>& groups);

/// Relabels clusters in order of their smallest member.
Clustering canonical(const Clustering& clustering);

bool same_partition(const Clustering& a, const Clustering& b);

/// Description of the first broken Clustering invariant, if any.
std::optional<std::string> clustering_violation(const DistanceTable& table,
                                                const Clustering& clustering);

/// Smallest radius at which some member of `group` reaches every member.
double one_center_radius(const DistanceTable& table, std::span<const PointId> group,
                         PointId* best_center = nullptr);

/// max over points of the distance from the nearest center (center -> point).
double cost(const DistanceTable& table, std::span<const PointId> centers);

/// Assigns each point to its nearest center, ties toward the smaller center
/// point id. Every center is kept in its own cluster, so no cluster is empty.
Clustering voronoi_partition(const DistanceTable& table, std::span<const PointId> centers);

/// Points left over after optimally matching the clusters of `a` and `b`.
std::size_t misclassified(const Clustering& a, const Clustering& b);

/// misclassified(a, b) / n.
double epsilon_distance(const Clustering& a, const Clustering& b);

/// Maximum-weight perfect matching on a square weight matrix; returns the
/// column matched to each row.
std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<long long>>& weight);

std::vector<PointId> ball(const DistanceTable& table, PointId center, double radius,
                          std::span<const PointId> domain);
std::vector<PointId> ball(const DistanceTable& table, PointId center, double radius);

/// Components of the graph joining p and q when both d(p,q) and d(q,p) are at
/// most `threshold`. Components are ascending and ordered by smallest member.
std::vector<std::vector<PointId>> threshold_components(const DistanceTable& table,
                                                       std::span<const PointId> vertices,
                                                       double threshold);
std::vector<std::vector<PointId>> threshold_components(const DistanceTable& table,
                                                       double threshold);

struct SymmetrizedSet {
  std::vector<PointId> members;
  std::vector<bool> contains;
  std::vector<PointId> nearest;  // nearest member (members map to themselves)
  std::vector<std::vector<PointId>> restricted_clusters;  // filled when a reference is given
};

/// A = {p : every q with d(q,p) <= r also has d(p,q) <= r}. Throws
/// Error(empty_symmetrized_set) when no point qualifies.
SymmetrizedSet symmetrized_set(const DistanceTable& table, double r_star,
                               const Clustering* reference = nullptr);

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x) noexcept;
  bool unite(std::size_t a, std::size_t b) noexcept;
  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

}  // namespace kcenter
