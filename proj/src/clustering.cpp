#include <kcenter/instance.hpp>
#include <kcenter/kernels.hpp>

#include <algorithm>
#include <limits>

namespace kcenter {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

void check_points(std::size_t n, std::span<const PointId> points, const char* what) {
  std::vector<bool> seen(n, false);
  for (PointId p : points) {
    if (p >= n) {
      throw Error(ErrorCode::invalid_argument,
                  std::string(what) + " contains out-of-range point " + std::to_string(p));
    }
    if (seen[p]) {
      throw Error(ErrorCode::invalid_argument,
                  std::string(what) + " repeats point " + std::to_string(p));
    }
    seen[p] = true;
  }
}

}  // namespace

std::vector<std::vector<PointId>> Clustering::clusters() const {
  std::vector<std::vector<PointId>> out(k);
  for (PointId p = 0; p < assignment.size(); ++p) out[assignment[p]].push_back(p);
  return out;
}

std::optional<std::string> clustering_violation(const DistanceTable& table,
                                                const Clustering& clustering) {
  const std::size_t n = table.size();
  if (clustering.assignment.size() != n) return "assignment does not cover every point";
  if (clustering.centers.size() != clustering.k) return "center count differs from k";
  std::vector<std::size_t> sizes(clustering.k, 0);
  for (PointId p = 0; p < n; ++p) {
    if (clustering.assignment[p] >= clustering.k) {
      return "point " + std::to_string(p) + " has label outside [0,k)";
    }
    ++sizes[clustering.assignment[p]];
  }
  double radius = 0.0;
  for (std::size_t i = 0; i < clustering.k; ++i) {
    if (sizes[i] == 0) return "cluster " + std::to_string(i) + " is empty";
    const PointId c = clustering.centers[i];
    if (c >= n || clustering.assignment[c] != i) {
      return "center of cluster " + std::to_string(i) + " is not a member";
    }
  }
  for (PointId p = 0; p < n; ++p) {
    radius = std::max(radius, table(clustering.centers[clustering.assignment[p]], p));
  }
  if (radius != clustering.radius) return "radius does not match the center-to-member maximum";
  return std::nullopt;
}

Clustering make_clustering(const DistanceTable& table, std::vector<std::size_t> assignment,
                           std::vector<PointId> centers) {
  Clustering clustering;
  clustering.k = centers.size();
  clustering.assignment = std::move(assignment);
  clustering.centers = std::move(centers);
  clustering.radius = 0.0;
  if (clustering.assignment.size() == table.size() &&
      std::all_of(clustering.centers.begin(), clustering.centers.end(),
                  [&](PointId c) { return c < table.size(); })) {
    for (PointId p = 0; p < table.size(); ++p) {
      if (clustering.assignment[p] < clustering.k) {
        clustering.radius = std::max(
            clustering.radius, table(clustering.centers[clustering.assignment[p]], p));
      }
    }
  }
  if (auto problem = clustering_violation(table, clustering)) {
    throw Error(ErrorCode::invalid_argument, "invalid clustering: " + *problem);
  }
  return clustering;
}

double one_center_radius(const DistanceTable& table, std::span<const PointId> group,
                         PointId* best_center) {
  double best = infinity;
  PointId chosen = 0;
  for (PointId c : group) {
    double worst = 0.0;
    for (PointId q : group) worst = std::max(worst, table(c, q));
    if (worst < best || (worst == best && c < chosen)) {
      best = worst;
      chosen = c;
    }
  }
  if (best_center != nullptr) *best_center = chosen;
  return best;
}

Clustering clustering_from_groups(const DistanceTable& table,
                                  const std::vector<std::vector<PointId>>& groups) {
  const std::size_t n = table.size();
  std::vector<std::size_t> assignment(n, groups.size());
  std::vector<PointId> centers(groups.size(), 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].empty()) throw Error(ErrorCode::invalid_argument, "empty cluster group");
    for (PointId p : groups[i]) {
      if (p >= n || assignment[p] != groups.size()) {
        throw Error(ErrorCode::invalid_argument, "groups do not partition the points");
      }
      assignment[p] = i;
    }
    one_center_radius(table, groups[i], &centers[i]);
  }
  return make_clustering(table, std::move(assignment), std::move(centers));
}

Clustering canonical(const Clustering& clustering) {
  std::vector<std::size_t> relabel(clustering.k, clustering.k);
  std::size_t next = 0;
  for (std::size_t label : clustering.assignment) {
    if (relabel[label] == clustering.k) relabel[label] = next++;
  }
  Clustering out = clustering;
  for (auto& label : out.assignment) label = relabel[label];
  for (std::size_t i = 0; i < clustering.k; ++i) {
    if (relabel[i] < clustering.k) out.centers[relabel[i]] = clustering.centers[i];
  }
  return out;
}

bool same_partition(const Clustering& a, const Clustering& b) {
  if (a.k != b.k || a.size() != b.size()) return false;
  return canonical(a).assignment == canonical(b).assignment;
}

double cost(const DistanceTable& table, std::span<const PointId> centers) {
  if (centers.empty()) throw Error(ErrorCode::invalid_argument, "cost needs at least one center");
  std::vector<double> nearest(table.size(), infinity);
  for (PointId c : centers) {
    if (c >= table.size()) throw Error(ErrorCode::invalid_argument, "center out of range");
    kernels::min_update(nearest, table.row(c));
  }
  return table.size() == 0 ? 0.0 : kernels::max_value(nearest);
}

Clustering voronoi_partition(const DistanceTable& table, std::span<const PointId> centers) {
  const std::size_t n = table.size();
  if (centers.empty()) throw Error(ErrorCode::invalid_argument, "no centers given");
  check_points(n, centers, "center set");
  std::vector<std::size_t> assignment(n, centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) assignment[centers[i]] = i;
  for (PointId p = 0; p < n; ++p) {
    if (assignment[p] != centers.size()) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < centers.size(); ++i) {
      const double d = table(centers[i], p);
      const double incumbent = table(centers[best], p);
      if (d < incumbent || (d == incumbent && centers[i] < centers[best])) best = i;
    }
    assignment[p] = best;
  }
  return make_clustering(table, std::move(assignment),
                         std::vector<PointId>(centers.begin(), centers.end()));
}

std::vector<PointId> ball(const DistanceTable& table, PointId center, double radius,
                          std::span<const PointId> domain) {
  std::vector<PointId> out;
  for (PointId q : domain) {
    if (table(center, q) <= radius) out.push_back(q);
  }
  return out;
}

std::vector<PointId> ball(const DistanceTable& table, PointId center, double radius) {
  std::vector<PointId> out;
  const auto row = table.row(center);
  for (PointId q = 0; q < table.size(); ++q) {
    if (row[q] <= radius) out.push_back(q);
  }
  return out;
}

std::vector<std::vector<PointId>> threshold_components(const DistanceTable& table,
                                                       std::span<const PointId> vertices,
                                                       double threshold) {
  const std::size_t m = vertices.size();
  DisjointSets sets(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const PointId p = vertices[a];
      const PointId q = vertices[b];
      if (table(p, q) <= threshold && table(q, p) <= threshold) sets.unite(a, b);
    }
  }
  std::vector<std::vector<PointId>> by_root(m);
  for (std::size_t a = 0; a < m; ++a) by_root[sets.find(a)].push_back(vertices[a]);
  std::vector<std::vector<PointId>> out;
  for (auto& component : by_root) {
    if (component.empty()) continue;
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

std::vector<std::vector<PointId>> threshold_components(const DistanceTable& table,
                                                       double threshold) {
  std::vector<PointId> all(table.size());
  for (PointId p = 0; p < all.size(); ++p) all[p] = p;
  return threshold_components(table, all, threshold);
}

SymmetrizedSet symmetrized_set(const DistanceTable& table, double r_star,
                               const Clustering* reference) {
  const std::size_t n = table.size();
  SymmetrizedSet set;
  set.contains.assign(n, false);
  for (PointId p = 0; p < n; ++p) {
    bool ok = true;
    for (PointId q = 0; q < n && ok; ++q) {
      if (table(q, p) <= r_star && table(p, q) > r_star) ok = false;
    }
    if (ok) {
      set.contains[p] = true;
      set.members.push_back(p);
    }
  }
  if (set.members.empty()) {
    throw Error(ErrorCode::empty_symmetrized_set,
                "no point satisfies the symmetry condition at r = " + format_double(r_star));
  }
  set.nearest.assign(n, 0);
  for (PointId p = 0; p < n; ++p) {
    if (set.contains[p]) {
      set.nearest[p] = p;
      continue;
    }
    PointId best = set.members.front();
    for (PointId q : set.members) {
      if (table(q, p) < table(best, p)) best = q;
    }
    set.nearest[p] = best;
  }
  if (reference != nullptr) {
    set.restricted_clusters.assign(reference->k, {});
    for (PointId p : set.members) set.restricted_clusters[reference->assignment[p]].push_back(p);
  }
  return set;
}

}  // namespace kcenter
