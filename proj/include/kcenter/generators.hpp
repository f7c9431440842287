#pragma once

#include <kcenter/instance.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kcenter {

/// What a generator promises about its output, for the guarantee record.
struct Guarantee {
  std::string family;
  std::uint64_t seed = 0;
  std::map<std::string, double> values;  // alpha, epsilon, r, separation, ...
  std::string statement;
};

struct PlantedInstance {
  Instance instance;
  Clustering truth;
  Guarantee guarantee;

  std::size_t k() const noexcept { return truth.k; }
};

/// k clusters around lattice centers with every cross-cluster pair farther than
/// 2 alpha r and every member within r of its center; Euclidean distances
/// snapped up to the grid.
PlantedInstance gen_planted_symmetric(std::size_t n, std::size_t k, double r, double alpha,
                                      std::uint64_t seed);

/// The symmetric layout with a margin widened by `skew`, every ordered pair
/// scaled by an independent factor in [1, skew], then closed under shortest
/// paths. Attempts are redrawn until Properties 1/2 and the A-structure hold.
PlantedInstance gen_planted_asymmetric(std::size_t n, std::size_t k, double r, double alpha,
                                       double skew, std::uint64_t seed,
                                       std::size_t max_attempts = 64);

/// Point indices of the 18-point bad-center family.
struct BadCenterLayout {
  static constexpr PointId cx = 0;
  static constexpr PointId cy = 6;
  static constexpr PointId cz = 12;
  static constexpr PointId x(std::size_t i) { return i; }        // i in 1..5
  static constexpr PointId y(std::size_t i) { return 6 + i; }    // i in 1..5
  static constexpr PointId z(std::size_t i) { return 12 + i; }   // i in 1..5
};

/// Three clusters of six with radius 1; members of the x and z clusters reach
/// c_y and every y_j at distance 1/alpha (snapped down), making c_y a bad center.
PlantedInstance gen_bad_center_18(double alpha);

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// star5 (K_{1,4}), pathN, cycleN, completeN, emptyN.
Graph named_graph(const std::string& name);
Graph random_graph(std::size_t vertices, double edge_probability, std::uint64_t seed);

/// d = 1 on edges, 2 elsewhere, 0 on the diagonal.
Instance gen_from_dominating_set(const Graph& graph);

/// Appends ceil(n / epsilon) points at distance alpha (D + 1) from everything,
/// where D is the base diameter. The truth is the base optimum plus singleton
/// pads, so it needs an oracle-feasible base.
PlantedInstance gen_eps_padding(const Instance& base, std::size_t k, double alpha, double epsilon);

Instance gen_random_metric(std::size_t n, Mode mode, std::uint64_t seed);

}  // namespace kcenter
