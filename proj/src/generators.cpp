#include <kcenter/analysis.hpp>
#include <kcenter/generators.hpp>
#include <kcenter/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace kcenter {

namespace {

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

[[noreturn]] void infeasible(const std::string& message) {
  throw Error(ErrorCode::infeasible_params, message);
}

[[noreturn]] void check_failed(const std::string& message) {
  throw Error(ErrorCode::construction_check_failed, message);
}

struct Layout {
  DistanceTable table;
  std::vector<std::size_t> labels;
};

// Clusters around jittered lattice centers `spacing` apart, members uniform in
// a disk of radius `spread`; the first point of each label sits on its center.
Layout scatter(std::size_t n, std::size_t k, double spread, double spacing, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(k))));
  std::vector<std::array<double, 2>> centers(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double jx = (u01(rng) - 0.5) * 0.1 * spacing;
    const double jy = (u01(rng) - 0.5) * 0.1 * spacing;
    centers[i] = {static_cast<double>(i % side) * spacing + jx,
                  static_cast<double>(i / side) * spacing + jy};
  }
  Layout layout;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t size = n / k + (i < n % k ? 1 : 0);
    layout.labels.insert(layout.labels.end(), size, i);
  }
  std::shuffle(layout.labels.begin(), layout.labels.end(), rng);

  std::vector<std::array<double, 2>> position(n);
  std::vector<bool> placed_center(k, false);
  for (PointId p = 0; p < n; ++p) {
    const std::size_t i = layout.labels[p];
    if (!placed_center[i]) {
      placed_center[i] = true;
      position[p] = centers[i];
      continue;
    }
    const double radius = spread * std::sqrt(u01(rng));
    const double angle = 2.0 * std::numbers::pi * u01(rng);
    position[p] = {centers[i][0] + radius * std::cos(angle),
                   centers[i][1] + radius * std::sin(angle)};
  }
  layout.table = DistanceTable(n);
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      const double d = snap_up(std::hypot(position[p][0] - position[q][0],
                                          position[p][1] - position[q][1]));
      layout.table.at(p, q) = d;
      layout.table.at(q, p) = d;
    }
  }
  if (find_violation(layout.table, Mode::symmetric)) {
    layout.table = shortest_path_closure(std::move(layout.table));
  }
  return layout;
}

std::vector<std::vector<PointId>> groups_of(const std::vector<std::size_t>& labels, std::size_t k) {
  std::vector<std::vector<PointId>> groups(k);
  for (PointId p = 0; p < labels.size(); ++p) groups[labels[p]].push_back(p);
  return groups;
}

double min_cross_distance(const DistanceTable& table, const std::vector<std::size_t>& labels) {
  double best = std::numeric_limits<double>::infinity();
  for (PointId p = 0; p < table.size(); ++p) {
    for (PointId q = 0; q < table.size(); ++q) {
      if (labels[p] != labels[q]) best = std::min(best, table(p, q));
    }
  }
  return best;
}

void check_planted_params(std::size_t n, std::size_t k, double r, double alpha) {
  if (k == 0 || n < k) infeasible("need n >= k >= 1");
  if (!(r > 0.0) || !std::isfinite(r)) infeasible("r must be positive");
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) infeasible("alpha must be >= 1");
}

}  // namespace

PlantedInstance gen_planted_symmetric(std::size_t n, std::size_t k, double r, double alpha,
                                      std::uint64_t seed) {
  check_planted_params(n, k, r, alpha);
  Layout layout = scatter(n, k, 0.98 * r, 1.25 * (2.0 * alpha * r + 2.0 * r), seed);
  const double separation = min_cross_distance(layout.table, layout.labels);
  Clustering truth = clustering_from_groups(layout.table, groups_of(layout.labels, k));
  if (!(truth.radius <= r)) check_failed("planted radius exceeds r");
  if (k > 1 && !(separation > 2.0 * alpha * r)) check_failed("cross-cluster separation too small");

  Guarantee guarantee{"planted-sym", seed, {}, ""};
  guarantee.values = {{"n", double(n)},          {"k", double(k)},
                      {"r", r},                  {"alpha", alpha},
                      {"truth_radius", truth.radius}, {"separation", separation}};
  guarantee.statement =
      "every cross-cluster pair is farther than 2*alpha*r and the truth radius is at most r";
  return PlantedInstance{Instance::from_table(std::move(layout.table), Mode::symmetric),
                         std::move(truth), std::move(guarantee)};
}

PlantedInstance gen_planted_asymmetric(std::size_t n, std::size_t k, double r, double alpha,
                                       double skew, std::uint64_t seed,
                                       std::size_t max_attempts) {
  check_planted_params(n, k, r, alpha);
  if (!(skew >= 1.0) || !std::isfinite(skew)) infeasible("skew must be >= 1");
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t attempt_seed = attempt == 0 ? seed : mix(seed + attempt);
    Layout layout = scatter(n, k, 0.98 * r / skew,
                            1.25 * (2.0 * alpha * skew * r + 2.0 * skew * r), attempt_seed);
    std::mt19937_64 rng(mix(attempt_seed ^ 0x5eedULL));
    for (PointId p = 0; p < n; ++p) {
      for (PointId q = 0; q < n; ++q) {
        if (p == q) continue;
        const double factor = 1.0 + (skew - 1.0) * u01(rng);
        layout.table.at(p, q) = snap_up(layout.table(p, q) * factor);
      }
    }
    layout.table = shortest_path_closure(std::move(layout.table));
    if (find_violation(layout.table, Mode::asymmetric)) continue;
    Clustering truth = clustering_from_groups(layout.table, groups_of(layout.labels, k));
    if (!(truth.radius <= r)) continue;
    const StructureReport report = check_structure(layout.table, truth, truth.radius, alpha);
    if (!report.property1 || !report.property2 || !report.a_respects_opt) continue;

    Guarantee guarantee{"planted-asym", seed, {}, ""};
    guarantee.values = {{"n", double(n)},
                        {"k", double(k)},
                        {"r", r},
                        {"alpha", alpha},
                        {"skew", skew},
                        {"attempt", double(attempt)},
                        {"truth_radius", truth.radius},
                        {"separation", min_cross_distance(layout.table, layout.labels)}};
    guarantee.statement =
        "properties 1 and 2 hold and A respects the truth at the truth radius";
    return PlantedInstance{Instance::from_table(std::move(layout.table), Mode::asymmetric),
                           std::move(truth), std::move(guarantee)};
  }
  throw Error(ErrorCode::rejection_budget_exceeded,
              "no attempt passed the structure checks within " + std::to_string(max_attempts) +
                  " draws");
}

PlantedInstance gen_bad_center_18(double alpha) {
  using L = BadCenterLayout;
  if (!(alpha > 1.0) || !std::isfinite(alpha)) infeasible("alpha must exceed 1");
  constexpr std::size_t n = 18;
  const double near = snap_down(1.0 / alpha);
  const double far = snap_up(2.0 * (alpha + 2.0));
  DistanceTable table(n, far);
  for (PointId p = 0; p < n; ++p) table.at(p, p) = 0.0;
  for (std::size_t i = 1; i <= 5; ++i) {
    table.at(L::cx, L::x(i)) = 1.0;
    table.at(L::cy, L::y(i)) = 1.0;
    table.at(L::cz, L::z(i)) = 1.0;
    for (PointId source : {L::x(i), L::z(i)}) {
      table.at(source, L::cy) = near;
      for (std::size_t j = 1; j <= 5; ++j) table.at(source, L::y(j)) = near;
    }
  }
  table = shortest_path_closure(std::move(table));

  std::vector<std::size_t> labels(n);
  for (PointId p = 0; p < n; ++p) labels[p] = p / 6;
  Clustering truth = make_clustering(table, labels, {L::cx, L::cy, L::cz});

  auto require = [](bool ok, const char* what) {
    if (!ok) check_failed(std::string("bad-center instance: ") + what);
  };
  require(truth.radius == 1.0, "truth radius must be 1");
  for (PointId q = 0; q < n; ++q) {
    if (q != L::cx) require(table(q, L::cx) > alpha, "c_x must be a forced center");
    if (q != L::cz) require(table(q, L::cz) > alpha, "c_z must be a forced center");
  }
  for (std::size_t i = 1; i <= 5; ++i) {
    for (std::size_t j = 1; j <= 5; ++j) {
      if (i != j) require(table(L::y(i), L::y(j)) > alpha, "no y point may serve the y cluster");
      for (PointId source : {L::x(i), L::z(i)}) {
        require(alpha * table(source, L::y(j)) < table(L::cx, L::y(j)) &&
                    alpha * table(source, L::y(j)) < table(L::cz, L::y(j)),
                "x and z points must stay closer to y points than c_x and c_z");
      }
    }
  }
  require(table(L::x(1), L::cy) <= 1.0, "c_y must be reachable within 1 from outside");
  auto instance = Instance::from_table(std::move(table), Mode::asymmetric);
  const OracleResult oracle = brute_force_optimal(instance, 3);
  require(oracle.optimal_radius == 1.0, "oracle radius must be 1");
  const StructureReport report = check_structure(instance, truth, 1.0, alpha);
  require(report.bad_centers == std::vector<PointId>{L::cy}, "c_y must be the only bad center");

  Guarantee guarantee{"bad-center-18", 0, {}, ""};
  guarantee.values = {{"n", 18.0}, {"k", 3.0}, {"alpha", alpha}, {"r_star", 1.0},
                      {"epsilon", 1.0 / 18.0}, {"near", near}, {"far", far}};
  guarantee.statement =
      "c_x and c_z are forced centers, c_y is the only bad center, and the optimal radius is 1";
  return PlantedInstance{std::move(instance), std::move(truth), std::move(guarantee)};
}

Graph named_graph(const std::string& name) {
  auto count_after = [&](std::size_t prefix) -> std::size_t {
    const std::string digits = name.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw Error(ErrorCode::invalid_argument, "unknown graph name: " + name);
    }
    return static_cast<std::size_t>(std::stoul(digits));
  };
  Graph graph;
  if (name == "star5") {
    graph.vertices = 5;
    for (std::size_t v = 1; v < 5; ++v) graph.edges.emplace_back(0, v);
  } else if (name.rfind("path", 0) == 0) {
    graph.vertices = count_after(4);
    for (std::size_t v = 1; v < graph.vertices; ++v) graph.edges.emplace_back(v - 1, v);
  } else if (name.rfind("cycle", 0) == 0) {
    graph.vertices = count_after(5);
    for (std::size_t v = 1; v < graph.vertices; ++v) graph.edges.emplace_back(v - 1, v);
    if (graph.vertices > 2) graph.edges.emplace_back(graph.vertices - 1, 0);
  } else if (name.rfind("complete", 0) == 0) {
    graph.vertices = count_after(8);
    for (std::size_t u = 0; u < graph.vertices; ++u) {
      for (std::size_t v = u + 1; v < graph.vertices; ++v) graph.edges.emplace_back(u, v);
    }
  } else if (name.rfind("empty", 0) == 0) {
    graph.vertices = count_after(5);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown graph name: " + name);
  }
  if (graph.vertices == 0) throw Error(ErrorCode::invalid_argument, "graph needs a vertex");
  return graph;
}

Graph random_graph(std::size_t vertices, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph graph;
  graph.vertices = vertices;
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = u + 1; v < vertices; ++v) {
      if (u01(rng) < edge_probability) graph.edges.emplace_back(u, v);
    }
  }
  return graph;
}

Instance gen_from_dominating_set(const Graph& graph) {
  const std::size_t n = graph.vertices;
  DistanceTable table(n, 2.0);
  for (PointId p = 0; p < n; ++p) table.at(p, p) = 0.0;
  for (const auto& [u, v] : graph.edges) {
    if (u >= n || v >= n || u == v) {
      throw Error(ErrorCode::invalid_argument, "graph edges must join distinct listed vertices");
    }
    table.at(u, v) = 1.0;
    table.at(v, u) = 1.0;
  }
  return Instance::from_table(std::move(table), Mode::symmetric);
}

PlantedInstance gen_eps_padding(const Instance& base, std::size_t k, double alpha, double epsilon) {
  if (base.mode() != Mode::symmetric) infeasible("padding needs a symmetric base");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) infeasible("epsilon must lie in (0, 1]");
  if (!(alpha >= 1.0)) infeasible("alpha must be >= 1");
  const std::size_t n = base.size();
  if (k == 0 || k > n) infeasible("k must lie in [1, n]");
  const double ratio = static_cast<double>(n) / epsilon;
  const double rounded = std::round(ratio);
  const std::size_t pads = static_cast<std::size_t>(
      std::abs(ratio - rounded) <= 1e-9 ? rounded : std::ceil(ratio));
  const double diameter = base.table().max_entry();
  const double pad_distance = snap_up(alpha * (diameter + 1.0));

  const std::size_t total = n + pads;
  DistanceTable table(total, pad_distance);
  for (PointId p = 0; p < total; ++p) table.at(p, p) = 0.0;
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) table.at(p, q) = base(p, q);
  }

  OracleResult oracle;
  try {
    oracle = brute_force_optimal(base, k);
  } catch (const Error& error) {
    if (error.code() != ErrorCode::budget_exceeded) throw;
    infeasible("padding truth needs an oracle-feasible base: " + std::string(error.what()));
  }
  std::vector<std::size_t> labels(oracle.clustering.assignment);
  std::vector<PointId> centers(oracle.clustering.centers);
  for (std::size_t i = 0; i < pads; ++i) {
    labels.push_back(k + i);
    centers.push_back(n + i);
  }
  Clustering truth = make_clustering(table, std::move(labels), std::move(centers));

  Guarantee guarantee{"eps-padding", 0, {}, ""};
  guarantee.values = {{"base_n", double(n)},   {"pads", double(pads)},
                      {"k", double(k + pads)}, {"alpha", alpha},
                      {"epsilon", epsilon},    {"diameter", diameter},
                      {"pad_distance", pad_distance}, {"truth_radius", truth.radius}};
  guarantee.statement =
      "for r below the base diameter, the base has a k-solution of radius r iff the padded "
      "instance has a (k + pads)-solution of radius r";
  return PlantedInstance{Instance::from_table(std::move(table), Mode::symmetric),
                         std::move(truth), std::move(guarantee)};
}

Instance gen_random_metric(std::size_t n, Mode mode, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  std::mt19937_64 rng(seed);
  DistanceTable table(n);
  if (mode == Mode::symmetric) {
    std::vector<std::array<double, 2>> position(n);
    for (auto& point : position) point = {u01(rng), u01(rng)};
    for (PointId p = 0; p < n; ++p) {
      for (PointId q = p + 1; q < n; ++q) {
        const double d = snap_up(std::hypot(position[p][0] - position[q][0],
                                            position[p][1] - position[q][1]));
        table.at(p, q) = d;
        table.at(q, p) = d;
      }
    }
    if (find_violation(table, mode)) table = shortest_path_closure(std::move(table));
  } else {
    constexpr double steps = 1048576.0;  // grid points in (0, 1]
    for (PointId p = 0; p < n; ++p) {
      for (PointId q = 0; q < n; ++q) {
        if (p != q) table.at(p, q) = (1.0 + std::floor(u01(rng) * steps)) * grid_step;
      }
    }
    table = shortest_path_closure(std::move(table));
  }
  return Instance::from_table(std::move(table), mode);
}

}  // namespace kcenter
