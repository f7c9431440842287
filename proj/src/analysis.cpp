#include <kcenter/analysis.hpp>

#include <algorithm>
#include <limits>

namespace kcenter {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

Witness make_witness(std::vector<PointId> points, std::string inequality) {
  return Witness{std::move(points), std::move(inequality)};
}

}  // namespace

StructureReport check_structure(const DistanceTable& table, const Clustering& clustering,
                                double r_star, double alpha) {
  if (auto problem = clustering_violation(table, clustering)) {
    throw Error(ErrorCode::invalid_argument, "invalid clustering: " + *problem);
  }
  const std::size_t n = table.size();
  const auto& label = clustering.assignment;
  const auto& centers = clustering.centers;
  StructureReport report;

  std::optional<SymmetrizedSet> a;
  try {
    a = symmetrized_set(table, r_star, &clustering);
    report.a_size = a->members.size();
  } catch (const Error& error) {
    if (error.code() != ErrorCode::empty_symmetrized_set) throw;
  }

  double factor = infinity;
  for (PointId p = 0; p < n; ++p) {
    const std::size_t i = label[p];
    const PointId ci = centers[i];
    const double own = table(ci, p);
    for (PointId q = 0; q < n; ++q) {
      if (label[q] == i) continue;
      if (report.property1 && !(own < table(q, p))) {
        report.property1 = false;
        report.property1_witness = make_witness({ci, p, q}, "property1");
      }
      if (a && a->contains[p] && a->contains[q] && report.property1_restricted &&
          !(own < table(q, p))) {
        report.property1_restricted = false;
        report.property1_restricted_witness = make_witness({ci, p, q}, "property1");
      }
      if (report.weak_center_proximity && !(own < table(p, q))) {
        report.weak_center_proximity = false;
        report.weak_center_proximity_witness = make_witness({ci, p, q}, "weak_center_proximity");
      }
    }
    for (std::size_t j = 0; j < clustering.k; ++j) {
      if (j == i) continue;
      const double foreign = table(centers[j], p);
      if (own > 0.0) factor = std::min(factor, foreign / own);
      if (report.alpha_center_proximity && !(alpha * own < foreign)) {
        report.alpha_center_proximity = false;
        report.alpha_center_proximity_witness =
            make_witness({ci, p, centers[j]}, "alpha_center_proximity");
      }
    }
  }
  report.center_proximity_factor = factor;

  for (std::size_t i = 0; i < clustering.k; ++i) {
    const PointId ci = centers[i];
    bool bad = false;
    for (PointId q = 0; q < n; ++q) {
      if (label[q] == i || table(q, ci) > r_star) continue;
      bad = true;
      if (report.property2) {
        report.property2 = false;
        report.property2_witness = make_witness({q, ci}, "property2");
      }
      break;
    }
    if (bad) report.bad_centers.push_back(ci);
  }

  if (!a) {
    report.a_respects_opt = false;
    report.a_respects_opt_witness = make_witness({}, "a_respects_opt");
    return report;
  }
  for (PointId c : centers) {
    if (!a->contains[c]) {
      report.a_respects_opt = false;
      report.a_respects_opt_witness = make_witness({c}, "a_respects_opt");
      return report;
    }
  }
  for (PointId p = 0; p < n; ++p) {
    if (label[a->nearest[p]] != label[p]) {
      report.a_respects_opt = false;
      report.a_respects_opt_witness = make_witness({p, a->nearest[p]}, "a_respects_opt");
      return report;
    }
  }
  return report;
}

bool witness_holds(const DistanceTable& table, const Clustering& clustering, double r_star,
                   double alpha, const Witness& w) {
  const auto& label = clustering.assignment;
  const auto& pts = w.points;
  if (w.inequality == "property1" && pts.size() == 3) {
    return label[pts[2]] != label[pts[1]] && clustering.centers[label[pts[1]]] == pts[0] &&
           !(table(pts[0], pts[1]) < table(pts[2], pts[1]));
  }
  if (w.inequality == "weak_center_proximity" && pts.size() == 3) {
    return label[pts[2]] != label[pts[1]] && clustering.centers[label[pts[1]]] == pts[0] &&
           !(table(pts[0], pts[1]) < table(pts[1], pts[2]));
  }
  if (w.inequality == "property2" && pts.size() == 2) {
    const PointId q = pts[0];
    const PointId c = pts[1];
    return clustering.centers[label[c]] == c && label[q] != label[c] && table(q, c) <= r_star;
  }
  if (w.inequality == "alpha_center_proximity" && pts.size() == 3) {
    return clustering.centers[label[pts[1]]] == pts[0] && label[pts[2]] != label[pts[1]] &&
           !(alpha * table(pts[0], pts[1]) < table(pts[2], pts[1]));
  }
  if (w.inequality == "a_respects_opt") {
    std::optional<SymmetrizedSet> a;
    try {
      a = symmetrized_set(table, r_star);
    } catch (const Error&) {
      return pts.empty();
    }
    if (pts.size() == 1) return !a->contains[pts[0]];
    if (pts.size() == 2) return a->nearest[pts[0]] == pts[1] && label[pts[0]] != label[pts[1]];
  }
  return false;
}

CccReport find_cluster_capturing_centers(const DistanceTable& table, const Clustering& clustering,
                                         double r_star) {
  const std::size_t k = clustering.k;
  const auto members = clustering.clusters();
  const auto& centers = clustering.centers;
  CccReport report;
  report.ccc.assign(k, std::nullopt);
  report.ccc2.assign(k, {});

  // More than half of C_j is within r of c_i and strictly closer to c_i than to
  // c_x (x == k stands for "no competitor").
  auto majority = [&](std::size_t i, std::size_t j, std::size_t x) {
    std::size_t count = 0;
    for (PointId p : members[j]) {
      const double d = table(centers[i], p);
      if (d <= r_star && (x == k || d < table(centers[x], p))) ++count;
    }
    return 2 * count > members[j].size();
  };
  auto captures = [&](std::size_t i, std::size_t j, std::optional<std::size_t> excluded) {
    if (!majority(i, j, k)) return false;
    for (std::size_t x = 0; x < k; ++x) {
      if (x == i || x == j || (excluded && x == *excluded)) continue;
      if (!majority(i, j, x)) return false;
    }
    return true;
  };

  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      if (captures(i, j, std::nullopt)) {
        if (!report.ccc[j]) report.ccc[j] = centers[i];
        report.ccc2[j].push_back(CaptureEntry{j, centers[i], std::nullopt});
        continue;
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (l == i || l == j) continue;
        if (captures(i, j, l)) {
          report.ccc2[j].push_back(CaptureEntry{j, centers[i], l});
          break;
        }
      }
    }
  }
  return report;
}

bool count_bad_centers_bound_check(const DistanceTable& table, const Clustering& clustering,
                                   double r_star) {
  return check_structure(table, clustering, r_star, 1.0).bad_centers.size() <= 6;
}

}  // namespace kcenter
