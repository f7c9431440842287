#pragma once

#include <kcenter/instance.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kcenter {

/// Points involved in a violated inequality, in the order the predicate names them.
struct Witness {
  std::vector<PointId> points;
  std::string inequality;
};

struct StructureReport {
  bool property1 = true;             // d(c_i,p) < d(q,p) for p in C_i, q in C_j, i != j
  bool property1_restricted = true;  // same, with p and q drawn from A only
  bool property2 = true;             // d(q,c_i) > r for q outside C_i
  bool weak_center_proximity = true; // d(c_i,p) < d(p,q) for p in C_i, q in C_j
  double center_proximity_factor = 0.0;  // inf over cross pairs of d(c_j,p)/d(c_i,p)
  bool alpha_center_proximity = true;    // alpha d(c_i,p) < d(c_j,p) for every cross pair
  std::vector<PointId> bad_centers;      // centers reached within r from outside their cluster
  bool a_respects_opt = true;            // all centers in A, and A(p) shares p's cluster
  std::size_t a_size = 0;

  std::optional<Witness> property1_witness;
  std::optional<Witness> property1_restricted_witness;
  std::optional<Witness> property2_witness;
  std::optional<Witness> weak_center_proximity_witness;
  std::optional<Witness> alpha_center_proximity_witness;
  std::optional<Witness> a_respects_opt_witness;
};

StructureReport check_structure(const DistanceTable& table, const Clustering& clustering,
                                double r_star, double alpha);

/// Re-evaluates a witness against its inequality; true when it is a genuine violation.
bool witness_holds(const DistanceTable& table, const Clustering& clustering, double r_star,
                   double alpha, const Witness& witness);

struct CaptureEntry {
  std::size_t cluster = 0;                  // captured cluster C_j
  PointId center = 0;                       // capturing center c_i
  std::optional<std::size_t> excluded;      // excluded competitor label l (second order only)
};

struct CccReport {
  std::vector<std::optional<PointId>> ccc;        // per cluster
  std::vector<std::vector<CaptureEntry>> ccc2;    // per cluster
};

/// c_i captures C_j when, for more than half of p in C_j, d(c_i,p) <= r and
/// d(c_i,p) < d(c_x,p) for every competitor x other than i and j (and l for
/// the second-order test).
CccReport find_cluster_capturing_centers(const DistanceTable& table, const Clustering& clustering,
                                         double r_star);

/// At most six bad centers.
bool count_bad_centers_bound_check(const DistanceTable& table, const Clustering& clustering,
                                   double r_star);

}  // namespace kcenter
