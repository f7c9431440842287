#include <kcenter/instance.hpp>

#include <gtest/gtest.h>

#include "support/naive.hpp"

#include <random>
#include <variant>

namespace {

using namespace kcenter;

DistanceTable rows(std::vector<std::vector<double>> r) { return DistanceTable::from_rows(r); }

TEST(ValidateInstance, TwoPointMetric) {
  EXPECT_TRUE(std::holds_alternative<Instance>(
      validate_instance(rows({{0, 1}, {1, 0}}), Mode::symmetric)));
}

TEST(ValidateInstance, TriangleViolationNamesFirstTriple) {
  const auto result = validate_instance(rows({{0, 5, 10}, {5, 0, 1}, {10, 1, 0}}), Mode::symmetric);
  ASSERT_TRUE(std::holds_alternative<Violation>(result));
  EXPECT_EQ(std::get<Violation>(result), (Violation{Violation::Kind::triangle, 0, 1, 2}));
  EXPECT_EQ(std::get<Violation>(result).describe(), "TriangleViolation(0,1,2)");
}

TEST(ValidateInstance, AsymmetricExampleMatchesTripleScan) {
  const auto table = rows({{0, 1, 2}, {3, 0, 2}, {2, 2, 0}});
  EXPECT_TRUE(naive::is_metric(table, false));
  EXPECT_TRUE(std::holds_alternative<Instance>(validate_instance(table, Mode::asymmetric)));
  EXPECT_FALSE(std::holds_alternative<Instance>(validate_instance(table, Mode::symmetric)));
}

TEST(ValidateInstance, EntryViolations) {
  auto kind = [](DistanceTable t, Mode m) {
    return std::get<Violation>(validate_instance(std::move(t), m)).kind;
  };
  EXPECT_EQ(kind(rows({{0, -1}, {1, 0}}), Mode::asymmetric), Violation::Kind::negative_distance);
  EXPECT_EQ(kind(rows({{1, 1}, {1, 0}}), Mode::asymmetric), Violation::Kind::nonzero_diagonal);
  EXPECT_EQ(kind(rows({{0, 1}, {2, 0}}), Mode::symmetric), Violation::Kind::symmetry);
  EXPECT_THROW(Instance::from_table(rows({{0, 1}, {2, 0}}), Mode::symmetric), Error);
}

TEST(ValidateInstance, SlackLoosensTriangleAndSymmetry) {
  const auto table = rows({{0, 1, 2.001}, {1, 0, 1}, {2.001, 1, 0}});
  EXPECT_FALSE(std::holds_alternative<Instance>(validate_instance(table, Mode::symmetric)));
  EXPECT_TRUE(std::holds_alternative<Instance>(validate_instance(table, Mode::symmetric, 0.01)));
}

// Mutating one entry of a valid table is accepted exactly when the naive scan says so.
TEST(ValidateInstance, SingleEntryMutationsAgreeWithNaiveScan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const bool symmetric = trial % 2 == 0;
    const std::size_t n = 3 + trial % 5;
    DistanceTable table = naive::random_table(n, symmetric, trial);
    const PointId p = rng() % n;
    const PointId q = rng() % n;
    const double delta = (static_cast<double>(rng() % 9) - 4.0) / 4.0;
    table.at(p, q) = table(p, q) + delta;
    if (symmetric && trial % 4 == 0) table.at(q, p) = table(p, q);
    const bool valid = naive::is_metric(table, symmetric);
    const auto mode = symmetric ? Mode::symmetric : Mode::asymmetric;
    EXPECT_EQ(std::holds_alternative<Instance>(validate_instance(table, mode)), valid)
        << "trial " << trial;
  }
}

TEST(Closure, MatchesNaiveFloydWarshallAndIsIdempotent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 2 + seed % 9;
    DistanceTable raw(n);
    for (PointId p = 0; p < n; ++p) {
      for (PointId q = 0; q < n; ++q) raw.at(p, q) = p == q ? 0.0 : (1 + rng() % 50) / 8.0;
    }
    const auto closed = shortest_path_closure(raw);
    EXPECT_EQ(closed, naive::floyd_warshall(raw));
    EXPECT_EQ(shortest_path_closure(closed), closed);
    EXPECT_TRUE(naive::is_metric(closed, false));
  }
}

TEST(Cost, Examples) {
  const auto two = rows({{0, 1}, {1, 0}});
  const std::vector<PointId> all{0, 1};
  const std::vector<PointId> zero{0};
  EXPECT_EQ(cost(two, all), 0.0);
  EXPECT_EQ(cost(two, zero), 1.0);
  EXPECT_THROW(cost(two, std::vector<PointId>{}), Error);
}

TEST(Cost, MatchesDoubleLoopAndIsMonotone) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto table = naive::random_table(8, seed % 2 == 0, seed);
    std::vector<PointId> centers{2, 5};
    EXPECT_EQ(cost(table, centers), naive::cost(table, centers));
    double previous = cost(table, centers);
    for (PointId extra : {0u, 7u, 3u}) {
      centers.push_back(extra);
      const double now = cost(table, centers);
      EXPECT_LE(now, previous);
      previous = now;
    }
  }
}

TEST(Voronoi, AllCentersGiveSingletons) {
  const auto table = naive::random_table(6, true, 1);
  const std::vector<PointId> all{0, 1, 2, 3, 4, 5};
  const auto c = voronoi_partition(table, all);
  for (PointId p = 0; p < 6; ++p) EXPECT_EQ(c.assignment[p], p);
  EXPECT_EQ(c.radius, 0.0);
}

TEST(Voronoi, TieGoesToSmallerCenterIndex) {
  DistanceTable table(8, 2.0);
  for (PointId p = 0; p < 8; ++p) table.at(p, p) = 0.0;
  table.at(3, 0) = table.at(0, 3) = 1.0;
  table.at(7, 0) = table.at(0, 7) = 1.0;
  const std::vector<PointId> centers{7, 3};
  const auto c = voronoi_partition(table, centers);
  EXPECT_EQ(c.centers[c.assignment[0]], 3u);
}

TEST(Voronoi, AgreesWithNaiveLabelsAndCost) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto table = naive::random_table(9, seed % 3 == 0, seed);
    const std::vector<PointId> centers{static_cast<PointId>(seed % 9), static_cast<PointId>((seed + 4) % 9)};
    const auto c = voronoi_partition(table, centers);
    EXPECT_EQ(c.assignment, naive::voronoi_labels(table, centers));
    EXPECT_EQ(c.radius, cost(table, centers));
    EXPECT_FALSE(clustering_violation(table, c));
  }
}

TEST(Voronoi, ZeroDistanceBetweenCentersKeepsEachCenterInItsCluster) {
  const auto table = rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  const std::vector<PointId> centers{0, 1};
  const auto c = voronoi_partition(table, centers);
  EXPECT_EQ(c.assignment[0], 0u);
  EXPECT_EQ(c.assignment[1], 1u);
  EXPECT_THROW(voronoi_partition(table, std::vector<PointId>{0, 0}), Error);
}

TEST(Ball, Examples) {
  const auto table = naive::random_table(7, true, 3);
  const std::vector<PointId> domain{0, 1, 2, 3, 4, 5, 6};
  EXPECT_EQ(ball(table, 2, 0.0, domain), std::vector<PointId>{2});
  EXPECT_EQ(ball(table, 2, table.max_entry(), domain), domain);
  const double r = table(2, 4);
  std::vector<PointId> expected;
  for (PointId q : domain) {
    if (table(2, q) <= r) expected.push_back(q);
  }
  EXPECT_EQ(ball(table, 2, r, domain), expected);
  EXPECT_EQ(ball(table, 2, r), expected);
}

TEST(ThresholdComponents, Examples) {
  const auto chain = rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  EXPECT_EQ(threshold_components(chain, 1.0), (std::vector<std::vector<PointId>>{{0, 1, 2}}));
  EXPECT_EQ(threshold_components(chain, 0.5).size(), 3u);
  EXPECT_EQ(threshold_components(chain, 2.0).size(), 1u);
}

TEST(ThresholdComponents, AsymmetricNeedsBothDirections) {
  const auto table = rows({{0, 1}, {3, 0}});
  EXPECT_EQ(threshold_components(table, 1.0).size(), 2u);
  EXPECT_EQ(threshold_components(table, 3.0).size(), 1u);
}

TEST(ThresholdComponents, SmallerThresholdRefines) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto table = naive::random_table(10, seed % 2 == 0, seed);
    const double t1 = 0.25 * static_cast<double>(seed % 8);
    const double t2 = t1 + 0.5;
    const auto fine = threshold_components(table, t1);
    const auto coarse = threshold_components(table, t2);
    std::vector<std::size_t> coarse_label(10);
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      for (PointId p : coarse[i]) coarse_label[p] = i;
    }
    for (const auto& component : fine) {
      for (PointId p : component) EXPECT_EQ(coarse_label[p], coarse_label[component.front()]);
    }
  }
}

TEST(SymmetrizedSet, SymmetricInstanceGivesEverything) {
  const auto table = naive::random_table(8, true, 2);
  const auto a = symmetrized_set(table, table(0, 1));
  EXPECT_EQ(a.members.size(), 8u);
}

TEST(SymmetrizedSet, TwoPointExample) {
  const auto table = rows({{0, 0.5}, {2, 0}});
  const auto a = symmetrized_set(table, 1.0);
  EXPECT_EQ(a.members, std::vector<PointId>{0});
  EXPECT_EQ(a.nearest[1], 0u);
}

TEST(SymmetrizedSet, MatchesPredicateAndNearestIsAMember) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto table = naive::random_table(9, false, seed);
    const double r = table(0, 1);
    SymmetrizedSet a;
    try {
      a = symmetrized_set(table, r);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::empty_symmetrized_set);
      continue;
    }
    for (PointId p = 0; p < 9; ++p) {
      bool expected = true;
      for (PointId q = 0; q < 9; ++q) {
        if (table(q, p) <= r && !(table(p, q) <= r)) expected = false;
      }
      EXPECT_EQ(a.contains[p], expected);
      EXPECT_TRUE(a.contains[a.nearest[p]]);
      for (PointId q : a.members) EXPECT_LE(table(a.nearest[p], p), table(q, p));
    }
  }
}

TEST(Clustering, GroupsCanonicalAndInvariants) {
  const auto table = naive::random_table(6, true, 9);
  const auto c = clustering_from_groups(table, {{4, 5}, {0, 2}, {1, 3}});
  EXPECT_FALSE(clustering_violation(table, c));
  const auto ordered = canonical(c);
  EXPECT_EQ(ordered.assignment[0], 0u);
  EXPECT_EQ(ordered.assignment[1], 1u);
  EXPECT_EQ(ordered.assignment[4], 2u);
  EXPECT_TRUE(same_partition(c, ordered));
  EXPECT_THROW(clustering_from_groups(table, {{0, 1}, {1, 2, 3, 4, 5}}), Error);
  EXPECT_THROW(make_clustering(table, {0, 0, 1, 1, 1, 1}, {2, 0}), Error);
}

}  // namespace
