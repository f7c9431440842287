#include <kcenter/generators.hpp>
#include <kcenter/oracle.hpp>
#include <kcenter/solvers.hpp>

#include <gtest/gtest.h>

#include "support/naive.hpp"

#include <algorithm>

namespace {

using namespace kcenter;

Instance symmetric_instance(std::vector<std::vector<double>> rows) {
  return Instance::from_table(DistanceTable::from_rows(rows), Mode::symmetric);
}

bool matches(const SolveOutcome& outcome, const Clustering& truth) {
  return outcome.clustering && same_partition(*outcome.clustering, truth);
}

TEST(SolverIds, RoundTrip) {
  for (SolverId id : all_solver_ids()) EXPECT_EQ(parse_solver_id(to_string(id)), id);
  EXPECT_FALSE(parse_solver_id("nope"));
  EXPECT_FALSE(takes_radius(SolverId::ff2));
  EXPECT_TRUE(takes_radius(SolverId::alg2_3eps_asym));
}

TEST(FarthestFirst, LineExample) {
  const auto line = symmetric_instance({{0, 1, 5, 6}, {1, 0, 4, 5}, {5, 4, 0, 1}, {6, 5, 1, 0}});
  EXPECT_EQ(farthest_first(line, 2), (std::vector<PointId>{0, 3}));
  EXPECT_EQ(farthest_first(line, 1), std::vector<PointId>{0});
}

TEST(FarthestFirst, RejectsAsymmetricInput) {
  const auto inst = Instance::from_table(DistanceTable::from_rows({{0, 1}, {2, 0}}), Mode::asymmetric);
  try {
    farthest_first(inst, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::asymmetric_input);
  }
}

TEST(FarthestFirst, AtMostTwiceTheOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = Instance::from_table(naive::random_table(9, true, seed), Mode::symmetric);
    const std::size_t k = 1 + seed % 4;
    const auto centers = farthest_first(inst, k);
    EXPECT_EQ(centers.size(), k);
    EXPECT_LE(naive::cost(inst.table(), centers), 2.0 * naive::brute_force(inst.table(), k).radius);
  }
}

TEST(HochbaumShmoys, CoversWithinTwiceTheRadius) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto table = naive::random_table(10, true, seed);
    const std::size_t k = 1 + seed % 4;
    const double r = naive::brute_force(table, k).radius;
    const auto cover = hochbaum_shmoys_cover(table, r, k);
    EXPECT_TRUE(cover.success);
    EXPECT_LE(cover.centers.size(), k);
    EXPECT_LE(naive::cost(table, cover.centers), 2.0 * r);
  }
}

TEST(HochbaumShmoys, TooSmallRadiusNeedsMoreCenters) {
  const auto line = symmetric_instance({{0, 1, 5, 6}, {1, 0, 4, 5}, {5, 4, 0, 1}, {6, 5, 1, 0}});
  const auto cover = hochbaum_shmoys_cover(line, 0.0, 2);
  EXPECT_FALSE(cover.success);
  EXPECT_EQ(cover.centers.size(), 4u);
  const auto outcome = run_at_radius(SolverId::hs, line, 2, 0.0, {});
  EXPECT_EQ(outcome.failure, Failure::needs_more_centers);
  EXPECT_EQ(outcome.failure_count, 4u);
}

TEST(ExactViaApproximation, RecoversPlantedClusters) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto planted = gen_planted_symmetric(12, 3, 1.0, 2.0, seed);
    const auto outcome = exact_via_approximation(planted.instance, 3, farthest_first);
    EXPECT_EQ(outcome.status, SolveStatus::exact_claim);
    EXPECT_TRUE(matches(outcome, planted.truth)) << "seed " << seed;
  }
}

TEST(Asymmetric2pr, RecoversPlantedClusters) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto planted = gen_planted_asymmetric(12, 3, 1.0, 2.0, 1.2, seed);
    const auto outcome = asymmetric_2pr(planted.instance, 3, planted.truth.radius);
    EXPECT_EQ(outcome.status, SolveStatus::exact_claim);
    EXPECT_TRUE(matches(outcome, planted.truth)) << "seed " << seed;
    EXPECT_EQ(outcome.diagnostics.at("survivors"), "3");
  }
}

TEST(Asymmetric2pr, TinyRadiusIsNotResilient) {
  const auto planted = gen_planted_symmetric(9, 3, 1.0, 2.0, 5);
  const auto outcome = asymmetric_2pr(planted.instance, 3, 0.0);
  EXPECT_EQ(outcome.status, SolveStatus::not_resilient);
  EXPECT_EQ(outcome.failure, Failure::not_resilient);
  EXPECT_EQ(outcome.failure_count, 9u);
}

TEST(Symmetric3eps, ComponentsMatchPlantedClusters) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto planted = gen_planted_symmetric(15, 4, 1.0, 2.0, seed);
    const auto outcome = symmetric_3eps(planted.instance, 4, planted.truth.radius);
    EXPECT_TRUE(matches(outcome, planted.truth)) << "seed " << seed;
    const auto coarse = symmetric_3eps(planted.instance, 4, planted.instance.table().max_entry());
    EXPECT_EQ(coarse.failure, Failure::not_resilient);
    EXPECT_EQ(coarse.failure_count, 1u);
  }
}

TEST(Asymmetric3eps, RecoversPlantedClusters) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto planted = gen_planted_asymmetric(12, 3, 1.0, 2.0, 1.2, seed);
    const auto outcome = asymmetric_3eps(planted.instance, 3, planted.truth.radius);
    ASSERT_TRUE(outcome.clustering) << "seed " << seed;
    EXPECT_EQ(outcome.status, SolveStatus::eps_close_claim);
    EXPECT_EQ(misclassified(*outcome.clustering, planted.truth), 0u) << "seed " << seed;
    EXPECT_EQ(outcome.diagnostics.at("x"), "0");
  }
}

TEST(Asymmetric3eps, BudgetIsEnforced) {
  const auto planted = gen_bad_center_18(3.0);
  try {
    asymmetric_3eps(planted.instance, 3, 1.0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
  }
}

TEST(Linkage, EqualSizeVerifierRecoversPlantedClusters) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t k = 2 + seed % 3;
    const auto planted = gen_planted_symmetric(4 * k, k, 1.0, 2.0, seed);
    const auto outcome = weak_proximity_linkage(
        planted.instance, k, ClusterVerifier::equal_size(planted.instance.size(), k));
    EXPECT_TRUE(matches(outcome, planted.truth)) << "seed " << seed;
  }
}

TEST(Linkage, VerifierThatNeverAllowsMergesGetsStuck) {
  const auto planted = gen_planted_symmetric(6, 2, 1.0, 2.0, 1);
  const auto never = ClusterVerifier::custom(
      "never", [](std::span<const PointId>) { return 0.0; });
  const auto outcome = weak_proximity_linkage(planted.instance, 2, never);
  EXPECT_EQ(outcome.failure, Failure::verifier_stuck);
}

TEST(ClusterVerifier, EqualSizeSign) {
  const auto f = ClusterVerifier::equal_size(12, 3);
  const std::vector<PointId> three{0, 1, 2};
  const std::vector<PointId> four{0, 1, 2, 3};
  EXPECT_LT(f(three), 0.0);
  EXPECT_GE(f(four), 0.0);
}

TEST(ApproxStability2eps, RecoversPlantedClusters) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto planted = gen_planted_symmetric(12, 3, 1.0, 2.0, seed);
    const auto outcome = approx_stability_2eps(planted.instance, 3, planted.truth.radius, 0.1);
    EXPECT_TRUE(matches(outcome, planted.truth)) << "seed " << seed;
  }
}

TEST(ApproxStability2eps, LargeEpsilonLeavesEveryPointIsolated) {
  const auto planted = gen_planted_symmetric(12, 3, 1.0, 2.0, 2);
  const auto outcome = approx_stability_2eps(planted.instance, 3, planted.truth.radius, 0.5);
  EXPECT_EQ(outcome.failure, Failure::not_stable);
  EXPECT_EQ(outcome.failure_count, 12u);
}

TEST(CandidateRadii, SortedDistinctWithZero) {
  const auto line = symmetric_instance({{0, 1, 5, 6}, {1, 0, 4, 5}, {5, 4, 0, 1}, {6, 5, 1, 0}});
  EXPECT_EQ(candidate_radii(line.table()), (std::vector<double>{0, 1, 4, 5, 6}));
}

TEST(Sweep, FindsThePlantedRadius) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto planted = gen_planted_symmetric(12, 3, 1.0, 2.0, seed);
    for (SolverId id : {SolverId::alg1_2pr, SolverId::thm5_3eps, SolverId::alg2_3eps_asym}) {
      const auto outcome = run_solver(id, planted.instance, 3, SolverOptions{});
      ASSERT_TRUE(outcome.radius_used) << to_string(id);
      // The (3,eps) solver accepts any radius whose clusters fit within 3 r.
      if (id == SolverId::alg2_3eps_asym) {
        EXPECT_LE(*outcome.radius_used, planted.truth.radius);
        EXPECT_LE(planted.truth.radius, 3.0 * *outcome.radius_used);
      } else {
        EXPECT_EQ(*outcome.radius_used, planted.truth.radius) << to_string(id);
      }
      EXPECT_EQ(misclassified(*outcome.clustering, planted.truth), 0u) << to_string(id);
    }
  }
}

TEST(Sweep, HsRadiusIsAtMostTheOptimum) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = Instance::from_table(naive::random_table(8, true, seed), Mode::symmetric);
    const auto outcome = run_solver(SolverId::hs, inst, 3, SolverOptions{});
    ASSERT_TRUE(outcome.radius_used);
    const double opt = naive::brute_force(inst.table(), 3).radius;
    EXPECT_LE(*outcome.radius_used, opt);
    EXPECT_LE(outcome.clustering->radius, 2.0 * opt);
  }
}

}  // namespace
