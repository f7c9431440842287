#include <kcenter/generators.hpp>
#include <kcenter/oracle.hpp>

#include <gtest/gtest.h>

#include "support/naive.hpp"

#include <cmath>
#include <limits>

namespace {

using namespace kcenter;

TEST(Binomial, ValuesAndSaturation) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(12, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(Oracle, TwoPointExample) {
  const auto table = DistanceTable::from_rows({{0, 1}, {1, 0}});
  const auto one = brute_force_optimal(table, 1);
  EXPECT_EQ(one.optimal_radius, 1.0);
  EXPECT_EQ(one.optimal_center_sets, (std::vector<std::vector<PointId>>{{0}, {1}}));
  EXPECT_EQ(brute_force_optimal(table, 2).optimal_radius, 0.0);
}

TEST(Oracle, BudgetExceeded) {
  const auto table = naive::random_table(20, true, 1);
  try {
    brute_force_optimal(table, 10, 1000);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
  }
}

TEST(Oracle, MatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 3 + seed % 8;
    const std::size_t k = 1 + seed % 3;
    const auto table = naive::random_table(n, seed % 2 == 0, seed);
    const auto got = brute_force_optimal(table, k);
    const auto want = naive::brute_force(table, k);
    ASSERT_EQ(got.optimal_radius, want.radius) << "seed " << seed;
    ASSERT_EQ(got.optimal_center_sets, want.sets) << "seed " << seed;

    bool unique = true;
    const auto first = naive::voronoi_labels(table, want.sets.front());
    for (const auto& set : want.sets) {
      if (!naive::same_partition(first, naive::voronoi_labels(table, set))) unique = false;
    }
    EXPECT_EQ(got.partition_unique, unique) << "seed " << seed;
    EXPECT_EQ(got.clustering.assignment, first);
    EXPECT_EQ(got.clustering.radius, want.radius);
  }
}

TEST(Oracle, NoSubsetBeatsTheOptimum) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto table = naive::random_table(7, false, seed);
    const auto got = brute_force_optimal(table, 2);
    for (PointId a = 0; a < 7; ++a) {
      for (PointId b = a + 1; b < 7; ++b) {
        EXPECT_GE(naive::cost(table, {a, b}), got.optimal_radius);
      }
    }
  }
}

TEST(StabilityParams, Validation) {
  EXPECT_NO_THROW((StabilityParams{1.0, 0.0}.validate()));
  EXPECT_THROW((StabilityParams{0.5, 0.0}.validate()), Error);
  EXPECT_THROW((StabilityParams{2.0, 1.5}.validate()), Error);
  EXPECT_THROW((StabilityParams{std::nan(""), 0.0}.validate()), Error);
}

TEST(CappedPerturbation, CapsOnlyListedPairs) {
  const auto table = naive::random_table(6, false, 4);
  const double r = table.max_entry();
  const double alpha = 2.0;
  const std::vector<PointPair> pairs{{0, 1}, {2, 3}};
  const auto pert = build_lemma1_perturbation(table, r * 0.75, alpha, pairs);
  EXPECT_FALSE(perturbation_violation(table, pert));
  for (PointId p = 0; p < 6; ++p) {
    for (PointId q = 0; q < 6; ++q) {
      const bool listed = (p == 0 && q == 1) || (p == 2 && q == 3);
      const double expected =
          listed ? std::min(alpha * table(p, q), alpha * r * 0.75) : alpha * table(p, q);
      EXPECT_EQ(pert.dprime(p, q), expected);
    }
  }
}

TEST(CappedPerturbation, CapTooTight) {
  const auto table = DistanceTable::from_rows({{0, 4}, {4, 0}});
  try {
    build_lemma1_perturbation(table, 1.0, 2.0, std::vector<PointPair>{{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_too_tight);
  }
}

TEST(SamplePerturbation, RespectsBoundsAndIsDeterministic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto table = naive::random_table(8, seed % 2 == 0, seed);
    const auto a = sample_perturbation(table, 1.5, seed);
    const auto b = sample_perturbation(table, 1.5, seed);
    EXPECT_EQ(a.dprime, b.dprime);
    EXPECT_FALSE(perturbation_violation(table, a));
    for (PointId p = 0; p < 8; ++p) {
      EXPECT_EQ(a.dprime(p, p), 0.0);
      for (PointId q = 0; q < 8; ++q) {
        EXPECT_LE(table(p, q), a.dprime(p, q));
        EXPECT_LE(a.dprime(p, q), 1.5 * table(p, q));
      }
    }
  }
}

TEST(PerturbationViolation, DetectsOutOfBoundEntries) {
  const auto table = DistanceTable::from_rows({{0, 1}, {1, 0}});
  auto low = Perturbation{2.0, DistanceTable::from_rows({{0, 0.5}, {1, 0}})};
  auto high = Perturbation{2.0, DistanceTable::from_rows({{0, 1}, {2.5, 0}})};
  EXPECT_TRUE(perturbation_violation(table, low));
  EXPECT_TRUE(perturbation_violation(table, high));
}

TEST(Falsifier, UniformDistancesAreFalsifiedByTheIdentity) {
  DistanceTable table(4, 1.0);
  for (PointId p = 0; p < 4; ++p) table.at(p, p) = 0.0;
  const auto result = falsify_resilience(table, 2, StabilityParams{1.5, 0.0}, 50);
  ASSERT_EQ(result.verdict, FalsifyResult::Verdict::falsified);
  EXPECT_EQ(result.counterexample->origin, "identity");
  EXPECT_FALSE(recheck_counterexample(table, 2, StabilityParams{1.5, 0.0}, *result.counterexample));
}

TEST(Falsifier, PlantedResilientInstanceSurvives) {
  const auto planted = gen_planted_symmetric(9, 3, 1.0, 2.0, 3);
  const auto result = falsify_resilience(planted.instance.table(), 3, StabilityParams{2.0, 0.0},
                                         400, 7);
  EXPECT_EQ(result.verdict, FalsifyResult::Verdict::none_found);
  EXPECT_TRUE(result.targeted_phase_complete);
  EXPECT_EQ(result.perturbations_tried, 400u);
}

TEST(Falsifier, CounterexampleMovesMoreThanTheEpsilonAllowance) {
  const auto planted = gen_bad_center_18(3.0);
  const StabilityParams params{3.0, 1.0 / 18.0};
  const auto result =
      falsify_resilience(planted.instance.table(), 3, params, 2000, 0,
                         default_enumeration_budget, &planted.truth);
  ASSERT_EQ(result.verdict, FalsifyResult::Verdict::falsified);
  EXPECT_TRUE(result.reference_used);
  const auto& cx = *result.counterexample;
  EXPECT_GT(cx.moved, fraction_floor(params.epsilon, 18));
  EXPECT_EQ(cx.moved, misclassified(cx.opt, cx.violating));
  const auto under = naive::brute_force(cx.perturbation.dprime, 3);
  EXPECT_EQ(naive::cost(cx.perturbation.dprime, cx.violating.centers), under.radius);
}

TEST(Falsifier, RecheckRejectsTamperedCounterexample) {
  DistanceTable table(4, 1.0);
  for (PointId p = 0; p < 4; ++p) table.at(p, p) = 0.0;
  const StabilityParams params{1.5, 0.0};
  auto result = falsify_resilience(table, 2, params, 10);
  ASSERT_TRUE(result.counterexample);
  auto tampered = *result.counterexample;
  tampered.perturbation.dprime.at(0, 1) = 10.0;
  EXPECT_TRUE(recheck_counterexample(table, 2, params, tampered));
  tampered = *result.counterexample;
  tampered.violating = tampered.opt;
  EXPECT_TRUE(recheck_counterexample(table, 2, params, tampered));
}

}  // namespace
