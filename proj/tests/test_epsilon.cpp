#include <kcenter/instance.hpp>

#include <gtest/gtest.h>

#include "support/naive.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace {

using namespace kcenter;

// A clustering over n points whose geometry is irrelevant to the label comparison.
Clustering labelled(const std::vector<std::size_t>& labels, std::size_t k) {
  const std::size_t n = labels.size();
  DistanceTable flat(n, 1.0);
  for (PointId p = 0; p < n; ++p) flat.at(p, p) = 0.0;
  std::vector<PointId> centers(k, n);
  for (PointId p = 0; p < n; ++p) {
    if (centers[labels[p]] == n) centers[labels[p]] = p;
  }
  return make_clustering(flat, labels, centers);
}

std::vector<std::size_t> random_labels(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(k), 0);
  for (std::size_t p = k; p < n; ++p) labels[p] = rng() % k;
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

TEST(Misclassified, Examples) {
  EXPECT_EQ(misclassified(labelled({0, 0, 1, 1}, 2), labelled({1, 1, 0, 0}, 2)), 0u);
  EXPECT_EQ(misclassified(labelled({0, 0, 1, 1}, 2), labelled({0, 1, 1, 1}, 2)), 1u);
  EXPECT_DOUBLE_EQ(epsilon_distance(labelled({0, 0, 1, 1}, 2), labelled({0, 1, 1, 1}, 2)), 0.25);
  EXPECT_EQ(misclassified(labelled({0, 1, 2}, 3), labelled({2, 0, 1}, 3)), 0u);
}

TEST(Misclassified, MismatchedK) {
  try {
    misclassified(labelled({0, 1, 1}, 2), labelled({0, 1, 2}, 3));
    FAIL() << "expected MismatchedK";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::mismatched_k);
  }
}

TEST(Misclassified, MatchesPermutationEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + trial % 5;
    const std::size_t n = k + rng() % 12;
    const auto a = random_labels(rng, n, k);
    const auto b = random_labels(rng, n, k);
    EXPECT_EQ(misclassified(labelled(a, k), labelled(b, k)), naive::permutation_distance(a, b, k))
        << "trial " << trial;
  }
}

TEST(Misclassified, SymmetricAndZeroOnlyForSamePartition) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 4;
    const std::size_t n = k + rng() % 10;
    const auto a = random_labels(rng, n, k);
    auto b = a;
    if (trial % 3 != 0) b = random_labels(rng, n, k);
    const auto ca = labelled(a, k);
    const auto cb = labelled(b, k);
    const auto forward = misclassified(ca, cb);
    EXPECT_EQ(forward, misclassified(cb, ca));
    EXPECT_EQ(forward == 0, naive::same_partition(a, b));
    EXPECT_EQ(misclassified(ca, ca), 0u);
  }
}

TEST(Misclassified, InvariantUnderRelabelling) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + trial % 3;
    const std::size_t n = k + rng() % 10;
    const auto a = random_labels(rng, n, k);
    const auto b = random_labels(rng, n, k);
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto relabelled = b;
    for (auto& label : relabelled) label = sigma[label];
    EXPECT_EQ(misclassified(labelled(a, k), labelled(b, k)),
              misclassified(labelled(a, k), labelled(relabelled, k)));
  }
}

TEST(MaxWeightAssignment, MatchesEnumerationOnSmallMatrices) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + trial % 6;
    std::vector<std::vector<long long>> w(k, std::vector<long long>(k));
    for (auto& row : w) {
      for (auto& x : row) x = static_cast<long long>(rng() % 20);
    }
    const auto match = max_weight_assignment(w);
    long long got = 0;
    for (std::size_t i = 0; i < k; ++i) got += w[i][match[i]];
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    long long best = -1;
    do {
      long long total = 0;
      for (std::size_t i = 0; i < k; ++i) total += w[i][sigma[i]];
      best = std::max(best, total);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    EXPECT_EQ(got, best);
    auto sorted = match;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(sorted[i], i);
  }
}

}  // namespace
