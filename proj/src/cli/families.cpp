#include "families.hpp"

#include <kcenter/oracle.hpp>

#include <cmath>

namespace kcenter::cli {

namespace {

double number_param(const io::json& params, const char* key, std::optional<double> fallback = {}) {
  if (params.contains(key)) {
    const auto& value = params.at(key);
    if (!value.is_number()) {
      throw Error(ErrorCode::invalid_argument, std::string("parameter ") + key + " must be a number");
    }
    return value.get<double>();
  }
  if (fallback) return *fallback;
  throw Error(ErrorCode::invalid_argument, std::string("missing parameter ") + key);
}

std::size_t count_param(const io::json& params, const char* key,
                        std::optional<std::size_t> fallback = {}) {
  const double value =
      number_param(params, key, fallback ? std::optional<double>(double(*fallback)) : std::nullopt);
  if (value < 0 || value != std::floor(value)) {
    throw Error(ErrorCode::invalid_argument, std::string("parameter ") + key +
                                                 " must be a nonnegative integer");
  }
  return static_cast<std::size_t>(value);
}

std::optional<Clustering> oracle_truth(const Instance& instance, std::size_t k) {
  if (k == 0 || k > instance.size()) return std::nullopt;
  try {
    return brute_force_optimal(instance, k).clustering;
  } catch (const Error& error) {
    if (error.code() == ErrorCode::budget_exceeded) return std::nullopt;
    throw;
  }
}

FamilyOutput from_planted(PlantedInstance planted) {
  const std::size_t k = planted.k();
  return FamilyOutput{std::move(planted.instance), std::move(planted.truth),
                      std::move(planted.guarantee), k};
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"planted-sym", "planted-asym", "bad-center-18",
                                              "dom-set",     "eps-padding",  "random-sym",
                                              "random-asym"};
  return names;
}

FamilyOutput generate_family(const std::string& family, const io::json& params,
                             std::uint64_t seed) {
  if (!params.is_object()) throw Error(ErrorCode::invalid_argument, "parameters must be an object");
  if (family == "planted-sym") {
    return from_planted(gen_planted_symmetric(count_param(params, "n"), count_param(params, "k"),
                                              number_param(params, "r", 1.0),
                                              number_param(params, "alpha", 2.0), seed));
  }
  if (family == "planted-asym") {
    return from_planted(gen_planted_asymmetric(
        count_param(params, "n"), count_param(params, "k"), number_param(params, "r", 1.0),
        number_param(params, "alpha", 2.0), number_param(params, "skew", 1.2), seed));
  }
  if (family == "bad-center-18") {
    return from_planted(gen_bad_center_18(number_param(params, "alpha", 3.0)));
  }
  if (family == "dom-set") {
    Graph graph;
    if (params.contains("graph")) {
      graph = named_graph(params.at("graph").get<std::string>());
    } else {
      graph = random_graph(count_param(params, "n"), number_param(params, "p", 0.3), seed);
    }
    const std::size_t k = count_param(params, "k");
    Instance instance = gen_from_dominating_set(graph);
    Guarantee guarantee{"dom-set", seed, {{"n", double(graph.vertices)}, {"k", double(k)},
                                          {"edges", double(graph.edges.size())}},
                        "optimal radius is 1 iff the graph has a dominating set of size k"};
    auto truth = oracle_truth(instance, k);
    return FamilyOutput{std::move(instance), std::move(truth), std::move(guarantee), k};
  }
  if (family == "eps-padding") {
    const std::size_t k = count_param(params, "k");
    const Instance base = gen_random_metric(count_param(params, "n"), Mode::symmetric, seed);
    auto planted = gen_eps_padding(base, k, number_param(params, "alpha", 2.0),
                                   number_param(params, "epsilon", 0.5));
    planted.guarantee.seed = seed;
    return from_planted(std::move(planted));
  }
  if (family == "random-sym" || family == "random-asym") {
    const Mode mode = family == "random-sym" ? Mode::symmetric : Mode::asymmetric;
    const std::size_t k = count_param(params, "k", 1);
    Instance instance = gen_random_metric(count_param(params, "n"), mode, seed);
    Guarantee guarantee{family, seed, {{"n", double(instance.size())}, {"k", double(k)}},
                        "no stability promise; truth is the oracle optimum when feasible"};
    auto truth = oracle_truth(instance, k);
    return FamilyOutput{std::move(instance), std::move(truth), std::move(guarantee), k};
  }
  throw Error(ErrorCode::invalid_argument, "unknown family: " + family);
}

}  // namespace kcenter::cli
