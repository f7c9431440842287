#pragma once

#include <kcenter/generators.hpp>
#include <kcenter/io.hpp>

#include <optional>
#include <string>

namespace kcenter::cli {

struct FamilyOutput {
  Instance instance;
  std::optional<Clustering> truth;
  Guarantee guarantee;
  std::size_t k;
};

/// Known family names, in the order the CLI lists them.
const std::vector<std::string>& family_names();

/// Builds one instance of a named family. `params` is a JSON object of the
/// family's numeric (and, for dom-set, graph) parameters.
FamilyOutput generate_family(const std::string& family, const io::json& params,
                             std::uint64_t seed);

}  // namespace kcenter::cli
