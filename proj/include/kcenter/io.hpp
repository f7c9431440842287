#pragma once

#include <kcenter/analysis.hpp>
#include <kcenter/generators.hpp>
#include <kcenter/oracle.hpp>
#include <kcenter/solvers.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace kcenter::io {

using json = nlohmann::ordered_json;

std::string emit_kci(const DistanceTable& table, Mode mode);
inline std::string emit_kci(const Instance& instance) {
  return emit_kci(instance.table(), instance.mode());
}

struct RawKci {
  Mode mode = Mode::symmetric;
  DistanceTable table;
};

/// Parses the KCI v1 text without checking metric invariants. Throws
/// Error(parse_error) with the offending line number.
RawKci parse_kci_raw(std::string_view text);

/// Parses and validates; invariant violations are parse errors too.
Instance parse_kci(std::string_view text, double slack = 0.0);

json clustering_to_json(const Clustering& clustering);
/// Rebuilds a clustering from its JSON form; the radius is recomputed from `table`.
Clustering clustering_from_json(const json& value, const DistanceTable& table);

/// Non-finite numbers become null.
json number(double value);

json outcome_to_json(const SolveOutcome& outcome);
json structure_to_json(const StructureReport& report);
json ccc_to_json(const CccReport& report);
json counterexample_to_json(const Counterexample& counterexample);
json guarantee_to_json(const Guarantee& guarantee);

std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace kcenter::io
