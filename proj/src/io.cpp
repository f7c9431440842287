#include <kcenter/io.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace kcenter::io {

namespace {

[[noreturn]] void parse_failure(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

double parse_number(std::string_view word, std::size_t line) {
  double value = 0.0;
  const auto result = std::from_chars(word.data(), word.data() + word.size(), value);
  if (result.ec != std::errc() || result.ptr != word.data() + word.size()) {
    parse_failure(line, "not a decimal number: '" + std::string(word) + "'");
  }
  if (!std::isfinite(value)) parse_failure(line, "distance is not finite");
  return value;
}

}  // namespace

std::string emit_kci(const DistanceTable& table, Mode mode) {
  std::string out = "kci 1\nmode ";
  out += to_string(mode);
  out += "\nn " + std::to_string(table.size()) + "\n";
  for (PointId p = 0; p < table.size(); ++p) {
    for (PointId q = 0; q < table.size(); ++q) {
      if (q > 0) out += ' ';
      out += format_double(table(p, q));
    }
    out += '\n';
  }
  return out;
}

RawKci parse_kci_raw(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  auto words_at = [&](std::size_t index) {
    if (index >= lines.size()) parse_failure(index + 1, "unexpected end of file");
    return split_words(lines[index]);
  };

  const auto header = words_at(0);
  if (header.size() != 2 || header[0] != "kci" || header[1] != "1") {
    parse_failure(1, "expected header 'kci 1'");
  }
  RawKci raw;
  const auto mode = words_at(1);
  if (mode.size() != 2 || mode[0] != "mode" ||
      (mode[1] != "symmetric" && mode[1] != "asymmetric")) {
    parse_failure(2, "expected 'mode symmetric' or 'mode asymmetric'");
  }
  raw.mode = mode[1] == "symmetric" ? Mode::symmetric : Mode::asymmetric;
  const auto count = words_at(2);
  std::size_t n = 0;
  if (count.size() != 2 || count[0] != "n" ||
      std::from_chars(count[1].data(), count[1].data() + count[1].size(), n).ptr !=
          count[1].data() + count[1].size()) {
    parse_failure(3, "expected 'n <int>'");
  }
  raw.table = DistanceTable(n);
  for (PointId p = 0; p < n; ++p) {
    const auto row = words_at(3 + p);
    if (row.size() != n) {
      parse_failure(4 + p, "expected " + std::to_string(n) + " distances, found " +
                               std::to_string(row.size()));
    }
    for (PointId q = 0; q < n; ++q) raw.table.at(p, q) = parse_number(row[q], 4 + p);
  }
  for (std::size_t extra = 3 + n; extra < lines.size(); ++extra) {
    if (!split_words(lines[extra]).empty()) parse_failure(extra + 1, "unexpected trailing content");
  }
  return raw;
}

Instance parse_kci(std::string_view text, double slack) {
  RawKci raw = parse_kci_raw(text);
  auto result = validate_instance(std::move(raw.table), raw.mode, slack);
  if (auto* violation = std::get_if<Violation>(&result)) {
    throw Error(ErrorCode::parse_error, "invalid instance: " + violation->describe());
  }
  return std::get<Instance>(std::move(result));
}

json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

json clustering_to_json(const Clustering& clustering) {
  const Clustering ordered = canonical(clustering);
  json out;
  out["k"] = ordered.k;
  out["radius"] = number(ordered.radius);
  out["centers"] = ordered.centers;
  out["clusters"] = ordered.clusters();
  return out;
}

Clustering clustering_from_json(const json& value, const DistanceTable& table) {
  try {
    const auto clusters = value.at("clusters").get<std::vector<std::vector<PointId>>>();
    const auto centers = value.at("centers").get<std::vector<PointId>>();
    if (value.contains("k") && value.at("k").get<std::size_t>() != clusters.size()) {
      throw Error(ErrorCode::parse_error, "clustering k does not match its cluster list");
    }
    if (centers.size() != clusters.size()) {
      throw Error(ErrorCode::parse_error, "clustering needs one center per cluster");
    }
    std::vector<std::size_t> assignment(table.size(), clusters.size());
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (PointId p : clusters[i]) {
        if (p >= table.size()) throw Error(ErrorCode::parse_error, "cluster member out of range");
        assignment[p] = i;
      }
    }
    return make_clustering(table, std::move(assignment), centers);
  } catch (const json::exception& error) {
    throw Error(ErrorCode::parse_error, std::string("malformed clustering: ") + error.what());
  } catch (const Error& error) {
    if (error.code() == ErrorCode::parse_error) throw;
    throw Error(ErrorCode::parse_error, std::string("malformed clustering: ") + error.what());
  }
}

json outcome_to_json(const SolveOutcome& outcome) {
  json out;
  out["status"] = to_string(outcome.status);
  if (outcome.failure != Failure::none) {
    out["failure"] = to_string(outcome.failure);
    out["failure_count"] = outcome.failure_count;
  }
  out["radius_used"] = outcome.radius_used ? number(*outcome.radius_used) : json(nullptr);
  out["clustering"] = outcome.clustering ? clustering_to_json(*outcome.clustering) : json(nullptr);
  out["diagnostics"] = outcome.diagnostics;
  return out;
}

namespace {

json witness_json(const std::optional<Witness>& witness) {
  if (!witness) return nullptr;
  return json{{"inequality", witness->inequality}, {"points", witness->points}};
}

}  // namespace

json structure_to_json(const StructureReport& report) {
  json out;
  out["property1"] = report.property1;
  out["property1_restricted"] = report.property1_restricted;
  out["property2"] = report.property2;
  out["weak_center_proximity"] = report.weak_center_proximity;
  out["center_proximity_factor"] = number(report.center_proximity_factor);
  out["alpha_center_proximity"] = report.alpha_center_proximity;
  out["bad_centers"] = report.bad_centers;
  out["a_respects_opt"] = report.a_respects_opt;
  out["a_size"] = report.a_size;
  json witnesses = json::object();
  witnesses["property1"] = witness_json(report.property1_witness);
  witnesses["property1_restricted"] = witness_json(report.property1_restricted_witness);
  witnesses["property2"] = witness_json(report.property2_witness);
  witnesses["weak_center_proximity"] = witness_json(report.weak_center_proximity_witness);
  witnesses["alpha_center_proximity"] = witness_json(report.alpha_center_proximity_witness);
  witnesses["a_respects_opt"] = witness_json(report.a_respects_opt_witness);
  out["witnesses"] = std::move(witnesses);
  return out;
}

json ccc_to_json(const CccReport& report) {
  json out;
  json first = json::array();
  for (const auto& entry : report.ccc) first.push_back(entry ? json(*entry) : json(nullptr));
  out["ccc"] = std::move(first);
  json second = json::array();
  for (const auto& entries : report.ccc2) {
    json list = json::array();
    for (const auto& entry : entries) {
      list.push_back({{"center", entry.center},
                      {"excluded", entry.excluded ? json(*entry.excluded) : json(nullptr)}});
    }
    second.push_back(std::move(list));
  }
  out["ccc2"] = std::move(second);
  return out;
}

json counterexample_to_json(const Counterexample& counterexample) {
  json out;
  out["alpha"] = counterexample.perturbation.alpha;
  out["origin"] = counterexample.origin;
  out["dprime_kci"] = emit_kci(counterexample.perturbation.dprime, Mode::asymmetric);
  out["opt"] = clustering_to_json(counterexample.opt);
  out["violating"] = clustering_to_json(counterexample.violating);
  out["violating"]["radius"] = number(counterexample.violating.radius);
  out["epsilon_distance"] = counterexample.eps_distance;
  out["points_moved"] = counterexample.moved;
  out["dprime_partition_unique"] = counterexample.dprime_unique;
  return out;
}

json guarantee_to_json(const Guarantee& guarantee) {
  json out;
  out["family"] = guarantee.family;
  out["seed"] = guarantee.seed;
  json values = json::object();
  for (const auto& [key, value] : guarantee.values) values[key] = number(value);
  out["values"] = std::move(values);
  out["statement"] = guarantee.statement;
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path temporary = path;
  temporary += ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + temporary.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temporary, ignored);
      throw Error(ErrorCode::invalid_argument, "write failed for " + path.string());
    }
  }
  std::error_code error;
  std::filesystem::rename(temporary, path, error);
  if (error) {
    std::filesystem::remove(temporary, error);
    throw Error(ErrorCode::invalid_argument, "cannot move output into " + path.string());
  }
}

}  // namespace kcenter::io
