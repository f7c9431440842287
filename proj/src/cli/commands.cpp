#include <kcenter/cli.hpp>

#include "families.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

namespace kcenter::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

struct SolveArgs {
  std::string input;
  std::string algo;
  std::size_t k = 0;
  std::optional<double> r;
  double epsilon = 0.0;
  double slack = 0.0;
  std::uint64_t budget = default_cover_budget;
  std::string out;
};

struct OracleArgs {
  std::string input;
  std::size_t k = 0;
  std::uint64_t budget = default_enumeration_budget;
  double slack = 0.0;
  std::string out;
};

struct VerifyArgs {
  std::string input;
  std::string truth;
  double alpha = 2.0;
  double epsilon = 0.0;
  std::optional<double> r;
  std::size_t budget = 2000;
  std::uint64_t seed = 0;
  std::uint64_t oracle_budget = default_enumeration_budget;
  double slack = 0.0;
  std::string out;
};

struct GenerateArgs {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<double> r;
  std::optional<double> alpha;
  std::optional<double> skew;
  std::optional<double> epsilon;
  std::optional<double> p;
  std::optional<std::string> graph;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string name;
};

struct BenchArgs {
  std::string manifest;
  std::string out;
  bool no_timing = false;
};

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    io::write_file_atomic(path, contents);
  }
}

Instance load_instance(const std::string& path, double slack) {
  const std::string text = io::read_file(path);
  try {
    return io::parse_kci(text, slack);
  } catch (const Error& error) {
    throw Error(error.code(), path + ": " + error.what());
  }
}

bool is_promise_failure(const SolveOutcome& outcome) { return !outcome.ok(); }

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const auto id = parse_solver_id(args.algo);
  if (!id) {
    err << "error: unknown solver '" << args.algo << "'\n";
    return input_error;
  }
  const Instance instance = load_instance(args.input, args.slack);
  SolverOptions options;
  options.r_star = args.r;
  options.epsilon = args.epsilon;
  options.cover_budget = args.budget;
  const SolveOutcome outcome = run_solver(*id, instance, args.k, options);

  std::ostream& summary = args.out.empty() ? err : out;
  summary << "status " << to_string(outcome.status);
  if (outcome.failure != Failure::none) {
    summary << " failure " << to_string(outcome.failure) << "(" << outcome.failure_count << ")";
  }
  if (outcome.clustering) summary << " radius " << format_double(outcome.clustering->radius);
  if (outcome.radius_used) summary << " r " << format_double(*outcome.radius_used);
  summary << "\n";
  if (is_promise_failure(outcome)) return promise_violation;
  emit(args.out, io::clustering_to_json(*outcome.clustering).dump(2) + "\n", out);
  return ok;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream&) {
  const Instance instance = load_instance(args.input, args.slack);
  const OracleResult result = brute_force_optimal(instance, args.k, args.budget);
  json report;
  report["optimal_radius"] = io::number(result.optimal_radius);
  report["optimal_center_sets"] = result.optimal_center_sets;
  report["partition_unique"] = result.partition_unique;
  report["clustering"] = io::clustering_to_json(result.clustering);
  emit(args.out, report.dump(2) + "\n", out);
  return ok;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const Instance instance = load_instance(args.input, args.slack);
  Clustering truth;
  try {
    truth = io::clustering_from_json(json::parse(io::read_file(args.truth)), instance);
  } catch (const json::exception& error) {
    throw Error(ErrorCode::parse_error, args.truth + ": " + error.what());
  }
  const StabilityParams params{args.alpha, args.epsilon};
  params.validate();
  const double r = args.r.value_or(truth.radius);

  json report;
  report["alpha"] = args.alpha;
  report["epsilon"] = args.epsilon;
  report["r"] = io::number(r);
  report["structure"] = io::structure_to_json(check_structure(instance, truth, r, args.alpha));
  report["capture"] = io::ccc_to_json(find_cluster_capturing_centers(instance, truth, r));
  report["bad_center_bound_holds"] = count_bad_centers_bound_check(instance, truth, r);

  json falsifier;
  int code = ok;
  try {
    const FalsifyResult result = falsify_resilience(instance, truth.k, params, args.budget,
                                                    args.seed, args.oracle_budget, &truth);
    falsifier["verdict"] = to_string(result.verdict);
    falsifier["perturbations_tried"] = result.perturbations_tried;
    falsifier["targeted_phase_complete"] = result.targeted_phase_complete;
    falsifier["oracle_radius"] = io::number(result.r_star);
    falsifier["truth_is_optimal"] = result.reference_used;
    if (result.counterexample) {
      falsifier["counterexample"] = io::counterexample_to_json(*result.counterexample);
      code = falsified;
      if (!args.out.empty()) {
        io::write_file_atomic(args.out + ".dprime.kci",
                              io::emit_kci(result.counterexample->perturbation.dprime,
                                           Mode::asymmetric));
      }
    }
  } catch (const Error& error) {
    if (error.code() != ErrorCode::budget_exceeded) throw;
    falsifier["verdict"] = "skipped";
    falsifier["reason"] = error.what();
  }
  report["falsifier"] = std::move(falsifier);
  emit(args.out, report.dump(2) + "\n", out);
  if (!args.out.empty()) {
    out << "verdict " << report["falsifier"]["verdict"].get<std::string>() << "\n";
  }
  err << (code == falsified ? "counterexample found\n" : "");
  return code;
}

json generate_params(const GenerateArgs& args) {
  json params = json::object();
  if (args.n) params["n"] = *args.n;
  if (args.k) params["k"] = *args.k;
  if (args.r) params["r"] = *args.r;
  if (args.alpha) params["alpha"] = *args.alpha;
  if (args.skew) params["skew"] = *args.skew;
  if (args.epsilon) params["epsilon"] = *args.epsilon;
  if (args.p) params["p"] = *args.p;
  if (args.graph) params["graph"] = *args.graph;
  return params;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream&) {
  const FamilyOutput generated = generate_family(args.family, generate_params(args), args.seed);
  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const std::string name = args.name.empty() ? args.family : args.name;
  io::write_file_atomic(dir / (name + ".kci"), io::emit_kci(generated.instance));
  if (generated.truth) {
    io::write_file_atomic(dir / (name + ".truth.json"),
                          io::clustering_to_json(*generated.truth).dump(2) + "\n");
  }
  json guarantee = io::guarantee_to_json(generated.guarantee);
  guarantee["k"] = generated.k;
  guarantee["truth_written"] = generated.truth.has_value();
  io::write_file_atomic(dir / (name + ".guarantee.json"), guarantee.dump(2) + "\n");
  out << "wrote " << (dir / (name + ".kci")).string() << " n " << generated.instance.size()
      << " k " << generated.k << "\n";
  return ok;
}

std::string params_text(const json& params) {
  std::vector<std::string> parts;
  for (const auto& [key, value] : params.items()) {
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number()) {
      text = format_double(value.get<double>());
    } else {
      text = value.dump();
    }
    parts.push_back(key + "=" + text);
  }
  std::sort(parts.begin(), parts.end());
  std::string joined;
  for (const auto& part : parts) {
    if (!joined.empty()) joined += ';';
    joined += part;
  }
  return joined;
}

std::string csv_field(std::string text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string bench_row(const json& row, std::uint64_t seed, bool timing) {
  const std::string family = row.at("family").get<std::string>();
  const json params = row.value("params", json::object());
  const std::string solver = row.at("solver").get<std::string>();
  const json solver_params = row.value("solver_params", json::object());
  std::string eps = "NA";
  std::string ratio = "NA";
  std::string wall = "NA";
  std::string status;
  try {
    const auto id = parse_solver_id(solver);
    if (!id) throw Error(ErrorCode::invalid_argument, "unknown solver " + solver);
    const FamilyOutput generated = generate_family(family, params, seed);
    SolverOptions options;
    options.epsilon = solver_params.value("epsilon", 0.0);
    const json r = solver_params.value("r", json("sweep"));
    if (r.is_number()) {
      options.r_star = r.get<double>();
    } else if (r == "truth") {
      if (!generated.truth) throw Error(ErrorCode::invalid_argument, "row has no truth radius");
      options.r_star = generated.truth->radius;
    } else if (r != "sweep") {
      throw Error(ErrorCode::invalid_argument, "solver_params.r must be a number, truth or sweep");
    }
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome outcome = run_solver(*id, generated.instance, generated.k, options);
    const auto stop = std::chrono::steady_clock::now();
    if (timing) {
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.3f",
                    std::chrono::duration<double, std::milli>(stop - start).count());
      wall = buffer;
    }
    status = outcome.failure == Failure::none ? std::string(to_string(outcome.status))
                                              : std::string(to_string(outcome.failure));
    if (outcome.clustering) {
      if (generated.truth) eps = format_double(epsilon_distance(*generated.truth, *outcome.clustering));
      try {
        const OracleResult oracle = brute_force_optimal(generated.instance, generated.k);
        ratio = oracle.optimal_radius > 0.0
                    ? format_double(outcome.clustering->radius / oracle.optimal_radius)
                    : (outcome.clustering->radius == 0.0 ? "1" : "NA");
      } catch (const Error& error) {
        if (error.code() != ErrorCode::budget_exceeded) throw;
      }
    }
  } catch (const Error& error) {
    status = "error:" + std::string(to_string(error.code()));
  } catch (const json::exception&) {
    status = "error:ParseError";
  }
  return csv_field(family) + "," + csv_field(params_text(params)) + "," + std::to_string(seed) +
         "," + csv_field(solver) + "," + eps + "," + ratio + "," + wall + "," + status + "\n";
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream&) {
  json manifest;
  try {
    manifest = json::parse(io::read_file(args.manifest));
  } catch (const json::exception& error) {
    throw Error(ErrorCode::parse_error, args.manifest + ": " + error.what());
  }
  if (!manifest.contains("rows") || !manifest.at("rows").is_array()) {
    throw Error(ErrorCode::parse_error, args.manifest + ": expected an object with a rows array");
  }
  std::string csv = "family,params,seed,solver,eps_dist,radius_ratio,wall_ms,status\n";
  for (const auto& row : manifest.at("rows")) {
    std::vector<std::uint64_t> seeds{0};
    if (row.contains("seeds")) seeds = row.at("seeds").get<std::vector<std::uint64_t>>();
    for (std::uint64_t seed : seeds) csv += bench_row(row, seed, !args.no_timing);
  }
  emit(args.out, csv, out);
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-center clustering for perturbation-resilient instances", "kcenter"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a solver on a KCI instance");
  solve_cmd->add_option("input", solve.input, "Instance file (KCI v1)")->required();
  solve_cmd->add_option("--algo", solve.algo, "Solver id")->required();
  solve_cmd->add_option("--k", solve.k, "Number of clusters")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--r", solve.r, "Radius guess; omitted means sweep");
  solve_cmd->add_option("--epsilon", solve.epsilon, "Epsilon for alg4-2eps-as")->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_option("--slack", solve.slack, "Comparison slack for validation");
  solve_cmd->add_option("--budget", solve.budget, "Candidate-set budget for alg2-3eps-asym");
  solve_cmd->add_option("--out", solve.out, "Clustering JSON path (default stdout)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum of a KCI instance");
  oracle_cmd->add_option("input", oracle.input)->required();
  oracle_cmd->add_option("--k", oracle.k)->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--budget", oracle.budget, "Subset enumeration budget");
  oracle_cmd->add_option("--slack", oracle.slack);
  oracle_cmd->add_option("--out", oracle.out);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Structure checks and resilience falsifier");
  verify_cmd->add_option("input", verify.input)->required();
  verify_cmd->add_option("--truth", verify.truth, "Reference clustering JSON")->required();
  verify_cmd->add_option("--alpha", verify.alpha)->check(CLI::Range(1.0, 1e300));
  verify_cmd->add_option("--epsilon", verify.epsilon)->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--r", verify.r, "Radius for the structure checks (default truth radius)");
  verify_cmd->add_option("--budget", verify.budget, "Perturbations to try");
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--oracle-budget", verify.oracle_budget);
  verify_cmd->add_option("--slack", verify.slack);
  verify_cmd->add_option("--out", verify.out, "Report JSON path (default stdout)");

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated instance with its truth");
  generate_cmd->add_option("family", generate.family)->required()->check(CLI::IsMember(family_names()));
  generate_cmd->add_option("--n", generate.n);
  generate_cmd->add_option("--k", generate.k);
  generate_cmd->add_option("--r", generate.r);
  generate_cmd->add_option("--alpha", generate.alpha);
  generate_cmd->add_option("--skew", generate.skew);
  generate_cmd->add_option("--epsilon", generate.epsilon);
  generate_cmd->add_option("--p", generate.p, "Edge probability for random dom-set graphs");
  generate_cmd->add_option("--graph", generate.graph, "star5, pathN, cycleN, completeN, emptyN");
  generate_cmd->add_option("--seed", generate.seed);
  generate_cmd->add_option("--out-dir", generate.out_dir);
  generate_cmd->add_option("--name", generate.name, "File stem (default family name)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a manifest and write a CSV");
  bench_cmd->add_option("manifest", bench.manifest)->required();
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Write NA for wall_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    std::ostringstream o, e;
    const int status = app.exit(error, o, e);
    out << o.str();
    err << e.str();
    return status == 0 ? ok : input_error;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*generate_cmd) return cmd_generate(generate, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const Error& error) {
    err << "error: " << to_string(error.code()) << ": " << error.what() << "\n";
    return input_error;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace kcenter::cli
