#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "carleson/error.hpp"
#include "carleson/generators.hpp"
#include "carleson/greedy_log.hpp"
#include "carleson/greedy_opt.hpp"
#include "carleson/io.hpp"
#include "carleson/oracle.hpp"
#include "carleson/partition.hpp"
#include "carleson/version.hpp"

namespace {

using carleson::Json;
using carleson::Rat;

struct Options {
  std::string input;
  std::string output;
  std::string spec_path;
  std::string witness_path;
  std::string partition_path;

  std::string kind = "line";
  std::string lambda = "2";
  long count = 1;
  int dimension = 1;
  int depth = 1;
  int atoms = 1;
  std::uint64_t seed = 0;

  std::string algorithm = "opt-adaptive";
  std::string eta = "1/2";
  std::string gamma = "1/2";
  std::string m_value = "2";
  std::string car_upper;
  std::optional<std::size_t> max_buckets;

  std::size_t max_oracle_sets = 20;
  int jobs = 0;
  std::string m_eta;
  std::string strategy = "atoms";
  std::size_t candidates = 64;
  std::size_t size_limit = 3;
};

int exit_code_for(carleson::Errc code) {
  switch (code) {
    case carleson::Errc::too_large:
    case carleson::Errc::grid_too_large:
      return 3;
    default:
      return 2;
  }
}

Json envelope(const std::string& command, const std::string& input_hash,
              Json params) {
  Json j;
  j["schema"] = carleson::kSchemaVersion;
  Json tool;
  tool["name"] = carleson::kToolName;
  tool["version"] = carleson::kToolVersion;
  j["tool"] = std::move(tool);
  j["command"] = command;
  j["input_hash"] = input_hash;
  j["params"] = std::move(params);
  return j;
}

void emit(const Options& opt, const Json& report) {
  const std::string text = carleson::dump_json(report);
  std::cout << text;
  if (!opt.output.empty()) carleson::write_file_atomic(opt.output, text);
}

carleson::SetCollection load_collection(const Options& opt, std::string& hash) {
  if (opt.input.empty())
    carleson::fail(carleson::Errc::bad_parameter, "--input is required");
  const std::string text = carleson::read_file(opt.input);
  hash = carleson::content_hash(text);
  return carleson::parse_collection(text);
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(carleson::read_file(path));
  } catch (const Json::parse_error& e) {
    carleson::fail(carleson::Errc::parse, e.what());
  }
}

Json checks_to_json(const carleson::PartitionChecks& checks) {
  Json j;
  j["disjoint_ok"] = checks.disjoint_ok;
  j["mass_ok"] = checks.mass_ok;
  j["count_ok"] = checks.count_ok;
  j["bucket_bound"] = carleson::rat_to_string(checks.bucket_bound);
  j["bucket_count"] = checks.bucket_count;
  j["ok"] = checks.all_ok();
  return j;
}

carleson::FamilySpec spec_from_flags(const Options& opt) {
  Json j;
  j["kind"] = opt.kind == "random" ? "random" : opt.kind;
  j["lambda"] = opt.lambda;
  j["count"] = opt.count;
  j["dimension"] = opt.dimension;
  j["depth"] = opt.depth;
  j["atoms"] = opt.atoms;
  j["seed"] = opt.seed;
  return carleson::family_spec_from_json(j);
}

int run_generate(const Options& opt) {
  carleson::FamilySpec spec;
  if (!opt.spec_path.empty())
    spec = carleson::parse_family_spec(carleson::read_file(opt.spec_path));
  else
    spec = spec_from_flags(opt);

  const carleson::SetCollection c = carleson::generate(spec);
  Json meta;
  meta["family"] = carleson::family_spec_to_json(spec);
  if (spec.kind == carleson::FamilyKind::dyadic_intervals ||
      spec.kind == carleson::FamilyKind::dyadic_rectangles ||
      spec.kind == carleson::FamilyKind::random_family)
    meta["prng"] = carleson::kPrngName;
  meta["tool"] = std::string(carleson::kToolName) + " " + carleson::kToolVersion;

  emit(opt, carleson::collection_to_json(c, std::move(meta)));
  return 0;
}

int run_analyze(const Options& opt) {
  std::string hash;
  const carleson::SetCollection c = load_collection(opt, hash);

  Json params;
  params["algorithm"] = opt.algorithm;
  Json result;
  if (opt.algorithm == "log") {
    const carleson::LogTrace trace = carleson::run_log(c);
    const carleson::SparseWitness witness = carleson::normalize_witness(trace, c);
    const Rat s = carleson::witness_normalizer(trace, c);
    const Rat certificate = 2 * trace.A * s;
    result["A"] = carleson::rat_to_string(trace.A);
    result["S"] = carleson::rat_to_string(s);
    result["trace"] = carleson::log_trace_to_json(trace, *c.space());
    result["witness"] = carleson::witness_to_json(witness, *c.space());
    result["eta"] = carleson::rat_to_string(witness.achieved_eta);
    result["certificate"] = carleson::rat_to_string(certificate);

    Json report = envelope("analyze", hash, std::move(params));
    report["result"] = std::move(result);
    Json summary;
    summary["A_approx"] = carleson::rat_to_double(trace.A);
    summary["eta_approx"] = carleson::rat_to_double(witness.achieved_eta);
    summary["certificate_approx"] = carleson::rat_to_double(certificate);
    report["summary"] = std::move(summary);
    emit(opt, report);
    return 0;
  }

  const Rat eta = carleson::rat_from_string(opt.eta);
  carleson::ThresholdMode mode;
  if (opt.algorithm == "opt-fixed") {
    mode = carleson::ThresholdMode::fixed_mode(
        carleson::rat_from_string(opt.m_value), eta);
    params["eta"] = opt.eta;
    params["M"] = opt.m_value;
  } else if (opt.algorithm == "opt-adaptive") {
    mode = carleson::ThresholdMode::adaptive(eta);
    params["eta"] = opt.eta;
  } else {
    carleson::fail(carleson::Errc::bad_parameter,
                   "unknown algorithm '" + opt.algorithm + "'");
  }

  const carleson::OptTrace trace = carleson::run_opt(c, mode);
  const carleson::SparseWitness witness = carleson::witness_from_trace(trace, c);
  const Rat certificate = carleson::carleson_certificate(trace, eta);
  result["A"] = carleson::rat_to_string(trace.A);
  result["trace"] = carleson::opt_trace_to_json(trace, mode);
  result["witness"] = carleson::witness_to_json(witness, *c.space());
  result["eta"] = carleson::rat_to_string(witness.achieved_eta);
  result["certificate"] = carleson::rat_to_string(certificate);

  Json report = envelope("analyze", hash, std::move(params));
  report["result"] = std::move(result);
  Json summary;
  summary["A_approx"] = carleson::rat_to_double(trace.A);
  summary["eta_approx"] = carleson::rat_to_double(witness.achieved_eta);
  summary["certificate_approx"] = carleson::rat_to_double(certificate);
  report["summary"] = std::move(summary);
  emit(opt, report);
  return 0;
}

int run_partition(const Options& opt) {
  std::string hash;
  const carleson::SetCollection c = load_collection(opt, hash);
  const Rat eta = carleson::rat_from_string(opt.eta);
  const Rat gamma = carleson::rat_from_string(opt.gamma);
  const Rat m = carleson::rat_from_string(opt.m_value);

  const carleson::OptTrace trace =
      carleson::run_opt(c, carleson::ThresholdMode::adaptive(eta));
  std::vector<long> order;
  order.reserve(trace.steps.size());
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
    order.push_back(it->set_id);

  carleson::FirstFitPolicy policy;
  policy.max_buckets = opt.max_buckets;
  const carleson::PartitionResult p = carleson::split(c, order, gamma, policy);
  const Rat car_upper = opt.car_upper.empty()
                            ? carleson::carleson_certificate(trace, eta)
                            : carleson::rat_from_string(opt.car_upper);
  const carleson::PartitionChecks checks =
      carleson::verify_partition(p, c, m, eta, car_upper);

  Json params;
  params["eta"] = opt.eta;
  params["gamma"] = opt.gamma;
  params["M"] = opt.m_value;
  Json report = envelope("partition", hash, std::move(params));
  Json result;
  result["order"] = order;
  result["partition"] = carleson::partition_to_json(p);
  result["car_upper"] = carleson::rat_to_string(car_upper);
  result["checks"] = checks_to_json(checks);
  report["result"] = std::move(result);
  Json summary;
  summary["buckets"] = p.buckets.size();
  summary["ok"] = checks.all_ok();
  report["summary"] = std::move(summary);
  emit(opt, report);
  return checks.all_ok() ? 0 : 2;
}

int run_verify(const Options& opt) {
  std::string hash;
  const carleson::SetCollection c = load_collection(opt, hash);
  if (opt.witness_path.empty() && opt.partition_path.empty())
    carleson::fail(carleson::Errc::bad_parameter,
                   "give --witness and/or --partition");

  Json params;
  Json result;
  bool ok = true;
  if (!opt.witness_path.empty()) {
    const Json wj = parse_json_file(opt.witness_path);
    const carleson::SparseWitness w = carleson::witness_from_json(wj, c);
    const Rat verified = carleson::verify_sparse_witness(c, w);
    const bool witness_ok = w.achieved_eta <= verified;
    Json entry;
    entry["claimed_eta"] = carleson::rat_to_string(w.achieved_eta);
    entry["verified_eta"] = carleson::rat_to_string(verified);
    entry["ok"] = witness_ok;
    result["witness"] = std::move(entry);
    ok = ok && witness_ok;
  }
  if (!opt.partition_path.empty()) {
    const Json pj = parse_json_file(opt.partition_path);
    const carleson::PartitionResult p = carleson::partition_from_json(pj, c);
    const Rat eta = carleson::rat_from_string(opt.eta);
    const Rat m = carleson::rat_from_string(opt.m_value);
    const Rat car_upper = opt.car_upper.empty()
                              ? carleson::carleson_exact(c, opt.jobs).value
                              : carleson::rat_from_string(opt.car_upper);
    params["eta"] = opt.eta;
    params["M"] = opt.m_value;
    const carleson::PartitionChecks checks =
        carleson::verify_partition(p, c, m, eta, car_upper);
    Json entry = checks_to_json(checks);
    entry["car_upper"] = carleson::rat_to_string(car_upper);
    result["partition"] = std::move(entry);
    ok = ok && checks.all_ok();
  }

  Json report = envelope("verify", hash, std::move(params));
  report["result"] = std::move(result);
  Json summary;
  summary["ok"] = ok;
  report["summary"] = std::move(summary);
  emit(opt, report);
  return ok ? 0 : 2;
}

int run_oracle(const Options& opt) {
  std::string hash;
  const carleson::SetCollection c = load_collection(opt, hash);
  if (c.size() > opt.max_oracle_sets)
    carleson::fail(carleson::Errc::too_large,
                   "collection has " + std::to_string(c.size()) +
                       " sets; --max-oracle-sets is " +
                       std::to_string(opt.max_oracle_sets));

  const carleson::OracleReport car = carleson::carleson_exact(c, opt.jobs);
  const carleson::OracleReport weak = carleson::weak_carleson_exact(c, opt.jobs);

  Json params;
  params["max_oracle_sets"] = opt.max_oracle_sets;
  Json result;
  result["carleson"] = carleson::oracle_report_to_json(car);
  result["weak"] = carleson::oracle_report_to_json(weak);
  if (!opt.m_eta.empty()) {
    const Rat eta = carleson::rat_from_string(opt.m_eta);
    carleson::CandidateStrategy strategy;
    if (opt.strategy == "atoms")
      strategy = carleson::CandidateStrategy::atoms();
    else if (opt.strategy == "shadows")
      strategy = carleson::CandidateStrategy::subfamily_shadows(opt.size_limit);
    else if (opt.strategy == "random")
      strategy = carleson::CandidateStrategy::random(opt.seed, opt.candidates);
    else
      carleson::fail(carleson::Errc::bad_parameter,
                     "unknown strategy '" + opt.strategy + "'");
    const Rat bound = carleson::m_eta_lower_bound(c, eta, strategy);
    Json entry;
    entry["eta"] = opt.m_eta;
    entry["strategy"] = opt.strategy;
    entry["value"] = carleson::rat_to_string(bound);
    result["m_eta_lower"] = std::move(entry);
    params["m_eta"] = opt.m_eta;
    params["strategy"] = opt.strategy;
  }

  Json report = envelope("oracle", hash, std::move(params));
  report["result"] = std::move(result);
  Json summary;
  summary["carleson_approx"] = carleson::rat_to_double(car.value);
  summary["weak_approx"] = carleson::rat_to_double(weak.value);
  report["summary"] = std::move(summary);
  emit(opt, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse witnesses and Carleson-constant approximation for "
               "finite set collections over atomic measure spaces"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* generate = app.add_subcommand(
      "generate", "Emit a collection from a family description");
  generate->add_option("--spec", opt.spec_path, "Family spec JSON file");
  generate->add_option("--kind", opt.kind,
                       "line|staircase|dyadic_intervals|dyadic_rectangles|random");
  generate->add_option("--lambda", opt.lambda, "Lambda parameter (rational)");
  generate->add_option("--count", opt.count, "Number of sets");
  generate->add_option("--dimension", opt.dimension, "Grid dimension");
  generate->add_option("--depth", opt.depth, "Dyadic depth per axis");
  generate->add_option("--atoms", opt.atoms, "Atom count (random kind)");
  generate->add_option("--seed", opt.seed, "PRNG seed");
  generate->add_option("--output", opt.output, "Output file");

  CLI::App* analyze =
      app.add_subcommand("analyze", "Run a greedy algorithm and emit "
                                    "trace, witness, and certificate");
  analyze->add_option("--input", opt.input, "Collection JSON file");
  analyze->add_option("--algorithm", opt.algorithm, "log|opt-fixed|opt-adaptive");
  analyze->add_option("--eta", opt.eta, "Sparseness level (rational in (0,1))");
  analyze->add_option("--M", opt.m_value, "Restricted weak-type constant");
  analyze->add_option("--output", opt.output, "Report file");

  CLI::App* partition = app.add_subcommand(
      "partition", "Partition into gamma-sparse buckets and verify");
  partition->add_option("--input", opt.input, "Collection JSON file");
  partition->add_option("--eta", opt.eta, "Eta for the removal order");
  partition->add_option("--gamma", opt.gamma, "Per-bucket sparseness target");
  partition->add_option("--M", opt.m_value, "Constant in the bucket bound");
  partition->add_option("--car-upper", opt.car_upper,
                        "Carleson upper bound (default: the run certificate)");
  std::size_t max_buckets_flag = 0;
  CLI::Option* mb = partition->add_option("--max-buckets", max_buckets_flag,
                                          "Fail instead of opening more buckets");
  partition->add_option("--output", opt.output, "Report file");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check a sparse witness and/or a partition against a collection");
  verify->add_option("--input", opt.input, "Collection JSON file");
  verify->add_option("--witness", opt.witness_path, "Witness JSON file");
  verify->add_option("--partition", opt.partition_path, "Partition JSON file");
  verify->add_option("--eta", opt.eta, "Eta for the bucket bound");
  verify->add_option("--M", opt.m_value, "Constant in the bucket bound");
  verify->add_option("--car-upper", opt.car_upper,
                     "Carleson upper bound (default: exact oracle)");
  verify->add_option("--jobs", opt.jobs, "Worker threads for the oracle");
  verify->add_option("--output", opt.output, "Report file");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exact Carleson and weak constants by enumeration");
  oracle->add_option("--input", opt.input, "Collection JSON file");
  oracle->add_option("--max-oracle-sets", opt.max_oracle_sets,
                     "Refuse larger collections (cap 20)");
  oracle->add_option("--jobs", opt.jobs, "Worker threads (0 = default)");
  oracle->add_option("--m-eta", opt.m_eta,
                     "Also search a restricted weak-type lower bound at this eta");
  oracle->add_option("--strategy", opt.strategy, "atoms|shadows|random");
  oracle->add_option("--candidates", opt.candidates, "Random candidates to draw");
  oracle->add_option("--size-limit", opt.size_limit,
                     "Max subfamily size (shadows strategy)");
  oracle->add_option("--seed", opt.seed, "PRNG seed (random strategy)");
  oracle->add_option("--output", opt.output, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (mb->count() > 0) opt.max_buckets = max_buckets_flag;

  std::string command = "unknown";
  try {
    if (app.got_subcommand(generate)) {
      command = "generate";
      return run_generate(opt);
    }
    if (app.got_subcommand(analyze)) {
      command = "analyze";
      return run_analyze(opt);
    }
    if (app.got_subcommand(partition)) {
      command = "partition";
      return run_partition(opt);
    }
    if (app.got_subcommand(verify)) {
      command = "verify";
      return run_verify(opt);
    }
    if (app.got_subcommand(oracle)) {
      command = "oracle";
      return run_oracle(opt);
    }
  } catch (const carleson::Error& e) {
    Json report = envelope(command, "", Json::object());
    Json error;
    error["code"] = carleson::errc_name(e.code());
    error["message"] = e.what();
    report["error"] = std::move(error);
    const std::string text = carleson::dump_json(report);
    std::cout << text;
    if (!opt.output.empty()) {
      try {
        carleson::write_file_atomic(opt.output, text);
      } catch (const carleson::Error&) {
        // Report already went to stdout; the exit code carries the failure.
      }
    }
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    Json report = envelope(command, "", Json::object());
    Json error;
    error["code"] = "InternalError";
    error["message"] = e.what();
    report["error"] = std::move(error);
    std::cout << carleson::dump_json(report);
    return 2;
  }
  return 2;
}
