// balident - exact verification of Bernoulli/balancing polynomial identities.
//
// Subcommands:
//   verify    run identity checkers over parameter grids, emit a report
//   compute   print one exact sequence/polynomial value
//   list      show the identity registry
//
// Exit codes: 0 all requested checks pass, 1 at least one failed case,
// 2 usage or configuration error.

#include "balident/identities.hpp"
#include "balident/report.hpp"
#include "balident/sequences.hpp"
#include "balident/value_parse.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace balident;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::string known_ids() {
  std::string out;
  for (const IdentityDescriptor& d : registry()) {
    if (!out.empty())
      out += ", ";
    out += d.id;
  }
  return out;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    return false;
  out << content;
  return out.good();
}

struct VerifyOptions {
  std::vector<std::string> ids;
  bool all = false;
  std::optional<long long> n_max, j_max, m_max, q_max, big_n_max;
  std::optional<long long> series_order;
  std::string format = "human";
  std::string output;
  unsigned parallel = 0;
  bool no_timestamp = false;
};

int run_verify(const VerifyOptions& opt) {
  if (!opt.all && opt.ids.empty())
    return fail_usage("verify needs --all or at least one --id");
  for (const std::string& id : opt.ids)
    if (!find_identity(id))
      return fail_usage("unknown identity '" + id + "'; valid ids: " + known_ids());
  if (opt.format != "human" && opt.format != "json" && opt.format != "csv")
    return fail_usage("unknown format '" + opt.format + "' (human|json|csv)");

  std::size_t series_order = 25;
  if (const char* env = std::getenv("BALIDENT_SERIES_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
      return fail_usage("BALIDENT_SERIES_ORDER must be a nonnegative integer");
    series_order = static_cast<std::size_t>(v);
  }
  if (opt.series_order) {
    if (*opt.series_order < 0)
      return fail_usage("--series-order must be nonnegative");
    series_order = static_cast<std::size_t>(*opt.series_order);
  }
  if (series_order > max_series_order())
    return fail_usage("series order " + std::to_string(series_order) + " exceeds hard cap " +
                      std::to_string(max_series_order()));

  RunConfig config;
  config.ids = opt.all ? std::vector<std::string>{} : opt.ids;
  config.limits.n_max = opt.n_max;
  config.limits.j_max = opt.j_max;
  config.limits.m_max = opt.m_max;
  config.limits.q_max = opt.q_max;
  config.limits.big_n_max = opt.big_n_max;
  config.series_order = series_order;
  config.parallelism = opt.parallel;
  config.include_timestamp = !opt.no_timestamp;

  std::vector<VerificationResult> results;
  try {
    std::vector<Case> cases = enumerate_cases(config.ids, config.limits, config.series_order);
    results = run_cases(cases, config.parallelism, config.series_order);
  } catch (const Error& e) {
    return fail_usage(e.what());
  }

  std::string rendered;
  if (opt.format == "json")
    rendered = render_json(config, results);
  else if (opt.format == "csv")
    rendered = render_csv(results);
  else
    rendered = render_human(results);

  if (!write_output(opt.output, rendered))
    return fail_usage("cannot write output file '" + opt.output + "'");
  if (opt.format != "human" && opt.output.empty()) {
    // machine formats go to the chosen stream as-is; summary still on stderr
    RunSummary s = summarize(results);
    std::cerr << s.total << " cases, " << s.passed << " passed\n";
  } else if (!opt.output.empty()) {
    RunSummary s = summarize(results);
    std::cout << s.total << " cases, " << s.passed << " passed\n";
  }

  return summarize(results).failed == 0 ? 0 : 1;
}

struct ComputeOptions {
  std::string sequence;
  long long n = -1;
  std::string at;
};

int run_compute(const ComputeOptions& opt) {
  if (opt.n < 0)
    return fail_usage("--n must be a nonnegative index");
  SequenceCache cache;
  std::size_t n = static_cast<std::size_t>(opt.n);

  const bool is_poly = opt.sequence == "bernoulli-poly" || opt.sequence == "balancing-poly" ||
                       opt.sequence == "lucas-balancing-poly";
  if (!opt.at.empty() && !is_poly)
    return fail_usage("--at applies only to polynomial families");

  Poly<Rational> poly;
  if (opt.sequence == "bernoulli") {
    std::cout << cache.bernoulli_number(n).str() << "\n";
    return 0;
  } else if (opt.sequence == "fibonacci") {
    std::cout << cache.fibonacci(n).str() << "\n";
    return 0;
  } else if (opt.sequence == "lucas") {
    std::cout << cache.lucas(n).str() << "\n";
    return 0;
  } else if (opt.sequence == "balancing") {
    std::cout << cache.balancing_poly(n).eval(Rational(1)).str() << "\n";
    return 0;
  } else if (opt.sequence == "lucas-balancing") {
    std::cout << cache.lucas_balancing_poly(n).eval(Rational(1)).str() << "\n";
    return 0;
  } else if (opt.sequence == "bernoulli-poly") {
    poly = cache.bernoulli_poly(n);
  } else if (opt.sequence == "balancing-poly") {
    poly = cache.balancing_poly(n);
  } else if (opt.sequence == "lucas-balancing-poly") {
    poly = cache.lucas_balancing_poly(n);
  } else {
    return fail_usage("unknown sequence family '" + opt.sequence +
                      "' (bernoulli, bernoulli-poly, fibonacci, lucas, balancing, "
                      "balancing-poly, lucas-balancing, lucas-balancing-poly)");
  }

  if (opt.at.empty()) {
    std::cout << poly.str() << "\n";
    return 0;
  }
  try {
    ParsedPoint point = parse_point(opt.at);
    if (std::holds_alternative<Rational>(point))
      std::cout << poly.eval(std::get<Rational>(point)).str() << "\n";
    else if (std::holds_alternative<QSqrt5>(point))
      std::cout << poly.eval_as<QSqrt5>(std::get<QSqrt5>(point)).str() << "\n";
    else
      std::cout << poly.eval_as<QGauss>(std::get<QGauss>(point)).str() << "\n";
  } catch (const ParseError& e) {
    return fail_usage(e.what());
  }
  return 0;
}

int run_list(const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const IdentityDescriptor& d : registry()) {
      nlohmann::ordered_json entry;
      entry["id"] = d.id;
      entry["anchor"] = d.anchor;
      entry["domain"] = std::string(to_string(d.domain));
      entry["statement"] = d.statement;
      entry["params"] = nlohmann::ordered_json::array();
      for (const ParamRange& r : d.params)
        entry["params"].push_back({{"name", r.name}, {"lo", r.lo}, {"hi", r.hi}});
      entry["series"] = d.has_series;
      doc.push_back(std::move(entry));
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (format != "human")
    return fail_usage("unknown format '" + format + "' (human|json)");
  for (const IdentityDescriptor& d : registry()) {
    std::string ranges;
    for (const ParamRange& r : d.params) {
      if (!ranges.empty())
        ranges += ", ";
      ranges += r.name + " in [" + std::to_string(r.lo) + ".." + std::to_string(r.hi) + "]";
    }
    if (d.has_series)
      ranges += " (+series)";
    std::cout << d.id << " | " << d.anchor << " | " << to_string(d.domain) << " | " << ranges
              << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Bernoulli, Fibonacci/Lucas and balancing-polynomial "
               "identities"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run identity verification grids");
  verify_cmd->add_option("--id", vopt.ids, "Identity id (repeatable)");
  verify_cmd->add_flag("--all", vopt.all, "Verify every registered identity");
  verify_cmd->add_option("--n-max", vopt.n_max, "Upper bound for n");
  verify_cmd->add_option("--j-max", vopt.j_max, "Upper bound for j");
  verify_cmd->add_option("--m-max", vopt.m_max, "Upper bound for m");
  verify_cmd->add_option("--q-max", vopt.q_max, "Upper bound for q");
  verify_cmd->add_option("--N-max", vopt.big_n_max, "Upper bound for N");
  verify_cmd->add_option("--series-order", vopt.series_order,
                         "Series truncation order (default 25; env BALIDENT_SERIES_ORDER)");
  verify_cmd->add_option("--format", vopt.format, "Output format: human|json|csv");
  verify_cmd->add_option("--output", vopt.output, "Write the report to a file");
  verify_cmd->add_option("--parallel", vopt.parallel, "Worker threads (0 = all cores)");
  verify_cmd->add_flag("--no-timestamp", vopt.no_timestamp, "Omit the timestamp field");

  ComputeOptions copt;
  CLI::App* compute_cmd = app.add_subcommand("compute", "Print one exact sequence value");
  compute_cmd->add_option("--sequence", copt.sequence, "Family name")->required();
  compute_cmd->add_option("--n", copt.n, "Index")->required();
  compute_cmd->add_option("--at", copt.at, "Evaluation point for polynomial families");

  std::string list_format = "human";
  CLI::App* list_cmd = app.add_subcommand("list", "Show the identity registry");
  list_cmd->add_option("--format", list_format, "Output format: human|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify_cmd->parsed())
      return run_verify(vopt);
    if (compute_cmd->parsed())
      return run_compute(copt);
    return run_list(list_format);
  } catch (const balident::Error& e) {
    return fail_usage(e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
