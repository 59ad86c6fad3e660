// Command-line surface for the leaf-distance distribution toolkit: exact
// distributions, medians, percentiles and moments for uniform fully
// resolved unrooted trees, plus verification and sampling commands.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "phylodist/phylodist.hpp"
#include "record.hpp"

namespace {

using phylodist::BigCount;
using phylodist::BigRatio;
using phylodist::cli::format_double;
using phylodist::cli::OutputRecord;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;

struct CommonOptions {
  std::string format = "csv";
  std::string output;
};

void add_common_flags(CLI::App& cmd, CommonOptions& common) {
  cmd.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--output", common.output,
                 "Write to this file instead of standard output");
}

BigRatio parse_probability(const std::string& text) {
  const BigRatio p = BigRatio::from_string(text);
  if (p <= BigRatio(0) || p >= BigRatio(1)) {
    throw std::domain_error("probability must lie strictly in (0,1), got " + text);
  }
  return p;
}

int run_dist(std::int64_t n, const CommonOptions& common) {
  const auto dist = phylodist::distribution(n);
  const BigCount total = phylodist::tree_count(n);
  OutputRecord record{{"i", "count", "probability"}, {}};
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    record.add_row({std::to_string(i), dist.count(i).to_string(),
                    BigRatio(dist.count(i), total).to_string()});
  }
  emit(record, common.format, common.output);
  return kExitOk;
}

int run_median(std::int64_t n, bool asymptotics, const CommonOptions& common) {
  const std::int64_t med = phylodist::median(n);
  OutputRecord record;
  if (asymptotics) {
    const double plain = phylodist::median_asymptotic(n, false);
    const double refined = phylodist::median_asymptotic(n, true);
    record.columns = {"n", "median", "asymptote", "refined_asymptote", "ratio"};
    record.add_row({std::to_string(n), std::to_string(med), format_double(plain),
                    format_double(refined),
                    format_double(static_cast<double>(med) / plain)});
  } else {
    record.columns = {"n", "median"};
    record.add_row({std::to_string(n), std::to_string(med)});
  }
  emit(record, common.format, common.output);
  return kExitOk;
}

int run_percentile(std::int64_t n, const std::string& p_text,
                   const CommonOptions& common) {
  const BigRatio p = parse_probability(p_text);
  const std::int64_t x_p = phylodist::percentile(n, p);
  const double asymptote = phylodist::percentile_asymptotic(n, p.to_double());
  OutputRecord record{{"n", "p", "percentile", "asymptote"}, {}};
  record.add_row({std::to_string(n), p.to_string(), std::to_string(x_p),
                  format_double(asymptote)});
  emit(record, common.format, common.output);
  return kExitOk;
}

int run_stats(std::int64_t n, const CommonOptions& common) {
  const BigRatio mean = phylodist::mean_distance(n);
  const BigRatio variance = phylodist::variance_distance(n);
  const double ratio =
      mean.to_double() / std::sqrt(M_PI * static_cast<double>(n));
  OutputRecord record{{"n", "mean", "variance", "mean_over_sqrt_pi_n"}, {}};
  record.add_row({std::to_string(n), mean.to_string(), variance.to_string(),
                  format_double(ratio)});
  emit(record, common.format, common.output);
  return kExitOk;
}

int run_verify(const phylodist::selfcheck::VerifyOptions& options,
               const CommonOptions& common) {
  const auto results = phylodist::selfcheck::run_all(options);
  OutputRecord record{{"check", "range", "status", "detail"}, {}};
  bool all_passed = true;
  for (const auto& result : results) {
    record.add_row({result.name, result.range, result.passed ? "pass" : "fail",
                    result.counterexample});
    if (!result.passed) {
      if (all_passed) {
        std::cerr << "verification failed: " << result.name << " ("
                  << result.counterexample << ")\n";
      }
      all_passed = false;
    }
  }
  emit(record, common.format, common.output);
  return all_passed ? kExitOk : kExitVerificationFailure;
}

int run_sample(std::int64_t n, std::int64_t samples, std::uint64_t seed,
               const std::string& newick_path, const CommonOptions& common) {
  std::ofstream newick_out;
  std::function<void(const phylodist::PhyloTree&)> tap;
  if (!newick_path.empty()) {
    newick_out.open(newick_path);
    if (!newick_out) {
      throw std::domain_error("cannot open Newick output file: " + newick_path);
    }
    tap = [&](const phylodist::PhyloTree& tree) {
      newick_out << phylodist::to_newick(tree) << '\n';
    };
  }
  const auto histogram = phylodist::monte_carlo_distribution(n, samples, seed, tap);
  const auto exact = phylodist::distribution(n);
  const BigCount total = exact.total();
  const double sup = phylodist::kolmogorov_distance(histogram, exact);
  const std::string sup_text = format_double(sup);

  OutputRecord record{
      {"distance", "count", "frequency", "exact_probability", "sup_distance"}, {}};
  for (std::size_t j = 0; j < histogram.size(); ++j) {
    const double frequency =
        static_cast<double>(histogram[j]) / static_cast<double>(samples);
    record.add_row({std::to_string(j + 1), std::to_string(histogram[j]),
                    format_double(frequency),
                    BigRatio(exact.counts()[j], total).to_string(), sup_text});
  }
  emit(record, common.format, common.output);
  return kExitOk;
}

int run_asympt(const std::vector<std::int64_t>& n_values, const std::string& p_text,
               const CommonOptions& common) {
  OutputRecord record;
  if (p_text.empty()) {
    record.columns = {"n", "median", "asymptote", "refined_asymptote", "ratio"};
    for (const std::int64_t n : n_values) {
      const std::int64_t med = phylodist::median(n);
      const double plain = phylodist::median_asymptotic(n, false);
      record.add_row({std::to_string(n), std::to_string(med), format_double(plain),
                      format_double(phylodist::median_asymptotic(n, true)),
                      format_double(static_cast<double>(med) / plain)});
    }
  } else {
    const BigRatio p = parse_probability(p_text);
    record.columns = {"n", "p", "percentile", "asymptote", "ratio"};
    for (const std::int64_t n : n_values) {
      const std::int64_t x_p = phylodist::percentile(n, p);
      const double asymptote = phylodist::percentile_asymptotic(n, p.to_double());
      record.add_row({std::to_string(n), p.to_string(), std::to_string(x_p),
                      format_double(asymptote),
                      format_double(static_cast<double>(x_p) / asymptote)});
    }
  }
  emit(record, common.format, common.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact distribution, median, percentiles and moments of the distance "
      "between two leaves in a uniform fully resolved unrooted tree"};
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  bool asymptotics = false;
  std::string p_text;
  std::string newick_path;
  std::vector<std::int64_t> n_values;
  phylodist::selfcheck::VerifyOptions verify_options;
  verify_options.threads =
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  CommonOptions common;

  CLI::App* dist = app.add_subcommand("dist", "Exact distance distribution");
  dist->add_option("n", n, "Number of leaves")->required();
  add_common_flags(*dist, common);

  CLI::App* median_cmd = app.add_subcommand("median", "Exact median");
  median_cmd->add_option("n", n, "Number of leaves")->required();
  median_cmd->add_flag("--asymptotics", asymptotics,
                       "Append the limit and refined approximations");
  add_common_flags(*median_cmd, common);

  CLI::App* percentile_cmd =
      app.add_subcommand("percentile", "Exact percentile for a rational level");
  percentile_cmd->add_option("n", n, "Number of leaves")->required();
  percentile_cmd->add_option("p", p_text, "Percentile level as num/den")->required();
  add_common_flags(*percentile_cmd, common);

  CLI::App* stats = app.add_subcommand("stats", "Exact mean and variance");
  stats->add_option("n", n, "Number of leaves")->required();
  add_common_flags(*stats, common);

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-validate every closed form; exit 2 on any mismatch");
  verify->add_option("--max-n-enum", verify_options.max_n_enum,
                     "Enumeration sweep upper bound")
      ->capture_default_str();
  verify->add_option("--max-n-formula", verify_options.max_n_formula,
                     "Closed-form sweep upper bound")
      ->capture_default_str();
  verify->add_option("--max-n-series", verify_options.max_n_series,
                     "Generating-function sweep upper bound")
      ->capture_default_str();
  verify->add_option("--enum-bound", verify_options.enum_bound,
                     "Hard refusal bound for exhaustive enumeration")
      ->capture_default_str();
  verify->add_option("--threads", verify_options.threads,
                     "Worker threads for the enumeration sweep")
      ->capture_default_str();
  add_common_flags(*verify, common);

  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo histogram and its distance to the exact CDF");
  sample->add_option("n", n, "Number of leaves")->required();
  sample->add_option("samples", samples, "Number of trees to draw")->required();
  sample->add_option("--seed", seed, "Generator seed")->capture_default_str();
  sample->add_option("--emit-newick", newick_path,
                     "Also write each sampled tree to this file, one Newick "
                     "string per line");
  add_common_flags(*sample, common);

  CLI::App* asympt = app.add_subcommand(
      "asympt", "Convergence table of exact values against the asymptotes");
  asympt->add_option("n", n_values, "Leaf counts to tabulate")->required();
  asympt->add_option("--p", p_text,
                     "Tabulate this percentile (num/den) instead of the median");
  add_common_flags(*asympt, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomainError;
  }

  try {
    if (dist->parsed()) {
      return run_dist(n, common);
    }
    if (median_cmd->parsed()) {
      return run_median(n, asymptotics, common);
    }
    if (percentile_cmd->parsed()) {
      return run_percentile(n, p_text, common);
    }
    if (stats->parsed()) {
      return run_stats(n, common);
    }
    if (verify->parsed()) {
      return run_verify(verify_options, common);
    }
    if (sample->parsed()) {
      return run_sample(n, samples, seed, newick_path, common);
    }
    if (asympt->parsed()) {
      return run_asympt(n_values, p_text, common);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitDomainError;
}
