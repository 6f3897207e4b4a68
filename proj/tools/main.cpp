// logent: differential entropy and entropy variance from the statistics of
// ln X.
//
// Verbs:
//   estimate  entropy of a data file via H = E[ln X] + ln(V[ln X])/2 + K
//   gg        closed forms for one generalized gamma member
//   hv        entropy variance under the transform Y = a X^b
//   table1    recompute the published K reference table
//   verify    Monte Carlo verification matrix over all closed forms
//   rank      discrete rank distributions and the prefix-split construction
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logent/logent.hpp"

namespace {

void emit(const logent::json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << logent::render_text(report);
}

logent::PreprocessPolicy parse_policy(const std::string& name) {
  if (name == "reject") return logent::PreprocessPolicy::reject;
  if (name == "shift-min-exclude") return logent::PreprocessPolicy::shift_min_exclude;
  if (name == "shift-epsilon") return logent::PreprocessPolicy::shift_epsilon;
  throw CLI::ValidationError("--policy", "unknown policy: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy and entropy variance via the log-variate identity "
               "H = E[ln X] + ln(V[ln X])/2 + K"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // ---- estimate ----
  auto* est = app.add_subcommand("estimate", "estimate entropy from a data file");
  std::string est_input, est_column, est_policy = "reject";
  double est_k = 0.0, est_nu = 0.0;
  bool est_band = false, est_lenient = false;
  est->add_option("--input", est_input, "CSV or JSONL data file")->required();
  est->add_option("--column", est_column, "column name or 0-based index");
  auto* est_k_opt = est->add_option("--k", est_k, "explicit K constant");
  auto* est_nu_opt =
      est->add_option("--nu", est_nu, "use the generalized gamma K(nu) for this shape");
  auto* est_band_opt = est->add_flag("--band", est_band,
                                     "no point estimate; report the K in [1, ln(2 pi e)/2] band");
  est_k_opt->excludes(est_nu_opt)->excludes(est_band_opt);
  est_nu_opt->excludes(est_band_opt);
  est->add_option("--policy", est_policy,
                  "non-positive data handling: reject | shift-min-exclude | shift-epsilon")
      ->capture_default_str();
  est->add_flag("--lenient", est_lenient, "skip unparsable rows instead of failing");

  // ---- gg ----
  auto* gg = app.add_subcommand("gg", "closed forms for a generalized gamma member");
  double gg_a = 1.0, gg_b = 1.0, gg_nu = 1.0;
  gg->add_option("--a", gg_a, "scale a > 0")->capture_default_str();
  gg->add_option("--b", gg_b, "power b > 0")->capture_default_str();
  gg->add_option("--nu", gg_nu, "shape nu > 0")->required();

  // ---- hv ----
  auto* hv = app.add_subcommand("hv", "entropy variance of Y = a X^b");
  double hv_a = 1.0, hv_b = 1.0, hv_nu = 0.0;
  std::size_t hv_n = 1000000;
  std::uint64_t hv_seed = 0;
  hv->add_option("--b", hv_b, "transform exponent b > 0")->required();
  hv->add_option("--a", hv_a, "transform multiplier a > 0 (never changes hv)")
      ->capture_default_str();
  auto* hv_nu_opt = hv->add_option(
      "--nu", hv_nu,
      "base X ~ GG(1,1,nu) with Monte Carlo cross moments; default base is Exp(1), analytic");
  hv->add_option("--n", hv_n, "Monte Carlo sample size")->capture_default_str();
  hv->add_option("--seed", hv_seed, "Monte Carlo master seed")->capture_default_str();

  // ---- table1 ----
  app.add_subcommand("table1", "recompute the published K reference table");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Monte Carlo verification of every closed form");
  std::size_t verify_n = 1000000;
  std::uint64_t verify_seed = 0;
  verify->add_option("--n", verify_n, "draws per item")->capture_default_str();
  verify->add_option("--seed", verify_seed, "master seed (items use derived substreams)")
      ->capture_default_str();

  // ---- rank ----
  auto* rank = app.add_subcommand("rank", "rank distribution and prefix-split report");
  std::vector<double> rank_probs;
  std::string rank_input, rank_column;
  std::size_t rank_split = 4;
  bool rank_lenient = false;
  auto* rank_probs_opt =
      rank->add_option("--probs", rank_probs, "inline probabilities, e.g. 0.4,0.2,0.1,0.3")
          ->delimiter(',');
  auto* rank_input_opt = rank->add_option("--input", rank_input, "file of probabilities");
  rank_probs_opt->excludes(rank_input_opt);
  rank->add_option("--column", rank_column, "column name or 0-based index for --input");
  rank->add_option("--split", rank_split, "prefix-split factor m >= 2")->capture_default_str();
  rank->add_flag("--lenient", rank_lenient, "skip unparsable rows instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0; every parse problem is a usage error
  }

  try {
    if (*est) {
      logent::IngestOptions opt;
      if (!est_column.empty()) opt.column = est_column;
      opt.lenient = est_lenient;
      const logent::IngestResult data = logent::ingest_file(est_input, opt);
      const logent::SampleBatch batch = logent::preprocess(data.values, parse_policy(est_policy));
      logent::KPolicy kp = logent::KPolicy::fallback();
      if (est_k_opt->count())
        kp = logent::KPolicy::explicit_k(est_k);
      else if (est_nu_opt->count())
        kp = logent::KPolicy::gg_nu(est_nu);
      else if (est_band_opt->count())
        kp = logent::KPolicy::band();
      emit(logent::estimate_report(batch, data.n_skipped, kp), format);
      return 0;
    }
    if (*gg) {
      emit(logent::gg_report({gg_a, gg_b, gg_nu}), format);
      return 0;
    }
    if (*hv) {
      if (hv_nu_opt->count())
        emit(logent::hv_report_gg_mc({1.0, 1.0, hv_nu}, hv_b, hv_a, hv_n, hv_seed), format);
      else
        emit(logent::hv_report_exponential(hv_b, hv_a), format);
      return 0;
    }
    if (app.get_subcommand("table1")->parsed()) {
      emit(logent::table1_report(), format);
      return 0;
    }
    if (*verify) {
      const logent::json report = logent::verify_report(verify_n, verify_seed);
      emit(report, format);
      return report.at("pass").get<bool>() ? 0 : 3;
    }
    if (*rank) {
      std::vector<double> probs = rank_probs;
      if (!rank_input.empty()) {
        logent::IngestOptions opt;
        if (!rank_column.empty()) opt.column = rank_column;
        opt.lenient = rank_lenient;
        probs = logent::ingest_file(rank_input, opt).values;
      }
      if (probs.empty()) throw logent::data_error("no probabilities given (--probs or --input)");
      if (rank_split < 2) throw CLI::ValidationError("--split", "split factor must be >= 2");
      emit(logent::rank_report(probs, rank_split), format);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const logent::data_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // Domain errors from parameter validation (nu <= 0, b <= 0, ...) are
    // usage errors: the arguments never made sense.
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
