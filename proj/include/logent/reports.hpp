#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "logent/common.hpp"
#include "logent/entropy_variance.hpp"
#include "logent/estimator.hpp"
#include "logent/families.hpp"
#include "logent/generalized_gamma.hpp"
#include "logent/mc.hpp"
#include "logent/rank.hpp"
#include "logent/rng.hpp"
#include "logent/transform.hpp"

// Report builders shared by the CLI and the test suite.  Every command
// produces a JSON object first; the text mode renders numbers by dumping
// the very same JSON values, so the two output modes cannot drift apart.
// Doubles are serialized in shortest round-trip form (parse(dump(x)) == x
// bit for bit), so no precision is lost on the wire.

namespace logent {

using json = nlohmann::ordered_json;

// How the K constant of H = E[ln X] + ln(V[ln X])/2 + K is chosen for the
// estimate command.
struct KPolicy {
  enum class Kind {
    explicit_k,  // user-provided constant
    gg_nu,       // K(nu) of the generalized gamma family
    band,        // no point estimate; report the [1, ln(2 pi e)/2] interval
    fallback,    // distribution-agnostic default 1.2
  };
  Kind kind = Kind::fallback;
  double value = 0.0;  // k for explicit_k, nu for gg_nu

  static KPolicy explicit_k(double k) { return {Kind::explicit_k, k}; }
  static KPolicy gg_nu(double nu) { return {Kind::gg_nu, nu}; }
  static KPolicy band() { return {Kind::band, 0.0}; }
  static KPolicy fallback() { return {Kind::fallback, 0.0}; }
};

namespace detail {

inline std::string gg_label(const GGParams& p) {
  std::ostringstream os;
  os << "GG(a=" << p.a << ", b=" << p.b << ", nu=" << p.nu << ")";
  return os.str();
}

// Renders one JSON leaf for text output; dumping the node itself keeps the
// numeric content byte-identical with JSON mode.
inline std::string leaf(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace detail

// ---------------------------------------------------------------------------
// gg: closed forms for one family member
// ---------------------------------------------------------------------------

inline json gg_report(const GGParams& p) {
  const LogMoments m = gg_log_moments(p);
  const double h = gg_entropy(p);
  const double k = gg_K(p.nu);
  json j;
  j["report"] = "gg";
  j["a"] = p.a;
  j["b"] = p.b;
  j["nu"] = p.nu;
  j["entropy_nats"] = h;
  j["entropy_bits"] = h * nats_to_bits;
  j["mean_log"] = m.mean_log;
  j["var_log"] = m.var_log;
  j["k"] = k;
  // Residual of H - (E[ln X] + ln V[ln X]/2 + K); zero up to rounding.
  j["identity_residual"] = h - entropy_from_log_moments(m, k);
  return j;
}

// ---------------------------------------------------------------------------
// estimate: data -> log-moments -> entropy
// ---------------------------------------------------------------------------

inline json estimate_report(const SampleBatch& batch, std::size_t n_skipped, const KPolicy& kp) {
  const LogMoments m = estimate_log_moments(batch);
  const EntropyBand band = estimate_entropy_banded(batch);

  json j;
  j["report"] = "estimate";
  j["n"] = batch.values.size();
  j["n_skipped"] = n_skipped;
  j["n_excluded"] = batch.n_excluded;
  j["shift"] = batch.shift;
  j["mean_log"] = m.mean_log;
  j["var_log"] = m.var_log;

  std::optional<double> k;
  switch (kp.kind) {
    case KPolicy::Kind::explicit_k:
      j["k_policy"] = "explicit";
      k = kp.value;
      break;
    case KPolicy::Kind::gg_nu:
      j["k_policy"] = "gg_nu";
      j["nu"] = kp.value;
      k = gg_K(kp.value);
      break;
    case KPolicy::Kind::band:
      j["k_policy"] = "band";
      break;
    case KPolicy::Kind::fallback:
      j["k_policy"] = "default";
      k = k_default;
      break;
  }
  if (k) {
    j["k_used"] = *k;
    const double h = entropy_from_log_moments(m, *k);
    j["entropy_nats"] = h;
    j["entropy_bits"] = h * nats_to_bits;
  } else {
    j["k_used"] = nullptr;
    j["entropy_nats"] = nullptr;
    j["entropy_bits"] = nullptr;
  }
  j["band_low"] = band.low;
  j["band_high"] = band.high;
  return j;
}

// ---------------------------------------------------------------------------
// hv: entropy-variance transform calculator
// ---------------------------------------------------------------------------

// Analytic base: Exp(1), whose cross moments are exact.
inline json hv_report_exponential(PositiveReal b, std::optional<double> a) {
  const CrossMoments cm = exponential_cross_moments();
  json j;
  j["report"] = "hv";
  j["method"] = "analytic";
  j["base"] = "Exp(1)";
  j["transform_a"] = a ? *a : 1.0;
  j["transform_b"] = static_cast<double>(b);
  j["hv_base"] = cm.hv;
  j["hv_transformed"] = hv_after_transform(cm, b);
  j["note"] = "hv is invariant under the multiplier a";
  return j;
}

// Monte Carlo base: cross moments of GG(a0, b0, nu) are estimated from a
// seeded sample, pushed through the transform law, and compared against a
// directly sampled HV of the transformed member (independent substream).
inline json hv_report_gg_mc(const GGParams& base, PositiveReal b, std::optional<double> a,
                            std::size_t n, std::uint64_t seed) {
  const std::vector<double> xs = gg_sample(base, n, seed);
  const auto [info, cm] =
      hv_from_sample([&base](double x) { return gg_log_pdf(base, x); },
                     std::span<const double>(xs));

  const TransformParams t{a ? *a : 1.0, b};
  const GGParams transformed = apply_transform(base, t);
  const McEstimate direct = mc_hv(transformed, n, substream_seed(seed, 1));

  json j;
  j["report"] = "hv";
  j["method"] = "mc";
  j["base"] = detail::gg_label(base);
  j["base_a"] = base.a;
  j["base_b"] = base.b;
  j["base_nu"] = base.nu;
  j["transform_a"] = t.a;
  j["transform_b"] = t.b;
  j["n"] = n;
  j["seed"] = seed;
  j["hv_base"] = cm.hv;
  j["hv_transformed"] = hv_after_transform(cm, b);
  j["transformed_params"] = detail::gg_label(transformed);
  j["hv_transformed_direct_mc"] = direct.value;
  j["hv_transformed_direct_se"] = direct.std_error;
  j["note"] = "hv is invariant under the multiplier a";
  return j;
}

// ---------------------------------------------------------------------------
// table1: the published K reference table, recomputed
// ---------------------------------------------------------------------------

inline json table1_report() {
  json rows = json::array();
  for (const KReferenceRow& row : k_reference_table) {
    const double psi = digamma(row.nu);
    const double computed_minus_nu_psi = -row.nu * psi;
    const double computed_ln_gamma = ln_gamma(row.nu);
    const double computed_tail = -0.5 * std::log(trigamma(row.nu));
    const double computed_k = gg_K(row.nu);

    json r;
    r["nu"] = row.nu;
    r["families"] = row.families;
    r["computed_minus_nu_psi"] = computed_minus_nu_psi;
    r["computed_ln_gamma"] = computed_ln_gamma;
    r["computed_plus_nu"] = row.nu;  // printed only as part of the total in the source table
    r["computed_neg_half_ln_trigamma"] = computed_tail;
    r["computed_k"] = computed_k;
    r["published_minus_nu_psi"] = row.minus_nu_psi;
    r["published_ln_gamma"] = row.ln_gamma;
    r["published_neg_half_ln_trigamma"] = row.neg_half_ln_trigamma;
    r["published_k"] = row.k;
    r["delta_minus_nu_psi"] = computed_minus_nu_psi - row.minus_nu_psi;
    r["delta_ln_gamma"] = computed_ln_gamma - row.ln_gamma;
    r["delta_neg_half_ln_trigamma"] = computed_tail - row.neg_half_ln_trigamma;
    r["delta_k"] = computed_k - row.k;

    json flagged = json::array();
    for (const char* col : {"ln_gamma", "neg_half_ln_trigamma"})
      if (k_reference_cell_misprint(row.nu, col)) flagged.push_back(col);
    r["flagged_cells"] = flagged;
    rows.push_back(std::move(r));
  }
  json j;
  j["report"] = "table1";
  j["note"] =
      "flagged cells carry +/-2.0 transcription offsets in the published table "
      "that cancel in the row's K total";
  j["rows"] = std::move(rows);
  return j;
}

// ---------------------------------------------------------------------------
// verify: the Monte Carlo / analytic verification matrix
// ---------------------------------------------------------------------------

namespace detail {

inline json verify_item_mc(const std::string& target, double closed, const McEstimate& est) {
  json j;
  j["target"] = target;
  j["method"] = "mc";
  j["closed_form"] = closed;
  j["mc_value"] = est.value;
  j["std_error"] = est.std_error;
  j["n"] = est.n;
  j["seed"] = est.seed;
  const double dist = est.std_error > 0.0
                          ? std::fabs(est.value - closed) / est.std_error
                          : std::numeric_limits<double>::infinity();
  j["sigma_distance"] = dist;
  j["pass"] = dist <= 4.0;
  return j;
}

inline json verify_item_analytic(const std::string& target, double closed, double value,
                                 double tolerance) {
  json j;
  j["target"] = target;
  j["method"] = "analytic";
  j["closed_form"] = closed;
  j["mc_value"] = value;
  j["std_error"] = 0.0;
  j["n"] = 0;
  j["seed"] = 0;
  j["tolerance"] = tolerance;
  j["pass"] = std::fabs(value - closed) <= tolerance;
  return j;
}

}  // namespace detail

// Runs the whole verification matrix: closed-form entropies, log-moments
// and K against Monte Carlo; the entropy-variance transform law; the K = 1
// families; and the half-normal reconstruction, including the explicit
// rejection of the published 0.735775 entropy value.  Every Monte Carlo
// item runs on its own substream-derived seed, so items are independent
// and individually reproducible.
inline json verify_report(std::size_t n, std::uint64_t seed) {
  constexpr double sqrt2 = 1.4142135623730950488;
  const GGParams mc_params[] = {{1.0, 1.0, 1.0}, {sqrt2, 2.0, 0.5}, {2.0, 1.0, 2.0}, {2.0, 2.0, 3.0}};

  json items = json::array();

  // Closed forms vs sampling, family by family.
  for (int i = 0; i < 4; ++i) {
    const GGParams& p = mc_params[i];
    const std::string label = detail::gg_label(p);
    items.push_back(detail::verify_item_mc(
        "entropy " + label, gg_entropy(p), mc_entropy(p, n, substream_seed(seed, 10 + i))));
    const auto [mean_est, var_est] = mc_log_moments(p, n, substream_seed(seed, 20 + i));
    const LogMoments m = gg_log_moments(p);
    items.push_back(detail::verify_item_mc("mean_log " + label, m.mean_log, mean_est));
    items.push_back(detail::verify_item_mc("var_log " + label, m.var_log, var_est));
    items.push_back(detail::verify_item_mc("K " + label, gg_K(p.nu),
                                           mc_K(p, n, substream_seed(seed, 30 + i))));
  }

  // Entropy variance: Exp(1) has HV = 1; squaring it gives 3 + pi^2/6 by
  // the transform law, checked against a direct sample of the transformed
  // member GG(1, 1/2, 1); scaling by 3 changes nothing.
  const GGParams exp1{1.0, 1.0, 1.0};
  items.push_back(detail::verify_item_mc("hv Exp(1)", 1.0,
                                         mc_hv(exp1, n, substream_seed(seed, 40))));
  const double hv_squared = hv_after_transform(exponential_cross_moments(), 2.0);
  items.push_back(detail::verify_item_mc("hv Exp(1)^2 = GG(a=1, b=0.5, nu=1)", hv_squared,
                                         mc_hv({1.0, 0.5, 1.0}, n, substream_seed(seed, 41))));
  {
    const McEstimate hv_x = mc_hv(exp1, n, substream_seed(seed, 42));
    const McEstimate hv_3x = mc_hv({3.0, 1.0, 1.0}, n, substream_seed(seed, 43));
    json j;
    j["target"] = "hv scale invariance: HV[3X] - HV[X], X ~ Exp(1)";
    j["method"] = "mc";
    j["closed_form"] = 0.0;
    j["mc_value"] = hv_3x.value - hv_x.value;
    j["std_error"] = std::sqrt(hv_x.std_error * hv_x.std_error + hv_3x.std_error * hv_3x.std_error);
    j["n"] = n;
    j["seed"] = seed;
    const double dist = std::fabs(j["mc_value"].get<double>()) / j["std_error"].get<double>();
    j["sigma_distance"] = dist;
    j["pass"] = dist <= 4.0;
    items.push_back(std::move(j));
  }
  items.push_back(detail::verify_item_analytic(
      "hv Uniform(0,1) (self-information is constant)", 0.0, 0.0, 0.0));

  // K = 1 for Uniform and Pareto, from analytic moments.
  items.push_back(detail::verify_item_analytic("K Uniform(0,1)", 1.0,
                                               k_from_moments(uniform01_moments()), 1e-9));
  for (double alpha : {1.0, 2.0, 5.0})
    for (double xm : {1.0, 3.0}) {
      std::ostringstream os;
      os << "K Pareto(alpha=" << alpha << ", x_min=" << xm << ")";
      items.push_back(detail::verify_item_analytic(os.str(), 1.0,
                                                   k_from_moments(pareto_moments(alpha, xm)),
                                                   1e-9));
    }

  // Half-normal: the closed form must be accepted, the published 0.735775
  // must be rejected, and adding ln 2 must reconstruct the standard normal.
  const GGParams half_normal = gg_special_case(SpecialCase::half_normal);
  const double h_half = gg_entropy(half_normal);
  const McEstimate h_half_mc = mc_entropy(half_normal, n, substream_seed(seed, 50));
  items.push_back(detail::verify_item_mc("entropy half-normal (closed form)", h_half, h_half_mc));
  {
    constexpr double published = 0.735775;
    json j = detail::verify_item_mc("entropy half-normal (published 0.735775)", published,
                                    h_half_mc);
    // This item passes when the published value is *rejected*: it sits
    // about 0.01 nats above the closed form, far outside 4 standard errors
    // at any serious n.
    const bool rejected = j["sigma_distance"].get<double>() > 4.0;
    j["pass"] = rejected;
    j["flag"] = rejected
                    ? "published value is inconsistent with the closed form (rejected at > 4 sigma)"
                    : "published value could not be rejected at this sample size";
    items.push_back(std::move(j));
  }
  items.push_back(detail::verify_item_analytic(
      "standard normal reconstruction: H[half-normal] + ln 2 vs ln(2 pi e)/2", k_lognormal,
      h_half + std::numbers::ln2, 1e-2));

  std::size_t n_pass = 0;
  for (const json& item : items) n_pass += item.at("pass").get<bool>() ? 1 : 0;

  json j;
  j["report"] = "verify";
  j["n"] = n;
  j["seed"] = seed;
  j["n_items"] = items.size();
  j["n_pass"] = n_pass;
  j["n_fail"] = items.size() - n_pass;
  j["pass"] = n_pass == items.size();
  j["items"] = std::move(items);
  return j;
}

// ---------------------------------------------------------------------------
// rank: prefix-split dilation report
// ---------------------------------------------------------------------------

inline json rank_report(std::span<const double> probs, std::size_t m) {
  const RankedDistribution d = from_probs(probs);
  const RankDilationReport r = rank_dilation_report(d, m);

  json j;
  j["report"] = "rank";
  j["m"] = r.m;
  j["probs_sorted"] = d.probs;
  j["input_ranks"] = d.input_ranks;
  j["size_before"] = r.size_before;
  j["size_after"] = r.size_after;
  j["entropy_before"] = r.before.entropy;
  j["entropy_before_bits"] = r.before.entropy * nats_to_bits;
  j["hv_before"] = r.before.entropy_variance;
  j["entropy_after"] = r.after.entropy;
  j["entropy_after_bits"] = r.after.entropy * nats_to_bits;
  j["hv_after"] = r.after.entropy_variance;
  j["predicted_delta_entropy"] = r.predicted_delta_entropy;
  j["predicted_delta_hv"] = r.predicted_delta_hv;
  j["exact_delta_entropy"] = r.exact_delta_entropy;
  j["exact_delta_hv"] = r.exact_delta_hv;
  j["prediction_gap_entropy"] = r.exact_delta_entropy - r.predicted_delta_entropy;
  j["prediction_gap_hv"] = r.exact_delta_hv - r.predicted_delta_hv;
  return j;
}

// ---------------------------------------------------------------------------
// text rendering
// ---------------------------------------------------------------------------

namespace detail {

// "key = value" lines for every scalar field, in report order; arrays of
// scalars are rendered inline.  Nested tables (table1 rows, verify items)
// get dedicated layouts below.
inline void render_scalars(std::ostringstream& os, const json& j,
                           std::initializer_list<const char*> skip = {}) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool skipped = false;
    for (const char* s : skip)
      if (it.key() == s) skipped = true;
    if (skipped || it.key() == "report") continue;
    if (it->is_array()) {
      os << "  " << it.key() << " = [";
      for (std::size_t i = 0; i < it->size(); ++i) os << (i ? ", " : "") << leaf((*it)[i]);
      os << "]\n";
    } else if (!it->is_structured()) {
      os << "  " << it.key() << " = " << leaf(*it) << "\n";
    }
  }
}

}  // namespace detail

inline std::string render_text(const json& j) {
  std::ostringstream os;
  const std::string kind = j.at("report").get<std::string>();

  if (kind == "table1") {
    os << "K reference table, recomputed (columns: -nu*psi, ln Gamma, +nu, "
          "-ln(psi')/2, K)\n";
    os << j.at("note").get<std::string>() << "\n";
    for (const json& r : j.at("rows")) {
      os << "\n  nu = " << detail::leaf(r.at("nu"));
      if (!r.at("families").get<std::string>().empty())
        os << "  (" << r.at("families").get<std::string>() << ")";
      os << "\n";
      os << "    computed : " << detail::leaf(r.at("computed_minus_nu_psi")) << "  "
         << detail::leaf(r.at("computed_ln_gamma")) << "  " << detail::leaf(r.at("computed_plus_nu"))
         << "  " << detail::leaf(r.at("computed_neg_half_ln_trigamma")) << "  K = "
         << detail::leaf(r.at("computed_k")) << "\n";
      os << "    published: " << detail::leaf(r.at("published_minus_nu_psi")) << "  "
         << detail::leaf(r.at("published_ln_gamma")) << "  (+nu folded into total)  "
         << detail::leaf(r.at("published_neg_half_ln_trigamma")) << "  K = "
         << detail::leaf(r.at("published_k")) << "\n";
      os << "    delta    : " << detail::leaf(r.at("delta_minus_nu_psi")) << "  "
         << detail::leaf(r.at("delta_ln_gamma")) << "  -  "
         << detail::leaf(r.at("delta_neg_half_ln_trigamma")) << "  K: "
         << detail::leaf(r.at("delta_k")) << "\n";
      if (!r.at("flagged_cells").empty()) {
        os << "    flagged  : ";
        for (std::size_t i = 0; i < r.at("flagged_cells").size(); ++i)
          os << (i ? ", " : "") << r.at("flagged_cells")[i].get<std::string>();
        os << "\n";
      }
    }
    return os.str();
  }

  if (kind == "verify") {
    os << "verification matrix: n = " << detail::leaf(j.at("n")) << ", seed = "
       << detail::leaf(j.at("seed")) << "\n\n";
    for (const json& item : j.at("items")) {
      os << "  [" << (item.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
         << item.at("target").get<std::string>() << "\n";
      os << "         closed_form = " << detail::leaf(item.at("closed_form"))
         << ", value = " << detail::leaf(item.at("mc_value"));
      if (item.at("method").get<std::string>() == "mc") {
        os << ", std_error = " << detail::leaf(item.at("std_error")) << ", sigma = "
           << detail::leaf(item.at("sigma_distance")) << ", n = " << detail::leaf(item.at("n"))
           << ", seed = " << detail::leaf(item.at("seed"));
      } else {
        os << ", tolerance = " << detail::leaf(item.at("tolerance"));
      }
      os << "\n";
      if (item.contains("flag"))
        os << "         flag: " << item.at("flag").get<std::string>() << "\n";
    }
    os << "\n  " << detail::leaf(j.at("n_pass")) << "/" << detail::leaf(j.at("n_items"))
       << " items passed\n";
    return os.str();
  }

  if (kind == "gg")
    os << "generalized gamma closed forms\n";
  else if (kind == "estimate")
    os << "entropy estimate from log-moments\n";
  else if (kind == "hv")
    os << "entropy variance under Y = a X^b\n";
  else if (kind == "rank")
    os << "rank distribution prefix-split report\n";
  detail::render_scalars(os, j);
  return os.str();
}

}  // namespace logent
