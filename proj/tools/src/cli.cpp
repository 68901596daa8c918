// Copyright 2026 The primelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "primelab/chebyshev.hpp"
#include "primelab/conversions.hpp"
#include "primelab/counting.hpp"
#include "primelab/error.hpp"
#include "primelab/errorfit.hpp"
#include "primelab/explicit_formula.hpp"
#include "primelab/format.hpp"
#include "primelab/grid.hpp"
#include "primelab/logint.hpp"
#include "primelab/mertens.hpp"
#include "primelab/shortint.hpp"
#include "primelab/sieve.hpp"

#ifndef PRIMELAB_VERSION_STRING
#define PRIMELAB_VERSION_STRING "0.0.0"
#endif
#ifndef PRIMELAB_DEFAULT_ZEROS
#define PRIMELAB_DEFAULT_ZEROS ""
#endif

namespace primelab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kIdentityTolerance = 1e-9;
constexpr double kLiTolerance = 1e-10;
constexpr double kZeroCountTolerance = 2.0;
constexpr double kVarianceLow = 1.0 / 3.0;
constexpr double kVarianceHigh = 3.0;
constexpr double kMeanBand = 0.1;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct Output {
  std::optional<Json> scalar;
  Json summary = Json::object();
  std::optional<Table> table;
  std::string failure;  // non-empty: a --check assertion failed
};

using Handler = std::function<Output(const RunConfig&)>;

// A parameter the chosen operation needs but the command line lacked.
class MissingParameter : public Error {
 public:
  using Error::Error;
};

Exec exec_of(const RunConfig& c) { return Exec{c.workers}; }

bool given(const RunConfig& c, const std::string& name) {
  return std::any_of(c.echo.begin(), c.echo.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

void need(const RunConfig& c, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (!given(c, name)) {
      throw MissingParameter(c.subcommand + " " + c.op + ": --" + name +
                             " is required");
    }
  }
}

std::vector<std::uint64_t> grid_of(const RunConfig& c, std::uint64_t lo,
                                   std::uint64_t hi, std::uint64_t points) {
  return log_grid(given(c, "lo") ? c.lo : lo, given(c, "hi") ? c.hi : hi,
                  given(c, "points") ? c.points : points);
}

Json num(double v) { return Json(v); }

Json array_of(std::span<const std::uint64_t> v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

// ---- pi ----------------------------------------------------------------

Output pi_count(const RunConfig& c) {
  need(c, {"x"});
  return {Json(pi(c.x, exec_of(c))), {}, {}, {}};
}

Output pi_legendre_op(const RunConfig& c) {
  need(c, {"x"});
  return {Json(pi_legendre(c.x)), {}, {}, {}};
}

Output pi_interval_op(const RunConfig& c) {
  need(c, {"x", "y"});
  return {Json(pi_interval(c.x, c.y)), {}, {}, {}};
}

Output pi_ap_op(const RunConfig& c) {
  need(c, {"x", "q", "a"});
  return {Json(pi_ap(c.x, c.q, c.a)), {}, {}, {}};
}

Output pi_primes(const RunConfig& c) {
  need(c, {"lo", "hi"});
  Output o;
  Table t{{"p"}, {}};
  for (auto p : primes_in(c.lo, c.hi)) t.rows.push_back({Json(p)});
  o.summary["count"] = t.rows.size();
  o.table = std::move(t);
  return o;
}

Output pi_is_prime(const RunConfig& c) {
  need(c, {"n"});
  return {Json(is_prime(c.n)), {}, {}, {}};
}

// ---- theta / psi -------------------------------------------------------

Output theta_value(const RunConfig& c) {
  need(c, {"x"});
  return {num(theta(c.x, exec_of(c))), {}, {}, {}};
}

Output theta_ap_op(const RunConfig& c) {
  need(c, {"x", "q", "a"});
  return {num(theta_ap(c.x, c.q, c.a)), {}, {}, {}};
}

Output theta_profile(const RunConfig& c) {
  const auto grid = grid_of(c, 2, 1000000, 25);
  const auto prof = chebyshev_profile(grid, exec_of(c));
  Output o;
  Table t{{"x", "theta", "psi", "theta_minus_x", "psi_minus_x"}, {}};
  for (const auto& s : prof.samples) {
    const double x = static_cast<double>(s.x);
    t.rows.push_back({Json(s.x), num(s.theta), num(s.psi), num(s.theta - x),
                      num(s.psi - x)});
  }
  o.table = std::move(t);
  return o;
}

Output psi_value(const RunConfig& c) {
  need(c, {"x"});
  return {num(psi(c.x, exec_of(c))), {}, {}, {}};
}

Output psi_minus_theta_op(const RunConfig& c) {
  need(c, {"x"});
  return {num(psi_minus_theta(c.x)), {}, {}, {}};
}

Output psi_lambda(const RunConfig& c) {
  need(c, {"lo", "hi"});
  const auto table = mangoldt_range(c.lo, c.hi);
  Output o;
  Table t{{"n", "lambda"}, {}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    t.rows.push_back({Json(c.lo + i), num(table[i])});
  }
  o.table = std::move(t);
  return o;
}

Json coverage_json(const WindowCoverage& w) {
  Json j;
  j["factor"] = w.factor;
  j["windows"] = w.windows;
  j["covered"] = w.covered;
  j["status"] = to_string(w.status);
  j["uncovered"] = array_of(w.uncovered);
  return j;
}

Output psi_sign_changes(const RunConfig& c) {
  need(c, {"lo", "hi"});
  const auto r = sign_change_scan(c.lo, c.hi, c.step);
  Output o;
  o.summary["changes"] = r.changes.size();
  o.summary["sharp"] = coverage_json(r.sharp);
  o.summary["weak"] = coverage_json(r.weak);
  Table t{{"a", "b", "crossing"}, {}};
  for (const auto& s : r.changes) {
    t.rows.push_back({Json(s.a), Json(s.b), Json(s.crossing)});
  }
  o.table = std::move(t);
  return o;
}

// ---- mertens -----------------------------------------------------------

Output mertens_value(const RunConfig& c) {
  need(c, {"x"});
  return {Json(mertens(c.x, exec_of(c))), {}, {}, {}};
}

Output mertens_squarefree(const RunConfig& c) {
  need(c, {"x"});
  return {Json(squarefree_count(c.x, exec_of(c))), {}, {}, {}};
}

Output mertens_mobius(const RunConfig& c) {
  need(c, {"lo", "hi"});
  const auto table = mobius_range(c.lo, c.hi);
  Output o;
  Table t{{"n", "mu"}, {}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    t.rows.push_back({Json(c.lo + i), Json(static_cast<int>(table[i]))});
  }
  o.table = std::move(t);
  return o;
}

Output mertens_envelope_op(const RunConfig& c) {
  const auto grid = grid_of(c, 2, 100000000, 200);
  const auto env = mertens_envelope(grid, exec_of(c));
  Output o;
  o.summary["all_within"] = env.all_within;
  o.summary["min_normalized"] = env.min_normalized;
  o.summary["max_normalized"] = env.max_normalized;
  Table t{{"x", "M", "envelope_ratio", "normalized"}, {}};
  for (const auto& r : env.rows) {
    t.rows.push_back(
        {Json(r.x), Json(r.m), num(r.envelope_ratio), num(r.normalized)});
  }
  o.table = std::move(t);
  if (c.check && !env.all_within) o.failure = "|M(x)| exceeds x^(7/12) on the grid";
  return o;
}

Output mertens_scan_op(const RunConfig& c) {
  need(c, {"x"});
  const auto s = mertens_scan(c.x, exec_of(c));
  Output o;
  o.summary["limit"] = s.limit;
  o.summary["violations"] = s.violations;
  o.summary["first_violation"] = s.first_violation;
  o.summary["worst_ratio"] = s.worst_ratio;
  o.summary["worst_x"] = s.worst_x;
  o.summary["min_normalized"] = s.min_normalized;
  o.summary["min_x"] = s.min_x;
  o.summary["max_normalized"] = s.max_normalized;
  o.summary["max_x"] = s.max_x;
  o.summary["final_M"] = s.final_m;
  if (c.check && !s.all_within()) o.failure = "|M(x)| exceeds x^(7/12)";
  return o;
}

Output mertens_inverse_zeta(const RunConfig& c) {
  need(c, {"n"});
  const double value = inverse_zeta_partial(c.n, c.s, exec_of(c));
  Output o;
  o.summary["N"] = c.n;
  o.summary["s"] = c.s;
  o.summary["partial_sum"] = value;
  if (c.s == 2.0) {
    const double target = 6.0 / (std::numbers::pi * std::numbers::pi);
    o.summary["six_over_pi_squared"] = target;
    o.summary["difference"] = value - target;
  }
  return o;
}

// ---- li ----------------------------------------------------------------

Output li_value(const RunConfig& c) {
  need(c, {"x"});
  return {num(li(c.real_x)), {}, {}, {}};
}

Output li_compare_op(const RunConfig& c) {
  need(c, {"x"});
  const auto r = li_compare(c.real_x);
  Output o;
  o.summary["x"] = c.real_x;
  o.summary["series"] = r.series;
  o.summary["quadrature"] = r.quadrature;
  o.summary["relative_difference"] = r.relative_difference;
  if (c.check && !(r.relative_difference <= kLiTolerance)) {
    o.failure = "li routes differ by more than 1e-10 relative";
  }
  return o;
}

Output li_ei(const RunConfig& c) {
  need(c, {"re"});
  const auto v = ei(ComplexValue(c.re, c.im));
  Output o;
  o.summary["re"] = v.real();
  o.summary["im"] = v.imag();
  return o;
}

Output li_envelope_integral(const RunConfig& c) {
  need(c, {"nu", "c", "x"});
  const auto r = integral_envelope_check(c.nu, c.c, c.real_x);
  Output o;
  o.summary["integral"] = r.integral;
  o.summary["bound_ratio"] = r.bound_ratio;
  return o;
}

// ---- convert -----------------------------------------------------------

Json identity_json(const IdentityCheck& id) {
  Json j;
  j["lhs"] = id.lhs;
  j["rhs"] = id.rhs;
  j["discrepancy"] = id.discrepancy;
  return j;
}

Output convert_pi_from_theta(const RunConfig& c) {
  need(c, {"x"});
  PiFromThetaMode mode = PiFromThetaMode::kExactSum;
  if (c.mode == "piecewise-integral") {
    mode = PiFromThetaMode::kPiecewiseIntegral;
  } else if (!c.mode.empty() && c.mode != "exact-sum") {
    throw RangeError("convert: --mode must be exact-sum or piecewise-integral");
  }
  return {num(pi_from_theta(c.x, mode)), {}, {}, {}};
}

Output convert_theta_from_pi(const RunConfig& c) {
  need(c, {"x"});
  return {num(theta_from_pi(c.x)), {}, {}, {}};
}

Output convert_mangoldt(const RunConfig& c) {
  need(c, {"x"});
  Output o;
  o.summary = identity_json(mangoldt_log_sum(c.x));
  return o;
}

Output convert_reciprocal(const RunConfig& c) {
  need(c, {"x"});
  Output o;
  o.summary = identity_json(reciprocal_prime_sum(c.x));
  return o;
}

Output convert_all(const RunConfig& c) {
  need(c, {"x"});
  const auto r = conversion_identities(c.x);
  Output o;
  o.summary["x"] = r.x;
  o.summary["max_discrepancy"] = r.max_discrepancy;
  o.summary["pi_exact_sum"] = identity_json(r.pi_exact_sum);
  o.summary["pi_piecewise"] = identity_json(r.pi_piecewise);
  o.summary["modes_agree"] = identity_json(r.modes_agree);
  o.summary["theta_from_pi"] = identity_json(r.theta_from_pi);
  o.summary["mangoldt_log_sum"] = identity_json(r.mangoldt_log_sum);
  o.summary["reciprocal_prime_sum"] = identity_json(r.reciprocal_prime_sum);
  if (c.check && !(r.max_discrepancy <= kIdentityTolerance)) {
    o.failure = "identity discrepancy above 1e-9";
  }
  return o;
}

Output convert_progressions(const RunConfig& c) {
  need(c, {"x", "q", "a"});
  const auto r = ap_conversions(c.x, c.q, c.a);
  Output o;
  o.summary["x"] = r.x;
  o.summary["q"] = r.q;
  o.summary["a"] = r.a;
  o.summary["max_discrepancy"] = r.max_discrepancy;
  o.summary["pi_from_theta"] = identity_json(r.pi_from_theta);
  o.summary["theta_from_pi"] = identity_json(r.theta_from_pi);
  o.summary["reciprocal_sum"] = identity_json(r.reciprocal_sum);
  if (c.check && !(r.max_discrepancy <= kIdentityTolerance)) {
    o.failure = "identity discrepancy above 1e-9";
  }
  return o;
}

// ---- explicit / zeros --------------------------------------------------

ZeroList zeros_of(const RunConfig& c) {
  if (c.zeros_path.empty()) {
    throw DataError("no zero table: pass --zeros or set PRIMELAB_ZEROS");
  }
  return load_zeros(c.zeros_path);
}

Output explicit_landau(const RunConfig& c) {
  need(c, {"x", "k"});
  const auto zeros = zeros_of(c);
  return {num(psi_landau(c.real_x, zeros, c.k)), {}, {}, {}};
}

Output explicit_riemann(const RunConfig& c) {
  need(c, {"x", "terms"});
  const auto zeros = zeros_of(c);
  RiemannOptions opt;
  opt.tail_terms = !c.no_tail;
  return {num(pi_riemann(c.real_x, c.terms, zeros, c.k, opt)), {}, {}, {}};
}

Output zeros_summary(const RunConfig& c) {
  const auto zeros = zeros_of(c);
  Output o;
  o.summary["source"] = zeros.source;
  o.summary["count"] = zeros.gammas.size();
  o.summary["height"] = zeros.height;
  o.summary["first"] = zeros.gammas.front();
  o.summary["last"] = zeros.gammas.back();
  if (given(c, "T")) {
    const auto r = zero_count_check(zeros, c.t);
    o.summary["T"] = c.t;
    o.summary["counted"] = r.counted;
    o.summary["main_term"] = r.main_term;
    o.summary["deviation"] = r.deviation;
    if (c.check && !(std::abs(r.deviation) <= kZeroCountTolerance)) {
      o.failure = "zero count deviates from the main term by more than 2";
    }
  } else if (c.check) {
    throw MissingParameter("zeros --check: --T is required");
  }
  return o;
}

// ---- scans -------------------------------------------------------------

Table stat_table(std::span<const IntervalStat> stats) {
  Table t{{"x", "y", "count", "density_ratio", "theta_inc", "psi_inc"}, {}};
  for (const auto& s : stats) {
    t.rows.push_back({Json(s.x), Json(s.y), Json(s.count), num(s.density_ratio),
                      num(s.theta_inc), num(s.psi_inc)});
  }
  return t;
}

YRule rule_of(const RunConfig& c) {
  const std::string rule = c.rule.empty() ? "power" : c.rule;
  if (rule == "fixed") {
    need(c, {"y"});
    return {YRuleKind::kFixed, static_cast<double>(c.y)};
  }
  if (rule == "power") {
    return {YRuleKind::kPower, given(c, "beta") ? c.beta : 7.0 / 12.0};
  }
  if (rule == "log-power") {
    need(c, {"delta"});
    return {YRuleKind::kLogPower, c.delta};
  }
  throw RangeError("--rule must be fixed, power or log-power");
}

Output scan_density(const RunConfig& c) {
  const YRule rule = rule_of(c);
  const std::uint64_t lo = given(c, "lo") ? c.lo : 1000000;
  const std::uint64_t hi = given(c, "hi") ? c.hi : 100000000;
  const std::uint64_t points = given(c, "points") ? c.points : 200;
  const auto scan = density_scan(lo, hi, points, rule, {}, exec_of(c));
  Output o;
  o.summary["rule"] = to_string(rule);
  o.summary["samples"] = scan.stats.size();
  o.summary["skipped"] = scan.skipped.size();
  o.summary["mean_ratio"] = scan.mean_ratio;
  o.summary["min_ratio"] = scan.min_ratio;
  o.summary["max_ratio"] = scan.max_ratio;
  o.summary["in_band_fraction"] = scan.in_band_fraction;
  o.summary["almost_all"] = scan.almost_all;
  o.table = stat_table(scan.stats);
  if (c.check) {
    const DensityConfig band;
    if (!(std::abs(scan.mean_ratio - 1.0) <= kMeanBand) ||
        scan.min_ratio < band.band_lo || scan.max_ratio > band.band_hi) {
      o.failure = "density ratios outside [0.7, 1.3] or mean outside [0.9, 1.1]";
    }
  }
  return o;
}

Output scan_maier(const RunConfig& c) {
  need(c, {"delta"});
  const std::uint64_t lo = given(c, "lo") ? c.lo : 100000;
  const std::uint64_t hi = given(c, "hi") ? c.hi : 1000000;
  const std::uint64_t points = given(c, "points") ? c.points : 200;
  const auto m = maier_ratio_stats(c.delta, lo, hi, points, exec_of(c));
  Output o;
  o.summary["delta"] = m.delta;
  o.summary["min_ratio"] = m.min_ratio;
  o.summary["max_ratio"] = m.max_ratio;
  o.summary["below_one"] = m.below_one;
  o.summary["above_one"] = m.above_one;
  Json h;
  h["lo"] = m.histogram.lo;
  h["hi"] = m.histogram.hi;
  h["counts"] = array_of(m.histogram.counts);
  o.summary["histogram"] = h;
  o.table = stat_table(m.stats);
  return o;
}

Output scan_gap(const RunConfig& c) {
  const auto grid = grid_of(c, 1000, 100000000, 10000);
  const auto r = bhp_gap_check(grid, exec_of(c));
  Output o;
  o.summary["points"] = r.rows.size();
  o.summary["violations"] = array_of(r.violations);
  o.summary["chain_failures"] = r.chain_failures;
  o.summary["max_c1"] = r.max_c1;
  Table t{{"x", "h", "count", "theta_inc", "upper_bound", "lower_ok", "upper_ok"},
          {}};
  for (const auto& row : r.rows) {
    t.rows.push_back({Json(row.x), Json(row.h), Json(row.count),
                      num(row.theta_inc), num(row.upper_bound),
                      Json(row.lower_ok), Json(row.upper_ok)});
  }
  o.table = std::move(t);
  if (c.check && !r.violations.empty()) o.failure = "prime-free interval found";
  return o;
}

Output scan_brun_titchmarsh(const RunConfig& c) {
  need(c, {"beta"});
  const auto grid = grid_of(c, 10000, 100000000, 1000);
  const auto scan = brun_titchmarsh_scan(grid, c.beta, exec_of(c));
  Output o;
  o.summary["beta"] = c.beta;
  o.summary["points"] = scan.rows.size();
  o.summary["violations"] = scan.violations;
  o.summary["holds_from"] =
      scan.holds_from ? Json(*scan.holds_from) : Json(nullptr);
  Table t{{"x", "y", "count", "bound", "satisfied"}, {}};
  for (const auto& row : scan.rows) {
    t.rows.push_back({Json(row.x), Json(row.y), Json(row.report.count),
                      num(row.report.bound), Json(row.report.satisfied)});
  }
  o.table = std::move(t);
  if (c.check && scan.violations != 0) o.failure = "Brun-Titchmarsh bound exceeded";
  return o;
}

Output scan_variance(const RunConfig& c) {
  need(c, {"n", "y"});
  const auto r = interval_variance(c.n, c.y, c.stride);
  Output o;
  o.summary["N"] = r.n;
  o.summary["y"] = r.y;
  o.summary["stride"] = r.stride;
  o.summary["samples"] = r.samples;
  o.summary["empirical_mean"] = r.empirical_mean;
  o.summary["empirical_variance"] = r.empirical_variance;
  o.summary["predicted_variance"] = r.predicted_variance;
  o.summary["ratio"] = r.ratio;
  o.summary["effective_samples"] = r.effective_samples;
  o.summary["mean_standard_error"] = r.mean_standard_error;
  o.summary["mean_centered"] = r.mean_centered;
  if (c.check && !(r.ratio >= kVarianceLow && r.ratio <= kVarianceHigh)) {
    o.failure = "variance ratio outside [1/3, 3]";
  }
  return o;
}

Output scan_increments(const RunConfig& c) {
  need(c, {"x"});
  const auto ys = given(c, "ys") ? c.ys
                                 : increment_samples(c.x, given(c, "points")
                                                              ? c.points
                                                              : 32);
  const auto r = increment_deviation(c.x, ys, exec_of(c));
  Output o;
  o.summary["x"] = r.x;
  o.summary["max_theta_dev"] = r.max_theta_dev;
  o.summary["max_psi_dev"] = r.max_psi_dev;
  o.summary["envelope_ratio"] = r.envelope_ratio;
  o.summary["psi_envelope_ratio"] = r.psi_envelope_ratio;
  o.summary["skipped"] = r.skipped.size();
  o.table = stat_table(r.stats);
  if (c.check && !r.within) o.failure = "increment deviation above 10 x^(7/12)";
  return o;
}

// ---- error profile -----------------------------------------------------

ErrorProfile profile_of(const RunConfig& c) {
  return build_profile(grid_of(c, 10, 100000000, 100), {}, exec_of(c));
}

Output profile_rows(const RunConfig& c) {
  const auto p = profile_of(c);
  Output o;
  Table t{{"x", "e_pi", "e_theta", "e_psi", "eps_eff_pi", "eps_eff_theta", "li_gap"},
          {}};
  for (const auto& r : p.rows) {
    t.rows.push_back({Json(r.x), num(r.e_pi), num(r.e_theta), num(r.e_psi),
                      num(r.eps_eff_pi), num(r.eps_eff_theta), num(r.li_gap)});
  }
  o.summary["rows"] = p.rows.size();
  o.table = std::move(t);
  return o;
}

Output profile_envelopes(const RunConfig& c) {
  const auto p = profile_of(c);
  EnvelopeConfig cfg;
  cfg.c_dvp = c.c_dvp;
  cfg.c_vinogradov = c.c_vinogradov;
  const auto r = envelope_report(p, cfg);
  Output o;
  o.summary["pi_within"] = r.pi_within;
  o.summary["theta_within"] = r.theta_within;
  o.summary["violations"] = r.violations.size();
  Table t{{"family", "max_ratio_pi", "worst_x_pi", "max_ratio_theta",
           "worst_x_theta"},
          {}};
  for (const auto& f : r.families) {
    t.rows.push_back({Json(f.name), num(f.max_ratio_pi), Json(f.worst_x_pi),
                      num(f.max_ratio_theta), Json(f.worst_x_theta)});
  }
  Json v = Json::array();
  for (const auto& e : r.violations) {
    v.push_back(Json::array({e.x, e.which, e.ratio}));
  }
  o.summary["violation_list"] = v;
  o.table = std::move(t);
  if (c.check && !(r.pi_within && r.theta_within)) {
    o.failure = "|E| exceeds x^(7/12) on the grid";
  }
  return o;
}

Output fit_epsilon(const RunConfig& c) {
  const auto p = build_profile(grid_of(c, 1000, 100000000, 100), {}, exec_of(c));
  const auto f = epsilon_fit(p);
  Output o;
  o.summary["slope_pi"] = f.slope_pi;
  o.summary["intercept_pi"] = f.intercept_pi;
  o.summary["slope_theta"] = f.slope_theta;
  o.summary["intercept_theta"] = f.intercept_theta;
  o.summary["used_pi"] = f.used_pi;
  o.summary["used_theta"] = f.used_theta;
  o.summary["all_eps_pi_positive"] = f.all_eps_pi_positive;
  o.summary["all_eps_theta_positive"] = f.all_eps_theta_positive;
  Table t{{"x", "eps_pi", "eps_theta"}, {}};
  for (const auto& r : f.rows) {
    t.rows.push_back({Json(r.x), num(r.eps_pi), num(r.eps_theta)});
  }
  o.table = std::move(t);
  return o;
}

// ---- dispatch ----------------------------------------------------------

struct Route {
  DispatchEntry entry;
  Handler handler;
};

const std::vector<Route>& routes() {
  static const std::vector<Route> table = {
      {{"pi", "count", "counting.pi"}, pi_count},
      {{"pi", "legendre", "counting.pi_legendre"}, pi_legendre_op},
      {{"pi", "interval", "counting.pi_interval"}, pi_interval_op},
      {{"pi", "ap", "counting.pi_ap"}, pi_ap_op},
      {{"pi", "primes", "sieve.primes_in"}, pi_primes},
      {{"pi", "is-prime", "sieve.is_prime"}, pi_is_prime},
      {{"theta", "value", "chebyshev.theta"}, theta_value},
      {{"theta", "ap", "chebyshev.theta_ap"}, theta_ap_op},
      {{"theta", "profile", "chebyshev.chebyshev_profile"}, theta_profile},
      {{"psi", "value", "chebyshev.psi"}, psi_value},
      {{"psi", "minus-theta", "chebyshev.psi_minus_theta"}, psi_minus_theta_op},
      {{"psi", "lambda", "sieve.mangoldt_range"}, psi_lambda},
      {{"psi", "sign-changes", "chebyshev.sign_change_scan"}, psi_sign_changes},
      {{"mertens", "value", "mertens.mertens"}, mertens_value},
      {{"mertens", "squarefree", "mertens.squarefree_count"}, mertens_squarefree},
      {{"mertens", "mobius", "sieve.mobius_range"}, mertens_mobius},
      {{"mertens", "envelope", "mertens.mertens_envelope"}, mertens_envelope_op},
      {{"mertens", "scan", "mertens.mertens_scan"}, mertens_scan_op},
      {{"mertens", "inverse-zeta", "mertens.inverse_zeta_partial"},
       mertens_inverse_zeta},
      {{"li", "value", "logint.li"}, li_value},
      {{"li", "compare", "logint.li_quadrature"}, li_compare_op},
      {{"li", "ei", "logint.ei"}, li_ei},
      {{"li", "envelope-integral", "logint.integral_envelope_check"},
       li_envelope_integral},
      {{"convert", "pi-from-theta", "logint.pi_from_theta"}, convert_pi_from_theta},
      {{"convert", "theta-from-pi", "logint.theta_from_pi"}, convert_theta_from_pi},
      {{"convert", "mangoldt-log-sum", "logint.mangoldt_log_sum"}, convert_mangoldt},
      {{"convert", "reciprocal-sum", "logint.reciprocal_prime_sum"},
       convert_reciprocal},
      {{"convert", "conversions", "logint.conversion_identities"}, convert_all},
      {{"convert", "progressions", "logint.ap_conversions"}, convert_progressions},
      {{"explicit", "landau", "explicit.psi_landau"}, explicit_landau},
      {{"explicit", "riemann", "explicit.pi_riemann"}, explicit_riemann},
      {{"zeros", "load", "explicit.load_zeros"}, zeros_summary},
      {{"zeros", "count", "explicit.zero_count_check"}, zeros_summary},
      {{"scan-density", "density", "shortint.density_scan"}, scan_density},
      {{"scan-density", "maier", "shortint.maier_ratio_stats"}, scan_maier},
      {{"scan-gap", "bhp", "shortint.bhp_gap_check"}, scan_gap},
      {{"scan-gap", "brun-titchmarsh", "counting.brun_titchmarsh_ratio"},
       scan_brun_titchmarsh},
      {{"scan-variance", "variance", "shortint.interval_variance"}, scan_variance},
      {{"scan-variance", "increments", "shortint.increment_deviation"},
       scan_increments},
      {{"profile-error", "profile", "errorfit.build_profile"}, profile_rows},
      {{"profile-error", "envelopes", "errorfit.envelope_report"},
       profile_envelopes},
      {{"fit-epsilon", "fit", "errorfit.epsilon_fit"}, fit_epsilon},
  };
  return table;
}

// The op chosen when --op is absent.
std::string default_op(const RunConfig& c) {
  static const std::map<std::string, std::string> defaults = {
      {"pi", "count"},           {"theta", "value"},
      {"psi", "value"},          {"mertens", "value"},
      {"li", "value"},           {"convert", "conversions"},
      {"explicit", "landau"},    {"zeros", "load"},
      {"scan-density", "density"}, {"scan-gap", "bhp"},
      {"scan-variance", "variance"}, {"profile-error", "profile"},
      {"fit-epsilon", "fit"},
  };
  if (c.subcommand == "zeros" && given(c, "T")) return "count";
  const auto it = defaults.find(c.subcommand);
  return it == defaults.end() ? std::string() : it->second;
}

// ---- emission ----------------------------------------------------------

std::string csv_cell(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  }
  if (v.is_null()) return "";
  if (v.is_structured()) return csv_cell(Json(v.dump()));
  return v.dump();
}

Json json_value(const Json& v) {
  // Non-finite doubles become strings so the document stays valid JSON.
  if (v.is_number_float() && !std::isfinite(v.get<double>())) {
    return Json(format_double(v.get<double>()));
  }
  if (v.is_structured()) {
    Json out = v.is_array() ? Json::array() : Json::object();
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (v.is_array()) {
        out.push_back(json_value(*it));
      } else {
        out[it.key()] = json_value(it.value());
      }
    }
    return out;
  }
  return v;
}

std::string iso_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string header_line(const RunConfig& c, const std::string& op) {
  std::ostringstream os;
  os << "# primelab " << PRIMELAB_VERSION_STRING << ' ' << c.subcommand
     << " op=" << op;
  for (const auto& [k, v] : c.echo) {
    if (k == "op") continue;
    os << ' ' << k << '=' << v;
  }
  return os.str();
}

// Nested objects become dotted keys: {"a": {"b": 1}} -> a.b=1.
void flatten(const Json& v, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it.value().is_object()) {
      flatten(it.value(), key, out);
    } else {
      out.emplace_back(key, csv_cell(it.value()));
    }
  }
}

void emit_csv(std::ostream& os, const RunConfig& c, const std::string& op,
              const Output& out) {
  if (out.scalar && !out.table) {
    os << csv_cell(*out.scalar) << '\n';
    return;
  }
  os << header_line(c, op) << '\n';
  if (c.timestamp) os << "# generated " << iso_timestamp() << '\n';
  if (out.table) {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(out.summary, "", flat);
    for (const auto& [k, v] : flat) os << "# " << k << '=' << v << '\n';
    const auto& t = *out.table;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      os << (i ? "," : "") << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << csv_cell(row[i]);
      }
      os << '\n';
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(out.summary, "", flat);
  os << "key,value\n";
  for (const auto& [k, v] : flat) os << k << ',' << v << '\n';
}

void emit_json(std::ostream& os, const RunConfig& c, const std::string& op,
               const Output& out) {
  Json doc;
  doc["artifact"] = "primelab";
  doc["version"] = PRIMELAB_VERSION_STRING;
  doc["subcommand"] = c.subcommand;
  doc["op"] = op;
  Json config = Json::object();
  for (const auto& [k, v] : c.echo) {
    if (k != "op") config[k] = v;
  }
  doc["config"] = config;
  if (c.timestamp) doc["generated"] = iso_timestamp();
  if (out.scalar) doc["value"] = json_value(*out.scalar);
  if (!out.summary.empty()) doc["result"] = json_value(out.summary);
  if (out.table) {
    Json rows = Json::array();
    for (const auto& row : out.table->rows) {
      Json r = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        r[out.table->columns[i]] = json_value(row[i]);
      }
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
  }
  os << doc.dump(2) << '\n';
}

}  // namespace

std::span<const DispatchEntry> dispatch_table() {
  static const std::vector<DispatchEntry> entries = [] {
    std::vector<DispatchEntry> v;
    for (const auto& r : routes()) v.push_back(r.entry);
    return v;
  }();
  return entries;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string op = config.op.empty() ? default_op(config) : config.op;
  const auto& table = routes();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Route& r) {
    return config.subcommand == r.entry.subcommand && op == r.entry.op;
  });
  if (it == table.end()) {
    err << "error: unknown operation '" << op << "' for subcommand '"
        << config.subcommand << "'\n";
    return kExitUsage;
  }
  if (config.workers < 1) {
    err << "error: --workers must be >= 1\n";
    return kExitData;
  }

  Output result;
  try {
    result = it->handler(config);
  } catch (const MissingParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ZeroTableError& e) {
    err << "error: zero table (" << to_string(e.kind()) << "): " << e.what()
        << '\n';
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << config.output << '\n';
      return kExitData;
    }
    sink = &file;
  }
  if (config.format == OutputFormat::kJson) {
    emit_json(*sink, config, op, result);
  } else {
    emit_csv(*sink, config, op, result);
  }
  sink->flush();
  if (!*sink) {
    err << "error: write failed\n";
    return kExitData;
  }
  if (!result.failure.empty()) {
    err << "check failed: " << result.failure << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("PRIMELAB_ZEROS"); env && *env) {
    cfg.zeros_path = env;
  } else {
    cfg.zeros_path = PRIMELAB_DEFAULT_ZEROS;
  }

  CLI::App app{"Prime counting and error-term laboratory", "primelab"};
  app.set_version_flag("--version", PRIMELAB_VERSION_STRING);
  app.require_subcommand(1, 1);

  std::string format = "csv";
  std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::kCsv},
                                              {"json", OutputFormat::kJson}};

  // Options shared by every subcommand.
  auto common = [&](CLI::App* sub) {
    sub->add_option("--op", cfg.op, "Operation within the subcommand");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", cfg.output, "Write the artifact to a file");
    sub->add_option("--workers,-j", cfg.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timestamp", cfg.timestamp,
                  "Add an ISO-8601 generation time comment");
  };
  auto int_x = [&](CLI::App* sub) { sub->add_option("--x", cfg.x, "x"); };
  auto range = [&](CLI::App* sub) {
    sub->add_option("--lo", cfg.lo, "Range start");
    sub->add_option("--hi", cfg.hi, "Range end");
    sub->add_option("--points", cfg.points, "Grid points");
  };
  auto residue = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "Modulus");
    sub->add_option("--a", cfg.a, "Residue");
  };
  auto check = [&](CLI::App* sub) {
    sub->add_flag("--check", cfg.check, "Exit 3 if the assertion fails");
  };
  auto zeros = [&](CLI::App* sub) {
    sub->add_option("--zeros,--file", cfg.zeros_path, "Zero ordinate table");
  };

  std::vector<CLI::App*> subs;
  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    subs.push_back(sub);
    return sub;
  };

  auto* s_pi = add("pi", "Prime counts");
  int_x(s_pi);
  residue(s_pi);
  range(s_pi);
  s_pi->add_option("--y", cfg.y, "Interval length");
  s_pi->add_option("--n", cfg.n, "Integer to test");

  auto* s_theta = add("theta", "Chebyshev theta");
  int_x(s_theta);
  residue(s_theta);
  range(s_theta);

  auto* s_psi = add("psi", "Chebyshev psi");
  int_x(s_psi);
  range(s_psi);
  s_psi->add_option("--step", cfg.step, "Sampling step")->check(CLI::PositiveNumber);

  auto* s_mertens = add("mertens", "Mertens function");
  int_x(s_mertens);
  range(s_mertens);
  check(s_mertens);
  s_mertens->add_option("--n", cfg.n, "Truncation point");
  s_mertens->add_option("--s", cfg.s, "Exponent s > 1");

  auto* s_li = add("li", "Logarithmic and exponential integrals");
  s_li->add_option("--x", cfg.real_x, "x");
  s_li->add_option("--re", cfg.re, "Real part of z");
  s_li->add_option("--im", cfg.im, "Imaginary part of z");
  s_li->add_option("--nu", cfg.nu, "Power of t");
  s_li->add_option("--c", cfg.c, "Power of log t");
  check(s_li);

  auto* s_convert = add("convert", "Conversion identities");
  int_x(s_convert);
  residue(s_convert);
  s_convert->add_option("--mode", cfg.mode, "exact-sum or piecewise-integral");
  std::string convert_check;
  s_convert
      ->add_option("--check", convert_check,
                   "Assert an identity family: conversions or progressions")
      ->check(CLI::IsMember(
          {"conversions", "progressions", "thm16", "thm17"}));

  auto* s_explicit = add("explicit", "Explicit formulas");
  s_explicit->add_option("--x", cfg.real_x, "x (use half-integers)");
  s_explicit->add_option("--k", cfg.k, "Number of zeros");
  s_explicit->add_option("--terms", cfg.terms, "Terms of the n-sum");
  s_explicit->add_flag("--no-tail", cfg.no_tail, "Drop the constant and tail");
  zeros(s_explicit);

  auto* s_zeros = add("zeros", "Zero table validation");
  zeros(s_zeros);
  s_zeros->add_option("--T", cfg.t, "Height for the zero count");
  check(s_zeros);

  auto* s_density = add("scan-density", "Short-interval prime density");
  range(s_density);
  s_density->add_option("--rule", cfg.rule, "fixed, power or log-power");
  s_density->add_option("--y", cfg.y, "Fixed interval length");
  s_density->add_option("--beta", cfg.beta, "Exponent for y = x^beta");
  s_density->add_option("--delta", cfg.delta, "Exponent for y = (log x)^delta");
  check(s_density);

  auto* s_gap = add("scan-gap", "Prime gaps and interval bounds");
  range(s_gap);
  s_gap->add_option("--beta", cfg.beta, "Exponent for y = x^beta");
  check(s_gap);

  auto* s_var = add("scan-variance", "Interval variance and increments");
  int_x(s_var);
  s_var->add_option("--n", cfg.n, "N");
  s_var->add_option("--y", cfg.y, "Interval length");
  s_var->add_option("--stride", cfg.stride, "Stride")->check(CLI::PositiveNumber);
  s_var->add_option("--ys", cfg.ys, "Explicit y samples");
  s_var->add_option("--points", cfg.points, "Number of generated y samples");
  check(s_var);

  auto* s_prof = add("profile-error", "Error-term profile");
  range(s_prof);
  s_prof->add_option("--c-dvp", cfg.c_dvp, "Constant c in x exp(-c sqrt(log x))");
  s_prof->add_option("--c-vinogradov", cfg.c_vinogradov,
                     "Constant c in the Vinogradov-shape envelope");
  check(s_prof);

  auto* s_fit = add("fit-epsilon", "Effective-exponent fit");
  range(s_fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (CLI::App* sub : subs) {
    if (!sub->parsed()) continue;
    cfg.subcommand = sub->get_name();
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0) continue;
      const std::string name = opt->get_lnames().front();
      if (name == "workers" || name == "output" || name == "format" ||
          name == "timestamp" || name == "help") {
        continue;
      }
      std::string value;
      for (const auto& r : opt->results()) {
        value += (value.empty() ? "" : ";") + r;
      }
      cfg.echo.emplace_back(name, value);
    }
  }
  cfg.format = formats.at(format);
  if (!convert_check.empty()) {
    cfg.check = true;
    cfg.op = (convert_check == "thm17" || convert_check == "progressions")
                 ? "progressions"
                 : "conversions";
  }
  return run(cfg, out, err);
}

}  // namespace primelab::cli
