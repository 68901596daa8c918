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

// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
//
// Usage: primelab_acceptance [--zeros PATH] [--expect-fail N]...
// Exit status is 0 when every criterion passes except those named with
// --expect-fail, and each of those fails. An expected failure that passes
// is reported as an error so the list cannot go stale.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "primelab/chebyshev.hpp"
#include "primelab/conversions.hpp"
#include "primelab/counting.hpp"
#include "primelab/errorfit.hpp"
#include "primelab/explicit_formula.hpp"
#include "primelab/grid.hpp"
#include "primelab/logint.hpp"
#include "primelab/mertens.hpp"
#include "primelab/shortint.hpp"

#ifndef PRIMELAB_TEST_ZEROS
#define PRIMELAB_TEST_ZEROS ""
#endif

using namespace primelab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;  // detail lines, printed indented

  void check(bool ok, const std::string& line) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

Outcome exact_counting() {
  Outcome o;
  for (std::uint64_t x = 10000; x <= 100000000; x *= 10) {
    const auto a = pi_legendre(x);
    const auto b = pi(x);
    o.check(a == b, "pi_legendre(" + str(x) + ") = " + str(a) + ", sieve " + str(b));
  }
  const auto t0 = Clock::now();
  const auto v = pi(100000000, Exec{1});
  const double t = seconds_since(t0);
  o.check(v == 5761455 && t <= 60.0,
          "pi(10^8) = " + str(v) + " single worker in " + fmt("%.2f s", t));
  return o;
}

Outcome conversion_identities_criterion() {
  Outcome o;
  double worst = 0.0;
  std::uint64_t worst_x = 0;
  for (auto x : log_grid(10, 10000000, 50)) {
    const auto r = conversion_identities(x);
    if (r.max_discrepancy >= worst) {
      worst = r.max_discrepancy;
      worst_x = x;
    }
  }
  o.check(worst <= 1e-9, "pi/theta/Lambda/reciprocal identities, 50 x in [10, 1e7]: max " +
                             fmt("%.3g", worst) + " at x = " + str(worst_x));
  const std::pair<std::uint64_t, std::uint64_t> classes[] = {{3, 1}, {3, 2}, {4, 1}, {4, 3}};
  for (auto [q, a] : classes) {
    double w = 0.0;
    for (auto x : log_grid(10, 100000, 20)) {
      w = std::max(w, ap_conversions(x, q, a).max_discrepancy);
    }
    o.check(w <= 1e-9, "progression identities q=" + str(q) + " a=" + str(a) +
                           ", 20 x in [10, 1e5]: max " + fmt("%.3g", w));
  }
  return o;
}

Outcome envelopes() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto grid = log_grid(10, 100000000, 200);
  const auto profile = build_profile(grid);
  const auto env = envelope_report(profile);
  std::size_t pi_bad = 0;
  std::size_t theta_bad = 0;
  std::uint64_t theta_first = 0;
  std::uint64_t theta_last = 0;
  double theta_worst = 0.0;
  for (const auto& v : env.violations) {
    if (v.which == "pi") {
      ++pi_bad;
    } else {
      if (theta_first == 0) theta_first = v.x;
      theta_last = v.x;
      theta_worst = std::max(theta_worst, v.ratio);
      ++theta_bad;
    }
  }
  o.check(env.pi_within, "|pi(x) - li(x)| <= x^(7/12) on 200-point grid [10, 1e8]: " +
                             str(pi_bad) + " violations");
  std::string theta_line = "|theta(x) - x| <= x^(7/12) on the same grid: " +
                           str(theta_bad) + " violations";
  if (theta_bad > 0) {
    theta_line += " (x from " + str(theta_first) + " to " + str(theta_last) +
                  ", worst ratio " + fmt("%.3f", theta_worst) + ")";
  }
  o.check(env.theta_within, theta_line);
  const auto scan = mertens_scan(100000000);
  o.check(scan.all_within(), "|M(x)| <= x^(7/12) for every integer x <= 1e8: " +
                                 str(scan.violations) + " violations, max ratio " +
                                 fmt("%.4f", scan.worst_ratio));
  const double t = seconds_since(t0);
  o.check(t <= 600.0, "runtime " + fmt("%.2f s", t));
  return o;
}

Outcome explicit_reconstruction(const ZeroList& zeros) {
  Outcome o;
  const auto first100 = zero_prefix(zeros, 100);
  std::vector<double> psis;
  for (double x = 10.5; x <= 300.5; x += 1.0) {
    psis.push_back(psi(static_cast<std::uint64_t>(x)));
  }
  double prev = 0.0;
  bool monotone = true;
  std::string rms_line = "RMS |psi_landau - psi| over x = 10.5..300.5:";
  for (std::size_t k : {10u, 25u, 50u, 100u}) {
    double sum = 0.0;
    std::size_t i = 0;
    for (double x = 10.5; x <= 300.5; x += 1.0, ++i) {
      const double d = psi_landau(x, first100, k) - psis[i];
      sum += d * d;
    }
    const double rms = std::sqrt(sum / static_cast<double>(psis.size()));
    if (!std::isfinite(rms) || (prev > 0.0 && rms > 1.05 * prev)) monotone = false;
    prev = rms;
    rms_line += " K" + str(k) + "=" + fmt("%.4f", rms);
  }
  o.check(monotone, rms_line);
  const double smooth = pi_riemann(1000.0, 100, zeros, 0);
  const double l = li(1000.0);
  o.check(std::abs(smooth - 168.0) < std::abs(l - 168.0),
          "pi_riemann smooth part at 1000 = " + fmt("%.4f", smooth) + " vs li " +
              fmt("%.4f", l) + " (pi = 168)");
  return o;
}

Outcome zero_table(const ZeroList& zeros) {
  Outcome o;
  double worst = 0.0;
  double worst_t = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t = 30.0 + (zeros.height - 30.0) * i / 19.0;
    const auto r = zero_count_check(zeros, t);
    if (std::abs(r.deviation) > worst) {
      worst = std::abs(r.deviation);
      worst_t = t;
    }
  }
  o.check(worst <= 2.0, "max |N(T) - main term| over 20 T in [30, " +
                            fmt("%.2f", zeros.height) + "] = " + fmt("%.4f", worst) +
                            " at T = " + fmt("%.2f", worst_t));
  const double known[3] = {14.134725, 21.022040, 25.010858};
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(zeros.gammas[i] - known[i]));
  o.check(d <= 1e-4, "first three ordinates within " + fmt("%.2g", d));
  return o;
}

Outcome short_intervals() {
  Outcome o;
  const auto gap = bhp_gap_check(log_grid(1000, 100000000, 10000));
  o.check(gap.violations.empty(), "prime in (x - x^0.525, x] at " +
                                      str(gap.rows.size()) + " grid points: " +
                                      str(gap.violations.size()) + " violations");
  const auto d = density_scan(1000000, 100000000, 200, {YRuleKind::kPower, 7.0 / 12.0});
  o.check(d.mean_ratio >= 0.9 && d.mean_ratio <= 1.1 && d.min_ratio >= 0.7 &&
              d.max_ratio <= 1.3,
          "density y = x^(7/12) on [1e6, 1e8]: mean " + fmt("%.4f", d.mean_ratio) +
              ", range [" + fmt("%.4f", d.min_ratio) + ", " +
              fmt("%.4f", d.max_ratio) + "]");
  const auto grid = log_grid(10000, 100000000, 1000);
  for (double beta : {0.55, 0.7}) {
    const auto bt = brun_titchmarsh_scan(grid, beta);
    o.check(bt.violations == 0, "Brun-Titchmarsh with y = x^" + fmt("%.2f", beta) +
                                    " on 1000 points in [1e4, 1e8]: " +
                                    str(bt.violations) + " violations");
  }
  return o;
}

Outcome variance() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = interval_variance(1000000, 1000, 1);
  const double t = seconds_since(t0);
  o.check(r.ratio >= 1.0 / 3.0 && r.ratio <= 3.0,
          "N = 1e6, y = 1e3: variance " + fmt("%.2f", r.empirical_variance) +
              " / predicted " + fmt("%.2f", r.predicted_variance) + " = " +
              fmt("%.4f", r.ratio));
  o.check(r.mean_centered, "mean " + fmt("%.4f", r.empirical_mean) +
                               " within 3 standard errors (" +
                               fmt("%.4f", r.mean_standard_error) + ")");
  o.check(t <= 300.0, "runtime " + fmt("%.2f s", t));
  return o;
}

Outcome squarefree() {
  Outcome o;
  const auto prof = mertens_profile(log_grid(100, 100000000, 200));
  const double density = 6.0 / (std::numbers::pi * std::numbers::pi);
  double worst = 0.0;
  for (const auto& s : prof.samples) {
    const double x = static_cast<double>(s.x);
    worst = std::max(worst, std::abs(static_cast<double>(s.q) - density * x) /
                                (2.0 * std::sqrt(x)));
  }
  o.check(worst <= 1.0, "|Q(x) - 6x/pi^2| / (2 sqrt x) on 200 points in [100, 1e8]: max " +
                            fmt("%.4f", worst));
  const double partial = inverse_zeta_partial(10000000, 2.0);
  o.check(std::abs(partial - density) <= 1e-3,
          "truncated 1/zeta(2) at N = 1e7: " + fmt("%.10f", partial) + " vs " +
              fmt("%.10f", density));
  return o;
}

Outcome numerics() {
  Outcome o;
  double worst = 0.0;
  for (double x : log_grid_real(2.5, 1e8, 200)) {
    worst = std::max(worst, li_compare(x).relative_difference);
  }
  o.check(worst <= 1e-10, "li quadrature vs Ei series on 200 points in [2.5, 1e8]: max " +
                              fmt("%.3g", worst));
  const EiConfig cfg;
  double seam = 0.0;
  for (int i = 0; i < 720; ++i) {
    const double phase = -std::numbers::pi + (i + 0.5) * std::numbers::pi / 360.0;
    const ComplexValue z = std::polar(cfg.series_radius, phase);
    // Just inside the seam: the automatic choice against the outer expansion.
    const ComplexValue w = z * (1.0 - 1e-12);
    const auto inner = ei_by(w, EiMethod::kAuto, cfg);
    const auto outer = ei_by(w, EiMethod::kAsymptotic, cfg);
    seam = std::max(seam, std::abs(inner - outer) / std::abs(outer));
  }
  o.check(seam <= 1e-10, "Ei seam at |z| = 40, 720 phases: max relative gap " +
                             fmt("%.3g", seam));
  const std::pair<double, double> shapes[] = {{5.0 / 12.0, 2.0}, {0.5, 1.0}};
  for (auto [nu, c] : shapes) {
    double r = 0.0;
    for (double x : log_grid_real(3.0, 1e8, 200)) {
      r = std::max(r, integral_envelope_check(nu, c, x).bound_ratio);
    }
    o.check(r <= 10.0, "integral envelope nu = " + fmt("%.4f", nu) + ", C = " +
                           fmt("%.0f", c) + " up to 1e8: max ratio " + fmt("%.4f", r));
  }
  return o;
}

std::string run_cli(std::vector<std::string> args, int& code) {
  std::vector<const char*> argv{"primelab"};
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome determinism(const std::string& zeros_path) {
  Outcome o;
  const std::vector<std::vector<std::string>> invocations = {
      {"pi", "--x", "1000000"},
      {"theta", "--op", "profile", "--lo", "10", "--hi", "1000000", "--points", "40"},
      {"psi", "--op", "sign-changes", "--lo", "2", "--hi", "100000", "--step", "50"},
      {"mertens", "--op", "envelope", "--lo", "2", "--hi", "1000000", "--points", "40"},
      {"li", "--op", "compare", "--x", "123456.5"},
      {"convert", "--op", "conversions", "--x", "100000"},
      {"explicit", "--op", "riemann", "--x", "1000.5", "--terms", "10", "--k", "50",
       "--zeros", zeros_path},
      {"zeros", "--T", "500", "--zeros", zeros_path},
      {"scan-density", "--lo", "1000000", "--hi", "10000000", "--points", "40"},
      {"scan-gap", "--lo", "1000", "--hi", "10000000", "--points", "300"},
      {"scan-variance", "--n", "100000", "--y", "300"},
      {"profile-error", "--lo", "10", "--hi", "1000000", "--points", "60"},
      {"fit-epsilon", "--lo", "1000", "--hi", "10000000", "--points", "40"},
  };
  for (const auto& base : invocations) {
    std::string reference;
    bool same = true;
    int code = 0;
    for (const char* format : {"csv", "json"}) {
      std::string first;
      for (const char* workers : {"1", "4", "1", "3"}) {
        auto args = base;
        args.insert(args.end(), {"--format", format, "--workers", workers});
        const std::string text = run_cli(args, code);
        if (code != 0) same = false;
        if (first.empty()) {
          first = text;
        } else if (text != first) {
          same = false;
        }
      }
    }
    o.check(same, base.front() + " " + base[1] + " " + base[2] +
                      ": byte-identical across runs, worker counts 1/3/4");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string zeros_path = PRIMELAB_TEST_ZEROS;
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--zeros" && i + 1 < argc) {
      zeros_path = argv[++i];
    } else if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--zeros PATH] [--expect-fail N]...\n", argv[0]);
      return 2;
    }
  }
  const ZeroList zeros = load_zeros(zeros_path);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exact counting cross-check", exact_counting},
      {"conversion identities", conversion_identities_criterion},
      {"x^(7/12) envelopes", envelopes},
      {"explicit-formula reconstruction", [&] { return explicit_reconstruction(zeros); }},
      {"zero-table validation", [&] { return zero_table(zeros); }},
      {"short intervals", short_intervals},
      {"interval variance", variance},
      {"squarefree density", squarefree},
      {"numerics", numerics},
      {"determinism", [&] { return determinism(zeros_path); }},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = Clock::now();
    const Outcome out = criteria[i].second();
    const double t = seconds_since(t0);
    const bool expected_fail = expected_failures.count(id) > 0;
    std::printf("criterion %2d: %s  %s (%.1f s)%s\n", id, out.pass ? "PASS" : "FAIL",
                criteria[i].first, t,
                expected_fail ? (out.pass ? "  [expected FAIL, but passed]"
                                          : "  [known failure]")
                              : "");
    for (const auto& line : out.lines) std::printf("    %s\n", line.c_str());
    if (out.pass == expected_fail) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
