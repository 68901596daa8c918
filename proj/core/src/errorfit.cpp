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

#include "primelab/errorfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "primelab/chebyshev.hpp"
#include "primelab/counting.hpp"
#include "primelab/error.hpp"
#include "primelab/format.hpp"
#include "primelab/logint.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSevenTwelfths = 7.0 / 12.0;
constexpr std::size_t kMinFitRows = 10;
constexpr double kMinFitDecades = 3.0;

double eps_eff(double e, double log_x) {
  return e == 0.0 ? kNaN : std::log(std::abs(e)) / log_x;
}

struct Family {
  const char* name;
  double (*envelope)(double x, const EnvelopeConfig& c);
};

const Family kFamilies[] = {
    {"x^(7/12)", [](double x, const EnvelopeConfig&) {
       return std::pow(x, kSevenTwelfths);
     }},
    {"x^(1/2) log x", [](double x, const EnvelopeConfig&) {
       return std::sqrt(x) * std::log(x);
     }},
    {"x exp(-c sqrt(log x))", [](double x, const EnvelopeConfig& c) {
       return x * std::exp(-c.c_dvp * std::sqrt(std::log(x)));
     }},
    {"x exp(-c (log x)^(3/5) (log log x)^(-1/5))",
     [](double x, const EnvelopeConfig& c) {
       const double l = std::log(x);
       return x * std::exp(-c.c_vinogradov * std::pow(l, 0.6) *
                           std::pow(std::log(l), -0.2));
     }},
    {"x^(21/40)", [](double x, const EnvelopeConfig&) {
       return std::pow(x, 21.0 / 40.0);
     }},
};

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t used = 0;
};

Line least_squares(const std::vector<double>& xs, const std::vector<double>& ys,
                   const char* what) {
  CompensatedSum sx;
  CompensatedSum sy;
  std::size_t n = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::isnan(ys[i])) continue;
    sx.add(xs[i]);
    sy.add(ys[i]);
    ++n;
  }
  if (n < 2) {
    throw RangeError(std::string("epsilon_fit: fewer than two defined ") + what +
                     " rows");
  }
  const double mx = sx.value() / static_cast<double>(n);
  const double my = sy.value() / static_cast<double>(n);
  CompensatedSum sxx;
  CompensatedSum sxy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::isnan(ys[i])) continue;
    sxx.add((xs[i] - mx) * (xs[i] - mx));
    sxy.add((xs[i] - mx) * (ys[i] - my));
  }
  if (sxx.value() == 0.0) {
    throw RangeError(std::string("epsilon_fit: ") + what +
                     " rows share one x; slope undefined");
  }
  Line line;
  line.slope = sxy.value() / sxx.value();
  line.intercept = my - line.slope * mx;
  line.used = n;
  return line;
}

}  // namespace

ErrorProfile build_profile(std::span<const std::uint64_t> grid,
                           const QuadratureSpec& quad, Exec exec) {
  validate(quad);
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw RangeError("build_profile: grid must be ascending");
  }
  ErrorProfile profile;
  if (grid.empty()) return profile;
  if (grid.front() < 10 || grid.back() > 100000000) {
    throw RangeError("build_profile: grid must lie within [10, 10^8]");
  }
  const auto pis = pi_checkpoints(grid, exec);
  const auto cheb = chebyshev_profile(grid, exec);
  const auto lis = parallel_map(grid.size(), exec, [&](std::size_t i) {
    return li_compare(static_cast<double>(grid[i]), quad);
  });
  profile.rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = static_cast<double>(grid[i]);
    const double log_x = std::log(x);
    ErrorRow row;
    row.x = grid[i];
    row.e_pi = static_cast<double>(pis[i].pi) - lis[i].series;
    row.e_theta = cheb.samples[i].theta - x;
    row.e_psi = cheb.samples[i].psi - x;
    row.eps_eff_pi = eps_eff(row.e_pi, log_x);
    row.eps_eff_theta = eps_eff(row.e_theta, log_x);
    row.li_gap = std::abs(lis[i].series - lis[i].quadrature);
    profile.rows.push_back(row);
  }
  return profile;
}

void write_csv(std::ostream& os, const ErrorProfile& profile) {
  os << "x,e_pi,e_theta,e_psi,eps_eff_pi,eps_eff_theta,li_gap\n";
  for (const auto& r : profile.rows) {
    os << r.x << ',' << format_double(r.e_pi) << ',' << format_double(r.e_theta)
       << ',' << format_double(r.e_psi) << ',' << format_double(r.eps_eff_pi)
       << ',' << format_double(r.eps_eff_theta) << ','
       << format_double(r.li_gap) << '\n';
  }
}

EnvelopeReport envelope_report(const ErrorProfile& profile,
                               const EnvelopeConfig& config) {
  if (profile.rows.empty()) {
    throw RangeError("envelope_report: empty profile");
  }
  EnvelopeReport report;
  for (const auto& fam : kFamilies) {
    EnvelopeFamily f;
    f.name = fam.name;
    for (const auto& r : profile.rows) {
      const double env = fam.envelope(static_cast<double>(r.x), config);
      const double rp = std::abs(r.e_pi) / env;
      const double rt = std::abs(r.e_theta) / env;
      if (rp > f.max_ratio_pi || f.worst_x_pi == 0) {
        f.max_ratio_pi = rp;
        f.worst_x_pi = r.x;
      }
      if (rt > f.max_ratio_theta || f.worst_x_theta == 0) {
        f.max_ratio_theta = rt;
        f.worst_x_theta = r.x;
      }
    }
    report.families.push_back(std::move(f));
  }
  for (const auto& r : profile.rows) {
    if (r.x < 10) continue;
    const double env = std::pow(static_cast<double>(r.x), kSevenTwelfths);
    if (std::abs(r.e_pi) > env) {
      report.pi_within = false;
      report.violations.push_back({r.x, "pi", std::abs(r.e_pi) / env});
    }
    if (std::abs(r.e_theta) > env) {
      report.theta_within = false;
      report.violations.push_back({r.x, "theta", std::abs(r.e_theta) / env});
    }
  }
  return report;
}

EpsilonFit epsilon_fit(const ErrorProfile& profile) {
  const auto& rows = profile.rows;
  if (rows.size() < kMinFitRows) {
    throw RangeError("epsilon_fit: need at least 10 rows");
  }
  const double decades = std::log10(static_cast<double>(rows.back().x)) -
                         std::log10(static_cast<double>(rows.front().x));
  if (decades < kMinFitDecades) {
    throw RangeError("epsilon_fit: rows must span at least 3 decades");
  }
  EpsilonFit fit;
  std::vector<double> log_x;
  std::vector<double> pis;
  std::vector<double> thetas;
  fit.all_eps_pi_positive = true;
  fit.all_eps_theta_positive = true;
  for (const auto& r : rows) {
    fit.rows.push_back(
        {r.x, kSevenTwelfths - r.eps_eff_pi, kSevenTwelfths - r.eps_eff_theta});
    log_x.push_back(std::log(static_cast<double>(r.x)));
    pis.push_back(r.eps_eff_pi);
    thetas.push_back(r.eps_eff_theta);
    if (!std::isnan(r.eps_eff_pi) && !(r.eps_eff_pi < kSevenTwelfths)) {
      fit.all_eps_pi_positive = false;
    }
    if (!std::isnan(r.eps_eff_theta) && !(r.eps_eff_theta < kSevenTwelfths)) {
      fit.all_eps_theta_positive = false;
    }
  }
  const Line lp = least_squares(log_x, pis, "pi");
  const Line lt = least_squares(log_x, thetas, "theta");
  fit.slope_pi = lp.slope;
  fit.intercept_pi = lp.intercept;
  fit.used_pi = lp.used;
  fit.slope_theta = lt.slope;
  fit.intercept_theta = lt.intercept;
  fit.used_theta = lt.used;
  return fit;
}

void write_csv(std::ostream& os, const EpsilonFit& fit) {
  os << "x,eps_pi,eps_theta\n";
  for (const auto& r : fit.rows) {
    os << r.x << ',' << format_double(r.eps_pi) << ','
       << format_double(r.eps_theta) << '\n';
  }
}

}  // namespace primelab
