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

#include "primelab/shortint.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <ostream>
#include <sstream>

#include "primelab/counting.hpp"
#include "primelab/error.hpp"
#include "primelab/format.hpp"
#include "primelab/grid.hpp"
#include "primelab/sieve.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

constexpr double kGapExponent = 0.525;
constexpr double kBrunTitchmarshShift = 3.53;
constexpr double kIncrementEnvelope = 10.0;
constexpr std::uint64_t kScanFloor = 1000;
constexpr std::uint64_t kScanCeiling = 100000000;

std::uint64_t ceil_power(std::uint64_t x, long double e) {
  return static_cast<std::uint64_t>(
      std::ceil(std::pow(static_cast<long double>(x), e)));
}

std::uint64_t floor_power(std::uint64_t x, long double e) {
  return static_cast<std::uint64_t>(
      std::floor(std::pow(static_cast<long double>(x), e)));
}

struct Window {
  std::uint64_t count = 0;
  double theta = 0.0;
  double psi = 0.0;
};

// Primes and prime powers in [lo, hi).
Window sieve_window(std::uint64_t lo, std::uint64_t hi) {
  Window w;
  if (hi <= lo) return w;
  CompensatedSum th;
  CompensatedSum ps;
  SegmentedSieve sieve(lo, hi, {}, SegmentTables::kMangoldt);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    const auto lambda = seg.mangoldt_table();
    for (std::uint64_t n = seg.lo(); n < seg.hi(); ++n) {
      const double v = lambda[static_cast<std::size_t>(n - seg.lo())];
      if (v == 0.0) continue;
      ps.add(v);
      if (seg.is_prime(n)) {
        th.add(v);
        ++w.count;
      }
    }
  });
  w.theta = th.value();
  w.psi = ps.value();
  return w;
}

Histogram make_histogram(std::span<const IntervalStat> stats, double lo,
                         double hi) {
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  const auto bins = static_cast<std::size_t>(std::clamp(
      std::ceil(std::sqrt(static_cast<double>(stats.size()))), 1.0, 50.0));
  h.counts.assign(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (const auto& s : stats) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = static_cast<std::size_t>((s.density_ratio - lo) / width);
      b = std::min(b, bins - 1);
    }
    ++h.counts[b];
  }
  return h;
}

}  // namespace

IntervalStat interval_stat(std::uint64_t x, std::uint64_t y) {
  if (x < 2) throw RangeError("interval_stat: x must be >= 2");
  if (y < 1) throw RangeError("interval_stat: y must be >= 1");
  const Window w = sieve_window(x + 1, x + y + 1);
  IntervalStat s;
  s.x = x;
  s.y = y;
  s.count = w.count;
  s.density_ratio = static_cast<double>(w.count) *
                    std::log(static_cast<double>(x)) / static_cast<double>(y);
  s.theta_inc = w.theta;
  s.psi_inc = w.psi;
  return s;
}

void validate(const YRule& rule) {
  switch (rule.kind) {
    case YRuleKind::kFixed:
      if (!(rule.value >= 1.0) || rule.value != std::floor(rule.value)) {
        throw RangeError("y rule: fixed y must be a positive integer");
      }
      break;
    case YRuleKind::kPower:
      if (!(rule.value > 0.0 && rule.value < 1.0)) {
        throw RangeError("y rule: beta must lie in (0, 1)");
      }
      break;
    case YRuleKind::kLogPower:
      if (!(rule.value > 1.0) || !std::isfinite(rule.value)) {
        throw RangeError("y rule: delta must be > 1");
      }
      break;
  }
}

std::uint64_t interval_length(const YRule& rule, std::uint64_t x) {
  switch (rule.kind) {
    case YRuleKind::kFixed:
      return static_cast<std::uint64_t>(rule.value);
    case YRuleKind::kPower:
      return floor_power(x, rule.value);
    case YRuleKind::kLogPower: {
      const double l = std::log(static_cast<double>(x));
      if (l <= 0.0) return 0;
      return static_cast<std::uint64_t>(std::floor(std::pow(l, rule.value)));
    }
  }
  return 0;
}

std::string to_string(const YRule& rule) {
  switch (rule.kind) {
    case YRuleKind::kFixed:
      return "y=" + format_double(rule.value);
    case YRuleKind::kPower:
      return "y=x^" + format_double(rule.value);
    case YRuleKind::kLogPower:
      return "y=(log x)^" + format_double(rule.value);
  }
  return "y=?";
}

DensityScan density_scan(std::uint64_t x_lo, std::uint64_t x_hi,
                         std::size_t samples, const YRule& rule,
                         const DensityConfig& config, Exec exec) {
  validate(rule);
  const std::uint64_t floor = config.permissive_small_x ? 2 : kScanFloor;
  if (x_lo < floor || x_hi < x_lo) {
    throw RangeError("density_scan: need " + std::to_string(floor) +
                     " <= x_lo <= x_hi");
  }
  if (samples < 1) throw RangeError("density_scan: samples must be >= 1");
  if (!(config.band_lo <= config.band_hi) ||
      !(config.almost_all_threshold > 0.0 && config.almost_all_threshold <= 1.0)) {
    throw RangeError("density_scan: invalid band or threshold");
  }

  const auto grid = log_grid(x_lo, x_hi, samples);
  auto rows = parallel_map(grid.size(), exec, [&](std::size_t i) {
    const std::uint64_t y = interval_length(rule, grid[i]);
    return y < 1 ? std::optional<IntervalStat>{}
                 : std::optional<IntervalStat>{interval_stat(grid[i], y)};
  });

  DensityScan scan;
  CompensatedSum total;
  std::size_t in_band = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) {
      scan.skipped.push_back({grid[i], "interval length below 1"});
      continue;
    }
    const IntervalStat& s = *rows[i];
    if (scan.stats.empty()) {
      scan.min_ratio = scan.max_ratio = s.density_ratio;
    }
    scan.min_ratio = std::min(scan.min_ratio, s.density_ratio);
    scan.max_ratio = std::max(scan.max_ratio, s.density_ratio);
    total.add(s.density_ratio);
    if (s.density_ratio >= config.band_lo && s.density_ratio <= config.band_hi) {
      ++in_band;
    }
    scan.stats.push_back(s);
  }
  if (!scan.stats.empty()) {
    const auto n = static_cast<double>(scan.stats.size());
    scan.mean_ratio = total.value() / n;
    scan.in_band_fraction = static_cast<double>(in_band) / n;
    scan.almost_all = scan.in_band_fraction >= config.almost_all_threshold;
  }
  return scan;
}

void write_csv(std::ostream& os, std::span<const IntervalStat> stats) {
  os << "x,y,count,density_ratio,theta_inc,psi_inc\n";
  for (const auto& s : stats) {
    os << s.x << ',' << s.y << ',' << s.count << ','
       << format_double(s.density_ratio) << ',' << format_double(s.theta_inc)
       << ',' << format_double(s.psi_inc) << '\n';
  }
}

GapReport bhp_gap_check(std::span<const std::uint64_t> grid, Exec exec) {
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw RangeError("bhp_gap_check: grid must be ascending");
  }
  if (!grid.empty() && (grid.front() < kScanFloor || grid.back() > kScanCeiling)) {
    throw RangeError("bhp_gap_check: grid must lie within [10^3, 10^8]");
  }
  GapReport report;
  report.rows = parallel_map(grid.size(), exec, [&](std::size_t i) {
    const std::uint64_t x = grid[i];
    GapRow row;
    row.x = x;
    row.h = ceil_power(x, kGapExponent);
    row.count = count_primes(x - row.h + 1, x + 1);
    row.theta_inc = sieve_window(x + 1, x + row.h + 1).theta;
    const double h = static_cast<double>(row.h);
    row.upper_bound = 2.0 * h / (std::log(h) + kBrunTitchmarshShift) *
                      std::log(static_cast<double>(x + row.h));
    row.lower_ok = std::log(static_cast<double>(x)) < row.theta_inc;
    row.upper_ok = row.theta_inc <= row.upper_bound;
    return row;
  });
  for (const auto& row : report.rows) {
    if (row.count == 0) report.violations.push_back(row.x);
    if (!row.lower_ok || !row.upper_ok) ++report.chain_failures;
    report.max_c1 =
        std::max(report.max_c1, row.theta_inc / static_cast<double>(row.h));
  }
  return report;
}

MaierStats maier_ratio_stats(double delta, std::uint64_t x_lo,
                             std::uint64_t x_hi, std::size_t samples,
                             Exec exec) {
  if (!(delta > 1.0) || !std::isfinite(delta)) {
    throw RangeError("maier_ratio_stats: delta must be > 1");
  }
  if (x_lo < 3 || x_hi < x_lo || samples < 1) {
    throw RangeError("maier_ratio_stats: need 3 <= x_lo <= x_hi, samples >= 1");
  }
  const YRule rule{YRuleKind::kLogPower, delta};
  const auto grid = log_grid(x_lo, x_hi, samples);
  MaierStats out;
  out.delta = delta;
  out.stats = parallel_map(grid.size(), exec, [&](std::size_t i) {
    return interval_stat(grid[i], interval_length(rule, grid[i]));
  });
  out.min_ratio = out.max_ratio = out.stats.front().density_ratio;
  for (const auto& s : out.stats) {
    out.min_ratio = std::min(out.min_ratio, s.density_ratio);
    out.max_ratio = std::max(out.max_ratio, s.density_ratio);
    if (s.density_ratio < 1.0) ++out.below_one;
    if (s.density_ratio > 1.0) ++out.above_one;
  }
  out.histogram = make_histogram(out.stats, out.min_ratio, out.max_ratio);
  return out;
}

VarianceReport interval_variance(std::uint64_t n, std::uint64_t y,
                                 std::uint64_t stride) {
  if (n < 10000) throw RangeError("interval_variance: N must be >= 10^4");
  if (y < 10 || y > n / 10) {
    throw RangeError("interval_variance: y must lie in [10, N/10]");
  }
  if (stride < 1) throw RangeError("interval_variance: stride must be >= 1");

  VarianceReport r;
  r.n = n;
  r.y = y;
  r.stride = stride;

  // Slide the window (x, x + y] from x = N to 2N, keeping its Lambda values.
  std::deque<double> window;
  CompensatedSum in_window;
  double mean = 0.0;
  double m2 = 0.0;  // Welford accumulators
  const double yd = static_cast<double>(y);

  SegmentedSieve sieve(n + 1, 2 * n + y + 1, {}, SegmentTables::kMangoldt);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    const auto lambda = seg.mangoldt_table();
    for (std::uint64_t m = seg.lo(); m < seg.hi(); ++m) {
      const double v = lambda[static_cast<std::size_t>(m - seg.lo())];
      window.push_back(v);
      in_window.add(v);
      if (window.size() > y) {
        in_window.add(-window.front());
        window.pop_front();
      }
      if (window.size() < y) continue;
      const std::uint64_t x = m - y;  // window is (x, x + y]
      if ((x - n) % stride != 0) continue;
      const double d = in_window.value() - yd;
      ++r.samples;
      const double delta = d - mean;
      mean += delta / static_cast<double>(r.samples);
      m2 += delta * (d - mean);
    }
  });

  r.empirical_mean = mean;
  r.empirical_variance =
      r.samples > 1 ? m2 / static_cast<double>(r.samples - 1) : 0.0;
  r.predicted_variance = yd * std::log(static_cast<double>(n) / yd);
  r.ratio = r.empirical_variance / r.predicted_variance;
  r.effective_samples = std::max(
      1.0, static_cast<double>(r.samples) * static_cast<double>(stride) / yd);
  r.mean_standard_error = std::sqrt(r.empirical_variance / r.effective_samples);
  r.mean_centered = std::abs(mean) <= 3.0 * r.mean_standard_error;
  return r;
}

IncrementReport increment_deviation(std::uint64_t x,
                                    std::span<const std::uint64_t> ys,
                                    Exec exec) {
  if (x < 2) throw RangeError("increment_deviation: x must be >= 2");
  IncrementReport r;
  r.x = x;
  const std::uint64_t y_min = ceil_power(x, 7.0L / 12.0L);
  std::vector<std::uint64_t> kept;
  for (std::uint64_t y : ys) {
    if (y < y_min) {
      r.skipped.push_back({y, "below ceil(x^(7/12)) = " + std::to_string(y_min)});
    } else if (y > x) {
      r.skipped.push_back({y, "above x"});
    } else {
      kept.push_back(y);
    }
  }
  r.stats = parallel_map(kept.size(), exec,
                         [&](std::size_t i) { return interval_stat(x, kept[i]); });
  for (const auto& s : r.stats) {
    const double yd = static_cast<double>(s.y);
    r.max_theta_dev = std::max(r.max_theta_dev, std::abs(s.theta_inc - yd));
    r.max_psi_dev = std::max(r.max_psi_dev, std::abs(s.psi_inc - yd));
  }
  const double envelope = std::pow(static_cast<double>(x), 7.0 / 12.0);
  r.envelope_ratio = r.max_theta_dev / envelope;
  r.psi_envelope_ratio = r.max_psi_dev / envelope;
  r.within = r.envelope_ratio <= kIncrementEnvelope;
  return r;
}

std::vector<std::uint64_t> increment_samples(std::uint64_t x, std::size_t count) {
  if (x < 2) throw RangeError("increment_samples: x must be >= 2");
  const std::uint64_t lo = std::min(ceil_power(x, 7.0L / 12.0L), x);
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(x));
  std::vector<std::uint64_t> ys;
  ys.reserve(count);
  double frac = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    frac += std::numbers::phi - 1.0;
    frac -= std::floor(frac);
    auto y = static_cast<std::uint64_t>(std::llround(std::exp(a + (b - a) * frac)));
    ys.push_back(std::clamp(y, lo, x));
  }
  return ys;
}

}  // namespace primelab
