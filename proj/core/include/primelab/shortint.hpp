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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primelab/parallel.hpp"

namespace primelab {

// Primes and prime powers in the interval (x, x + y].
struct IntervalStat {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t count = 0;     // pi(x + y) - pi(x)
  double density_ratio = 0.0;  // count * log x / y
  double theta_inc = 0.0;      // theta(x + y) - theta(x)
  double psi_inc = 0.0;        // psi(x + y) - psi(x)
};

// Requires x >= 2, y >= 1.
IntervalStat interval_stat(std::uint64_t x, std::uint64_t y);

enum class YRuleKind {
  kFixed,     // y = value
  kPower,     // y = floor(x^value), 0 < value < 1
  kLogPower,  // y = floor((log x)^value), value > 1
};

struct YRule {
  YRuleKind kind = YRuleKind::kPower;
  double value = 7.0 / 12.0;
};

// Throws RangeError for an exponent outside its admissible range.
void validate(const YRule& rule);

// Interval length for x; 0 when the rule yields y < 1.
std::uint64_t interval_length(const YRule& rule, std::uint64_t x);

std::string to_string(const YRule& rule);

struct DensityConfig {
  // A ratio inside [band_lo, band_hi] counts toward the almost-all fraction.
  double band_lo = 0.7;
  double band_hi = 1.3;
  double almost_all_threshold = 0.99;
  // Lowers the x_lo floor from 10^3 to 2 (small-x experiments).
  bool permissive_small_x = false;
};

struct DensitySkip {
  std::uint64_t x = 0;
  std::string reason;
};

struct DensityScan {
  std::vector<IntervalStat> stats;
  std::vector<DensitySkip> skipped;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double in_band_fraction = 0.0;
  bool almost_all = false;  // in_band_fraction >= almost_all_threshold
};

// IntervalStat at each point of a `samples`-point log grid in [x_lo, x_hi].
DensityScan density_scan(std::uint64_t x_lo, std::uint64_t x_hi,
                         std::size_t samples, const YRule& rule,
                         const DensityConfig& config = {}, Exec exec = {});

void write_csv(std::ostream& os, std::span<const IntervalStat> stats);

struct GapRow {
  std::uint64_t x = 0;
  std::uint64_t h = 0;      // ceil(x^0.525)
  std::uint64_t count = 0;  // primes in (x - h, x]
  // Chain on (x, x + h]: log x < sum log p <= 2h/(log h + 3.53) log(x + h).
  double theta_inc = 0.0;
  double upper_bound = 0.0;
  bool lower_ok = false;
  bool upper_ok = false;
};

struct GapReport {
  std::vector<GapRow> rows;
  std::vector<std::uint64_t> violations;  // x with no prime in (x - h, x]
  std::size_t chain_failures = 0;
  double max_c1 = 0.0;  // max of theta_inc / h
};

// Grid ascending within [10^3, 10^8].
GapReport bhp_gap_check(std::span<const std::uint64_t> grid, Exec exec = {});

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::uint64_t> counts;  // equal-width bins over [lo, hi]
};

struct MaierStats {
  double delta = 0.0;
  std::vector<IntervalStat> stats;  // density_ratio is the observed ratio
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t below_one = 0;
  std::size_t above_one = 0;
  Histogram histogram;  // ceil(sqrt(samples)) bins, clamped to [1, 50]
};

// Ratios (pi(x + f) - pi(x)) / (f / log x) with f = floor((log x)^delta).
// Requires delta > 1, 3 <= x_lo <= x_hi, samples >= 1. Reported only.
MaierStats maier_ratio_stats(double delta, std::uint64_t x_lo,
                             std::uint64_t x_hi, std::size_t samples,
                             Exec exec = {});

struct VarianceReport {
  std::uint64_t n = 0;
  std::uint64_t y = 0;
  std::uint64_t stride = 1;
  std::uint64_t samples = 0;
  double empirical_mean = 0.0;      // of psi(x + y) - psi(x) - y
  double empirical_variance = 0.0;  // unbiased
  double predicted_variance = 0.0;  // y log(N / y)
  double ratio = 0.0;               // empirical / predicted
  // Windows of length y overlap, so roughly samples * stride / y of them
  // are independent; the mean's standard error uses that count.
  double effective_samples = 0.0;
  double mean_standard_error = 0.0;
  bool mean_centered = false;  // |mean| <= 3 standard errors
};

// Over x = N, N + stride, ... <= 2N. Requires N >= 10^4, 10 <= y <= N/10,
// stride >= 1.
VarianceReport interval_variance(std::uint64_t n, std::uint64_t y,
                                 std::uint64_t stride = 1);

struct IncrementSkip {
  std::uint64_t y = 0;
  std::string reason;
};

struct IncrementReport {
  std::uint64_t x = 0;
  std::vector<IntervalStat> stats;
  std::vector<IncrementSkip> skipped;
  double max_theta_dev = 0.0;   // max |theta(x + y) - theta(x) - y|
  double max_psi_dev = 0.0;     // max |psi(x + y) - psi(x) - y|
  double envelope_ratio = 0.0;  // max_theta_dev / x^(7/12)
  double psi_envelope_ratio = 0.0;
  bool within = false;          // envelope_ratio <= 10
};

// Each y must lie in [ceil(x^(7/12)), x]; others are skipped. Requires x >= 2.
IncrementReport increment_deviation(std::uint64_t x,
                                    std::span<const std::uint64_t> ys,
                                    Exec exec = {});

// `count` y values in [ceil(x^(7/12)), x], log-uniform along the golden-ratio
// sequence, so the set is deterministic and well spread.
std::vector<std::uint64_t> increment_samples(std::uint64_t x, std::size_t count);

}  // namespace primelab
