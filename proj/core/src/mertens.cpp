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

#include "primelab/mertens.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "primelab/error.hpp"
#include "primelab/sieve.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

constexpr double kMertensExponent = 7.0 / 12.0;
constexpr std::uint64_t kEnvelopeGridMax = 100'000'000;

struct MobiusTotals {
  std::int64_t m = 0;
  std::uint64_t q = 0;
};

MobiusTotals totals(const PrimeSegment& seg) {
  MobiusTotals t;
  for (auto v : seg.mobius_table()) {
    t.m += v;
    t.q += (v != 0);
  }
  return t;
}

void require_x(std::uint64_t x, const char* what) {
  if (x < 1) throw RangeError(std::string(what) + ": x must be >= 1");
}

}  // namespace

std::int64_t mertens(std::uint64_t x, Exec exec) {
  require_x(x, "mertens");
  SegmentedSieve sieve(1, x + 1, {}, SegmentTables::kMobius);
  std::int64_t m = 0;
  sieve.for_each_segment([&](const PrimeSegment& seg) { m += totals(seg).m; },
                         exec);
  return m;
}

std::uint64_t squarefree_count(std::uint64_t x, Exec exec) {
  require_x(x, "squarefree_count");
  SegmentedSieve sieve(1, x + 1, {}, SegmentTables::kMobius);
  std::uint64_t q = 0;
  sieve.for_each_segment([&](const PrimeSegment& seg) { q += totals(seg).q; },
                         exec);
  return q;
}

MertensProfile mertens_profile(std::span<const std::uint64_t> grid, Exec exec) {
  MertensProfile profile;
  if (grid.empty()) return profile;
  if (!std::is_sorted(grid.begin(), grid.end()) || grid.front() < 1) {
    throw RangeError("mertens_profile: grid must be ascending and >= 1");
  }
  profile.samples.reserve(grid.size());
  std::size_t next = 0;
  MobiusTotals run;
  SegmentedSieve sieve(1, grid.back() + 1, {}, SegmentTables::kMobius);
  sieve.for_each_segment(
      [&](const PrimeSegment& seg) {
        if (next >= grid.size() || grid[next] >= seg.hi()) {
          const auto t = totals(seg);
          run.m += t.m;
          run.q += t.q;
          return;
        }
        const auto mu = seg.mobius_table();
        for (std::uint64_t n = seg.lo(); n < seg.hi(); ++n) {
          const int v = mu[static_cast<std::size_t>(n - seg.lo())];
          run.m += v;
          run.q += (v != 0);
          while (next < grid.size() && grid[next] == n) {
            profile.samples.push_back({n, run.m, run.q});
            ++next;
          }
        }
      },
      exec);
  return profile;
}

void write_csv(std::ostream& os, const MertensProfile& profile) {
  os << "x,M,Q\n";
  for (const auto& s : profile.samples) {
    os << s.x << ',' << s.m << ',' << s.q << '\n';
  }
}

MertensEnvelope mertens_envelope(std::span<const std::uint64_t> grid,
                                 Exec exec) {
  for (std::uint64_t x : grid) {
    if (x < 2 || x > kEnvelopeGridMax) {
      throw RangeError("mertens_envelope: grid must lie within [2, 10^8]");
    }
  }
  MertensEnvelope env;
  const auto profile = mertens_profile(grid, exec);
  bool first = true;
  for (const auto& s : profile.samples) {
    const double x = static_cast<double>(s.x);
    MertensEnvelopeRow row;
    row.x = s.x;
    row.m = s.m;
    row.envelope_ratio =
        static_cast<double>(std::llabs(s.m)) / std::pow(x, kMertensExponent);
    row.normalized = static_cast<double>(s.m) / std::sqrt(x);
    env.all_within = env.all_within && row.envelope_ratio <= 1.0;
    if (first || row.normalized < env.min_normalized) env.min_normalized = row.normalized;
    if (first || row.normalized > env.max_normalized) env.max_normalized = row.normalized;
    first = false;
    env.rows.push_back(row);
  }
  return env;
}

MertensScan mertens_scan(std::uint64_t limit, Exec exec) {
  require_x(limit, "mertens_scan");
  MertensScan scan;
  scan.limit = limit;
  std::int64_t m = 0;
  // Envelope x^(7/12) is refreshed every kStride integers; between refreshes
  // the value at the start of the stride is a lower bound, so a precise
  // evaluation is needed only when |M| could beat the current worst ratio.
  constexpr std::uint64_t kStride = 256;
  double env_lo = 1.0;
  double worst_abs_needed = 0.0;
  bool have_extremes = false;

  SegmentedSieve sieve(1, limit + 1, {}, SegmentTables::kMobius);
  sieve.for_each_segment(
      [&](const PrimeSegment& seg) {
        const auto mu = seg.mobius_table();
        for (std::uint64_t n = seg.lo(); n < seg.hi(); ++n) {
          m += mu[static_cast<std::size_t>(n - seg.lo())];
          if ((n - 1) % kStride == 0) {
            env_lo = std::pow(static_cast<double>(n), kMertensExponent);
            worst_abs_needed = scan.worst_ratio * env_lo;
          }
          const auto abs_m = static_cast<double>(std::llabs(m));
          if (abs_m > env_lo || abs_m >= worst_abs_needed) {
            const double env = std::pow(static_cast<double>(n), kMertensExponent);
            const double ratio = abs_m / env;
            if (ratio > scan.worst_ratio) {
              scan.worst_ratio = ratio;
              scan.worst_x = n;
              worst_abs_needed = scan.worst_ratio * env_lo;
            }
            if (ratio > 1.0) {
              if (scan.violations == 0) scan.first_violation = n;
              ++scan.violations;
            }
          }
          if (m != 0 || !have_extremes) {
            const double r = static_cast<double>(m) /
                             std::sqrt(static_cast<double>(n));
            if (!have_extremes || r < scan.min_normalized) {
              scan.min_normalized = r;
              scan.min_x = n;
            }
            if (!have_extremes || r > scan.max_normalized) {
              scan.max_normalized = r;
              scan.max_x = n;
            }
            have_extremes = true;
          }
        }
      },
      exec);
  scan.final_m = m;
  return scan;
}

double inverse_zeta_partial(std::uint64_t n_max, double s, Exec exec) {
  if (n_max < 1) throw RangeError("inverse_zeta_partial: N must be >= 1");
  if (!(s > 1.0)) throw RangeError("inverse_zeta_partial: s must be > 1");
  CompensatedSum total;
  std::int64_t m = 0;
  SegmentedSieve sieve(1, n_max + 1, {}, SegmentTables::kMobius);
  sieve.for_each_segment(
      [&](const PrimeSegment& seg) {
        const auto mu = seg.mobius_table();
        for (std::uint64_t n = seg.lo(); n < seg.hi(); ++n) {
          m += mu[static_cast<std::size_t>(n - seg.lo())];
          if (m == 0) continue;
          const double nd = static_cast<double>(n);
          // n^-s - (n+1)^-s without cancellation
          const double block =
              -std::pow(nd, -s) * std::expm1(-s * std::log1p(1.0 / nd));
          total.add(static_cast<double>(m) * block);
        }
      },
      exec);
  return total.value();
}

}  // namespace primelab
