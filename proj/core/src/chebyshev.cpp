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

#include "primelab/chebyshev.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>

#include "primelab/arith.hpp"
#include "primelab/counting.hpp"
#include "primelab/error.hpp"
#include "primelab/format.hpp"
#include "primelab/sieve.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

constexpr std::size_t kMaxUncoveredListed = 16;

// Sums fn(segment) over the segments of [2, x], merging partials in order.
template <class Fn>
double segment_sum(std::uint64_t x, SegmentTables tables, Exec exec, Fn&& fn) {
  if (x < 2) return 0.0;
  SegmentedSieve sieve(2, x + 1, {}, tables);
  auto partials = parallel_map(sieve.segment_count(), exec, [&](std::size_t i) {
    return fn(sieve.segment(i));
  });
  CompensatedSum total;
  for (const auto& p : partials) total.merge(p);
  return total.value();
}

CompensatedSum theta_partial(const PrimeSegment& seg) {
  CompensatedSum s;
  seg.for_each_prime(
      [&](std::uint64_t p) { s.add(std::log(static_cast<double>(p))); });
  return s;
}

CompensatedSum psi_partial(const PrimeSegment& seg) {
  CompensatedSum s;
  for (double v : seg.mangoldt_table()) {
    if (v != 0.0) s.add(v);
  }
  return s;
}

unsigned floor_log2(std::uint64_t x) {
  return 63u - static_cast<unsigned>(std::countl_zero(x));
}

WindowCoverage cover_windows(const std::vector<SignChange>& changes,
                             const std::vector<std::uint64_t>& samples,
                             std::uint64_t hi, double factor) {
  WindowCoverage cov;
  cov.factor = factor;
  for (std::uint64_t x : samples) {
    const auto end = static_cast<std::uint64_t>(
        std::floor(factor * static_cast<double>(x)));
    if (end > hi) break;
    ++cov.windows;
    auto it = std::lower_bound(
        changes.begin(), changes.end(), x,
        [](const SignChange& c, std::uint64_t v) { return c.a < v; });
    if (it != changes.end() && it->b <= end) {
      ++cov.covered;
    } else if (cov.uncovered.size() < kMaxUncoveredListed) {
      cov.uncovered.push_back(x);
    }
  }
  if (cov.windows == 0) {
    cov.status = WindowStatus::kNoWindow;
  } else if (cov.covered == cov.windows) {
    cov.status = WindowStatus::kAllCovered;
  } else if (cov.covered == 0) {
    cov.status = WindowStatus::kUndetected;
  } else {
    cov.status = WindowStatus::kPartiallyCovered;
  }
  return cov;
}

}  // namespace

double theta(std::uint64_t x, Exec exec) {
  return segment_sum(x, SegmentTables::kFlags, exec, theta_partial);
}

double psi(std::uint64_t x, Exec exec) {
  return segment_sum(x, SegmentTables::kMangoldt, exec, psi_partial);
}

double psi_minus_theta(std::uint64_t x) {
  if (x < 4) throw RangeError("psi_minus_theta: x must be >= 4");
  CompensatedSum tail;
  const unsigned kmax = floor_log2(x);
  for (unsigned k = 2; k <= kmax; ++k) tail.add(theta(iroot(x, k)));
  return tail.value();
}

double psi_theta_series(std::uint64_t x) {
  if (x < 2) return 0.0;
  CompensatedSum s;
  const unsigned kmax = floor_log2(x);
  for (unsigned k = 1; k <= kmax; ++k) s.add(theta(iroot(x, k)));
  return s.value();
}

double theta_ap(std::uint64_t x, std::uint64_t q, std::uint64_t a) {
  check_residue_class(q, a);
  return segment_sum(x, SegmentTables::kFlags, Exec{},
                     [q, a](const PrimeSegment& seg) {
                       CompensatedSum s;
                       seg.for_each_prime([&](std::uint64_t p) {
                         if (p % q == a) s.add(std::log(static_cast<double>(p)));
                       });
                       return s;
                     });
}

ChebyshevProfile chebyshev_profile(std::span<const std::uint64_t> grid,
                                   Exec exec) {
  ChebyshevProfile profile;
  if (grid.empty()) return profile;
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw RangeError("chebyshev_profile: grid must be ascending");
  }
  profile.samples.reserve(grid.size());
  std::size_t next = 0;
  while (next < grid.size() && grid[next] < 2) {
    profile.samples.push_back({grid[next++], 0.0, 0.0});
  }
  if (next == grid.size()) return profile;

  CompensatedSum th;
  CompensatedSum ps;
  SegmentedSieve sieve(2, grid.back() + 1, {}, SegmentTables::kMangoldt);
  sieve.for_each_segment(
      [&](const PrimeSegment& seg) {
        if (next >= grid.size() || grid[next] >= seg.hi()) {
          th.merge(theta_partial(seg));
          ps.merge(psi_partial(seg));
          return;
        }
        const auto lambda = seg.mangoldt_table();
        for (std::uint64_t n = seg.lo(); n < seg.hi(); ++n) {
          const double v = lambda[static_cast<std::size_t>(n - seg.lo())];
          if (v != 0.0) {
            ps.add(v);
            if (seg.is_prime(n)) th.add(v);
          }
          while (next < grid.size() && grid[next] == n) {
            profile.samples.push_back({n, th.value(), ps.value()});
            ++next;
          }
        }
      },
      exec);
  return profile;
}

void write_csv(std::ostream& os, const ChebyshevProfile& profile) {
  os << "x,theta,psi,theta_minus_x,psi_minus_x\n";
  for (const auto& s : profile.samples) {
    const double x = static_cast<double>(s.x);
    os << s.x << ',' << format_double(s.theta) << ',' << format_double(s.psi)
       << ',' << format_double(s.theta - x) << ',' << format_double(s.psi - x)
       << '\n';
  }
}

SignChangeReport sign_change_scan(std::uint64_t lo, std::uint64_t hi,
                                  std::uint64_t step) {
  if (lo < 2 || hi <= lo) {
    throw RangeError("sign_change_scan: need 2 <= lo < hi");
  }
  if (step < 1) throw RangeError("sign_change_scan: step must be >= 1");

  SignChangeReport report;
  std::vector<std::uint64_t> samples;
  for (std::uint64_t x = lo; x <= hi; x += step) {
    samples.push_back(x);
    if (hi - x < step) break;
  }

  CompensatedSum ps;
  std::size_t next = 0;
  bool have_prev = false;
  bool prev_positive = false;  // sign of psi(a) - a at the last sample a
  std::uint64_t prev_sample = 0;
  std::uint64_t crossing = 0;

  SegmentedSieve sieve(2, samples.back() + 1, {}, SegmentTables::kMangoldt);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    if (seg.hi() <= lo) {
      ps.merge(psi_partial(seg));
      return;
    }
    const auto lambda = seg.mangoldt_table();
    for (std::uint64_t n = seg.lo(); n < seg.hi(); ++n) {
      const double v = lambda[static_cast<std::size_t>(n - seg.lo())];
      if (v != 0.0) ps.add(v);
      if (n < lo) continue;
      const bool positive = ps.value() - static_cast<double>(n) > 0.0;
      if (have_prev && crossing == 0 && positive != prev_positive) crossing = n;
      if (next < samples.size() && samples[next] == n) {
        if (have_prev && positive != prev_positive) {
          report.changes.push_back({prev_sample, n, crossing});
        }
        have_prev = true;
        prev_positive = positive;
        prev_sample = n;
        crossing = 0;
        ++next;
      }
    }
  });

  report.sharp = cover_windows(report.changes, samples, hi, 2.02);
  report.weak = cover_windows(report.changes, samples, hi, 19.0);
  return report;
}

const char* to_string(WindowStatus status) noexcept {
  switch (status) {
    case WindowStatus::kAllCovered:
      return "covered";
    case WindowStatus::kPartiallyCovered:
      return "partial";
    case WindowStatus::kUndetected:
      return "undetected";
    case WindowStatus::kNoWindow:
      return "no-window";
  }
  return "unknown";
}

}  // namespace primelab
