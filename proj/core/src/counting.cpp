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

#include "primelab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "primelab/arith.hpp"
#include "primelab/error.hpp"
#include "primelab/grid.hpp"

namespace primelab {

namespace {

constexpr double kBrunTitchmarshShift = 3.53;

// Partial sieve function phi(y, a): integers in [1, y] free of the first a
// primes. Small a uses primorial wheels, small y a lazily filled cache.
class LegendrePhi {
 public:
  explicit LegendrePhi(std::vector<std::uint64_t> primes)
      : primes_(std::move(primes)) {
    build_wheels();
  }

  std::size_t prime_count() const noexcept { return primes_.size(); }

  std::int64_t phi(std::uint64_t y, std::size_t a) {
    if (a == 0) return static_cast<std::int64_t>(y);
    if (y == 0) return 0;
    if (a <= kWheelPrimes) return wheel_phi(y, a);
    if (primes_[a - 1] >= y) return 1;

    // Every p_i with sqrt(y) < p_i <= p_a leaves only the integer 1 in
    // phi(y / p_i, i - 1).
    const std::uint64_t root = isqrt(y);
    const auto s = static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), root) -
        primes_.begin());
    if (s < a) return phi(y, s) - static_cast<std::int64_t>(a - s);

    const bool cacheable = y < kCacheY && a < kCacheA;
    if (cacheable) {
      if (cache_.empty()) cache_.assign(kCacheA * kCacheY, -1);
      const std::int32_t hit = cache_[a * kCacheY + y];
      if (hit >= 0) return hit;
    }

    std::int64_t result = wheel_phi(y, kWheelPrimes);
    for (std::size_t i = kWheelPrimes + 1; i <= a; ++i) {
      result -= phi(y / primes_[i - 1], i - 1);
    }
    if (cacheable) cache_[a * kCacheY + y] = static_cast<std::int32_t>(result);
    return result;
  }

 private:
  static constexpr std::size_t kWheelPrimes = 6;  // 2*3*5*7*11*13 = 30030
  static constexpr std::size_t kCacheY = std::size_t{1} << 16;
  static constexpr std::size_t kCacheA = 64;

  void build_wheels() {
    static constexpr std::uint64_t kSmall[kWheelPrimes] = {2, 3, 5, 7, 11, 13};
    std::uint64_t modulus = 1;
    wheel_mod_.assign(kWheelPrimes + 1, 1);
    wheel_tot_.assign(kWheelPrimes + 1, 1);
    wheel_.assign(kWheelPrimes + 1, {});
    wheel_[0] = {0};
    for (std::size_t c = 1; c <= kWheelPrimes; ++c) {
      modulus *= kSmall[c - 1];
      wheel_mod_[c] = modulus;
      auto& table = wheel_[c];
      table.assign(modulus, 0);
      std::int64_t running = 0;
      for (std::uint64_t r = 0; r < modulus; ++r) {
        if (r > 0) {
          bool coprime = true;
          for (std::size_t j = 0; j < c; ++j) {
            if (r % kSmall[j] == 0) {
              coprime = false;
              break;
            }
          }
          running += coprime ? 1 : 0;
        }
        table[r] = static_cast<std::int32_t>(running);
      }
      std::uint64_t tot = 1;
      for (std::size_t j = 0; j < c; ++j) tot *= kSmall[j] - 1;
      wheel_tot_[c] = tot;
    }
  }

  std::int64_t wheel_phi(std::uint64_t y, std::size_t c) const {
    if (c == 0) return static_cast<std::int64_t>(y);
    const std::uint64_t m = wheel_mod_[c];
    return static_cast<std::int64_t>((y / m) * wheel_tot_[c]) + wheel_[c][y % m];
  }

  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> wheel_mod_;
  std::vector<std::uint64_t> wheel_tot_;
  std::vector<std::vector<std::int32_t>> wheel_;
  std::vector<std::int32_t> cache_;
};

}  // namespace

std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi, Exec exec,
                           const SieveConfig& config) {
  if (hi <= lo) return 0;
  SegmentedSieve sieve(std::max<std::uint64_t>(lo, 1), hi, config);
  std::uint64_t total = 0;
  sieve.for_each_segment(
      [&](const PrimeSegment& seg) { total += seg.prime_count(); }, exec);
  return total;
}

std::uint64_t pi(std::uint64_t x, Exec exec, const SieveConfig& config) {
  if (x < 2) return 0;
  return count_primes(2, x + 1, exec, config);
}

std::uint64_t pi_legendre(std::uint64_t x) {
  if (x < 4) {
    throw RangeError("pi_legendre: x must be >= 4, got " + std::to_string(x));
  }
  const std::uint64_t root = isqrt(x);
  LegendrePhi phi(primes_in(2, root + 1));
  const std::size_t a = phi.prime_count();
  return static_cast<std::uint64_t>(phi.phi(x, a) +
                                    static_cast<std::int64_t>(a) - 1);
}

std::uint64_t pi_interval(std::uint64_t x, std::uint64_t y) {
  if (x < 2) throw RangeError("pi_interval: x must be >= 2");
  if (y < 1) throw RangeError("pi_interval: y must be >= 1");
  return count_primes(x + 1, x + y + 1);
}

void check_residue_class(std::uint64_t q, std::uint64_t a) {
  if (q < 1) throw RangeError("residue class: modulus q must be >= 1");
  if (a >= q) {
    throw RangeError("residue class: need 0 <= a < q, got a=" +
                     std::to_string(a) + " q=" + std::to_string(q));
  }
  if (std::gcd(a, q) != 1) {
    throw RangeError("residue class: a=" + std::to_string(a) +
                     " is not coprime to q=" + std::to_string(q));
  }
}

std::uint64_t pi_ap(std::uint64_t x, std::uint64_t q, std::uint64_t a) {
  check_residue_class(q, a);
  if (x < 2) return 0;
  std::uint64_t count = 0;
  SegmentedSieve sieve(2, x + 1);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    seg.for_each_prime([&](std::uint64_t p) { count += (p % q == a); });
  });
  return count;
}

std::vector<PiCheckpoint> pi_checkpoints(std::span<const std::uint64_t> grid,
                                         Exec exec) {
  std::vector<PiCheckpoint> out;
  if (grid.empty()) return out;
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw RangeError("pi_checkpoints: grid must be ascending");
  }
  out.reserve(grid.size());
  std::size_t next = 0;
  while (next < grid.size() && grid[next] < 2) out.push_back({grid[next++], 0});
  if (next == grid.size()) return out;

  SegmentedSieve sieve(2, grid.back() + 1);
  std::uint64_t below = 0;  // primes < seg.lo()
  sieve.for_each_segment(
      [&](const PrimeSegment& seg) {
        if (next < grid.size() && grid[next] < seg.hi()) {
          std::vector<std::uint64_t> primes;
          seg.for_each_prime([&](std::uint64_t p) { primes.push_back(p); });
          while (next < grid.size() && grid[next] < seg.hi()) {
            const auto upto = std::upper_bound(primes.begin(), primes.end(),
                                               grid[next]) -
                              primes.begin();
            out.push_back({grid[next], below + static_cast<std::uint64_t>(upto)});
            ++next;
          }
        }
        below += seg.prime_count();
      },
      exec);
  return out;
}

BrunTitchmarshReport brun_titchmarsh_ratio(std::uint64_t x, std::uint64_t y) {
  if (x < 2) throw RangeError("brun_titchmarsh_ratio: x must be >= 2");
  if (y < 2) throw RangeError("brun_titchmarsh_ratio: y must be >= 2");
  BrunTitchmarshReport r;
  r.count = pi_interval(x, y);
  r.bound = 2.0 * static_cast<double>(y) /
            (std::log(static_cast<double>(y)) + kBrunTitchmarshShift);
  r.satisfied = static_cast<double>(r.count) <= r.bound;
  return r;
}

BrunTitchmarshScan brun_titchmarsh_scan(std::span<const std::uint64_t> grid,
                                        double exponent, Exec exec) {
  if (!(exponent > 0.0 && exponent < 1.0)) {
    throw RangeError("brun_titchmarsh_scan: exponent must lie in (0, 1)");
  }
  BrunTitchmarshScan scan;
  scan.rows = parallel_map(grid.size(), exec, [&](std::size_t i) {
    const std::uint64_t x = grid[i];
    auto y = static_cast<std::uint64_t>(
        std::floor(std::pow(static_cast<double>(x), exponent)));
    y = std::max<std::uint64_t>(y, 2);
    return BrunTitchmarshRow{x, y, brun_titchmarsh_ratio(x, y)};
  });
  std::vector<std::uint64_t> xs;
  std::vector<bool> ok;
  for (const auto& row : scan.rows) {
    xs.push_back(row.x);
    ok.push_back(row.report.satisfied);
    if (!row.report.satisfied) ++scan.violations;
  }
  scan.holds_from = first_persistent(xs, ok);
  return scan;
}

}  // namespace primelab
