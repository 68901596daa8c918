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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "primelab/parallel.hpp"

namespace primelab {

// Largest exclusive upper bound accepted by the sieve layer.
inline constexpr std::uint64_t kSieveLimit = std::uint64_t{1} << 63;

struct SieveConfig {
  // Integers per segment. The default keeps the packed odd-only flag
  // block (64 KiB) inside L2.
  std::uint64_t segment_size = std::uint64_t{1} << 20;
};

// Which arithmetic-function tables a segment carries besides the flags.
enum class SegmentTables : unsigned {
  kFlags = 0,
  kMobius = 1,
  kMangoldt = 2,
  kAll = 3,
};

constexpr SegmentTables operator|(SegmentTables a, SegmentTables b) noexcept {
  return static_cast<SegmentTables>(static_cast<unsigned>(a) |
                                    static_cast<unsigned>(b));
}
constexpr bool has_table(SegmentTables set, SegmentTables t) noexcept {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(t)) != 0;
}

// The half-open block [lo, hi) with primality flags packed one bit per odd
// integer, plus optional mu and Lambda tables indexed by n - lo.
class PrimeSegment {
 public:
  PrimeSegment() = default;

  std::uint64_t lo() const noexcept { return lo_; }
  std::uint64_t hi() const noexcept { return hi_; }
  std::uint64_t size() const noexcept { return hi_ - lo_; }

  // Requires lo() <= n < hi().
  bool is_prime(std::uint64_t n) const noexcept {
    if (n == 2) return has_two_;
    if ((n & 1) == 0) return false;
    const std::uint64_t i = (n - odd_base_) >> 1;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint64_t prime_count() const noexcept;

  bool has_mobius() const noexcept { return !mu_.empty() || size() == 0; }
  bool has_mangoldt() const noexcept { return !lambda_.empty() || size() == 0; }

  int mobius(std::uint64_t n) const noexcept { return mu_[n - lo_]; }
  double mangoldt(std::uint64_t n) const noexcept { return lambda_[n - lo_]; }

  std::span<const std::int8_t> mobius_table() const noexcept { return mu_; }
  std::span<const double> mangoldt_table() const noexcept { return lambda_; }

  // Calls fn(p) for every prime in the block, ascending.
  template <class Fn>
  void for_each_prime(Fn&& fn) const {
    if (has_two_) fn(std::uint64_t{2});
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(word));
        fn(odd_base_ + 2 * (64 * static_cast<std::uint64_t>(w) + bit));
        word &= word - 1;
      }
    }
  }

 private:
  friend class SegmentedSieve;

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::uint64_t odd_base_ = 1;  // smallest odd integer >= lo
  bool has_two_ = false;
  std::vector<std::uint64_t> bits_;
  std::vector<std::int8_t> mu_;
  std::vector<double> lambda_;
};

// Partitions [lo, hi) into fixed segments. Segment boundaries depend only on
// lo and the configured size, so results are identical for any worker count.
class SegmentedSieve {
 public:
  SegmentedSieve(std::uint64_t lo, std::uint64_t hi, SieveConfig config = {},
                 SegmentTables tables = SegmentTables::kFlags);

  std::uint64_t lo() const noexcept { return lo_; }
  std::uint64_t hi() const noexcept { return hi_; }
  std::size_t segment_count() const noexcept { return count_; }

  // Builds segment `index`. Pure and safe to call concurrently.
  PrimeSegment segment(std::size_t index) const;

  // Calls fn(const PrimeSegment&) for each segment in ascending order.
  // Segments are built in batches of exec.workers.
  template <class Fn>
  void for_each_segment(Fn&& fn, Exec exec = {}) const {
    const std::size_t batch = exec.workers > 1 ? exec.workers : 1;
    for (std::size_t first = 0; first < count_; first += batch) {
      const std::size_t n = std::min(batch, count_ - first);
      if (n == 1) {
        fn(segment(first));
        continue;
      }
      auto segs = parallel_map(n, exec,
                               [&](std::size_t i) { return segment(first + i); });
      for (const auto& s : segs) fn(s);
    }
  }

 private:
  void build_flags(PrimeSegment& seg) const;
  void build_mobius(PrimeSegment& seg) const;
  void build_mangoldt(PrimeSegment& seg) const;

  std::uint64_t lo_;
  std::uint64_t hi_;
  SieveConfig config_;
  SegmentTables tables_;
  std::size_t count_ = 0;
  // Primes up to floor(sqrt(hi - 1)), or up to the presieve bound when the
  // range is high enough that candidates are finished by Miller-Rabin.
  std::vector<std::uint32_t> base_primes_;
  bool probable_path_ = false;
};

// Primes in [lo, hi), ascending. Requires 2 <= lo < hi <= 2^63.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi,
                                     const SieveConfig& config = {});

// mu(n) for n in [lo, hi). Requires 1 <= lo < hi.
std::vector<std::int8_t> mobius_range(std::uint64_t lo, std::uint64_t hi,
                                      const SieveConfig& config = {});

// Lambda(n) (natural log) for n in [lo, hi). Requires 1 <= lo < hi.
std::vector<double> mangoldt_range(std::uint64_t lo, std::uint64_t hi,
                                   const SieveConfig& config = {});

// Deterministic for every 64-bit n.
bool is_prime(std::uint64_t n) noexcept;

// p when n = p^k for a prime p and k >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n) noexcept;

}  // namespace primelab
