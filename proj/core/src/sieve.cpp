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

#include "primelab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "primelab/arith.hpp"
#include "primelab/error.hpp"

namespace primelab {

namespace {

// Ranges whose square root exceeds this are presieved with small primes and
// finished with Miller-Rabin instead of carrying a huge base-prime table.
constexpr std::uint64_t kMaxBasePrime = std::uint64_t{1} << 26;
constexpr std::uint64_t kPresieveBound = std::uint64_t{1} << 16;

std::vector<std::uint32_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t ceil_multiple(std::uint64_t n, std::uint64_t p) {
  const std::uint64_t q = n / p + (n % p != 0);
  return q * p;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) noexcept {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1 || x == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::string describe_range(const char* what, std::uint64_t lo,
                           std::uint64_t hi) {
  std::ostringstream os;
  os << what << ": invalid range [" << lo << ", " << hi << ")";
  return os.str();
}

}  // namespace

std::uint64_t PrimeSegment::prime_count() const noexcept {
  std::uint64_t count = has_two_ ? 1 : 0;
  for (auto w : bits_) count += static_cast<std::uint64_t>(std::popcount(w));
  return count;
}

SegmentedSieve::SegmentedSieve(std::uint64_t lo, std::uint64_t hi,
                               SieveConfig config, SegmentTables tables)
    : lo_(lo), hi_(hi), config_(config), tables_(tables) {
  if (lo < 1 || hi <= lo || hi > kSieveLimit) {
    throw RangeError(describe_range("sieve", lo, hi));
  }
  if (config_.segment_size < 128) {
    throw RangeError("sieve: segment size must be at least 128");
  }
  // Even segment sizes keep every segment's odd-index layout aligned.
  config_.segment_size &= ~std::uint64_t{1};

  const std::uint64_t root = isqrt(hi - 1);
  if (root > kMaxBasePrime) {
    if (tables != SegmentTables::kFlags) {
      throw RangeError(
          "sieve: mu/Lambda tables require hi <= 2^52 (no factorization "
          "beyond the base-prime table)");
    }
    probable_path_ = true;
    base_primes_ = simple_sieve(kPresieveBound);
  } else {
    base_primes_ = simple_sieve(root);
  }
  const std::uint64_t span = hi - lo;
  count_ = static_cast<std::size_t>(span / config_.segment_size +
                                    (span % config_.segment_size != 0));
}

PrimeSegment SegmentedSieve::segment(std::size_t index) const {
  PrimeSegment seg;
  seg.lo_ = lo_ + static_cast<std::uint64_t>(index) * config_.segment_size;
  seg.hi_ = std::min(hi_, seg.lo_ + config_.segment_size);
  build_flags(seg);
  if (has_table(tables_, SegmentTables::kMobius)) build_mobius(seg);
  if (has_table(tables_, SegmentTables::kMangoldt)) build_mangoldt(seg);
  return seg;
}

void SegmentedSieve::build_flags(PrimeSegment& seg) const {
  const std::uint64_t lo = seg.lo_;
  const std::uint64_t hi = seg.hi_;
  seg.has_two_ = lo <= 2 && 2 < hi;
  seg.odd_base_ = lo | 1;
  const std::uint64_t odd_count =
      hi > seg.odd_base_ ? (hi - seg.odd_base_ + 1) / 2 : 0;
  seg.bits_.assign((odd_count + 63) / 64, ~std::uint64_t{0});
  if (odd_count % 64 != 0) {
    seg.bits_.back() = (std::uint64_t{1} << (odd_count % 64)) - 1;
  }
  if (odd_count == 0) return;
  if (seg.odd_base_ == 1) seg.bits_[0] &= ~std::uint64_t{1};

  auto* words = seg.bits_.data();
  for (std::uint32_t p32 : base_primes_) {
    const std::uint64_t p = p32;
    if (p == 2) continue;
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, ceil_multiple(lo, p));
    if ((start & 1) == 0) start += p;
    if (start >= hi) continue;
    for (std::uint64_t i = (start - seg.odd_base_) >> 1; i < odd_count; i += p) {
      words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  if (probable_path_) {
    // Presieving settled everything below kPresieveBound^2.
    const std::uint64_t settled = kPresieveBound * kPresieveBound;
    for (std::size_t w = 0; w < seg.bits_.size(); ++w) {
      std::uint64_t word = seg.bits_[w];
      while (word != 0) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(word));
        const std::uint64_t n = seg.odd_base_ + 2 * (64 * w + bit);
        if (n >= settled && !is_prime(n)) {
          seg.bits_[w] &= ~(std::uint64_t{1} << bit);
        }
        word &= word - 1;
      }
    }
  }
}

void SegmentedSieve::build_mobius(PrimeSegment& seg) const {
  const std::uint64_t lo = seg.lo_;
  const std::uint64_t hi = seg.hi_;
  const std::size_t n = static_cast<std::size_t>(hi - lo);
  seg.mu_.assign(n, 1);
  // Product of the distinct base primes dividing each n; a mismatch with n
  // means exactly one prime factor above sqrt(hi) remains.
  std::vector<std::uint64_t> prod(n, 1);
  for (std::uint32_t p32 : base_primes_) {
    const std::uint64_t p = p32;
    for (std::uint64_t m = ceil_multiple(lo, p); m < hi; m += p) {
      const std::size_t i = static_cast<std::size_t>(m - lo);
      seg.mu_[i] = static_cast<std::int8_t>(-seg.mu_[i]);
      prod[i] *= p;
    }
    const std::uint64_t pp = p * p;
    for (std::uint64_t m = ceil_multiple(lo, pp); m < hi; m += pp) {
      seg.mu_[static_cast<std::size_t>(m - lo)] = 0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (seg.mu_[i] != 0 && prod[i] != lo + i) {
      seg.mu_[i] = static_cast<std::int8_t>(-seg.mu_[i]);
    }
  }
}

void SegmentedSieve::build_mangoldt(PrimeSegment& seg) const {
  const std::uint64_t lo = seg.lo_;
  const std::uint64_t hi = seg.hi_;
  seg.lambda_.assign(static_cast<std::size_t>(hi - lo), 0.0);
  seg.for_each_prime([&](std::uint64_t p) {
    seg.lambda_[static_cast<std::size_t>(p - lo)] =
        std::log(static_cast<double>(p));
  });
  for (std::uint32_t p32 : base_primes_) {
    const std::uint64_t p = p32;
    const double logp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p; q <= (hi - 1) / p;) {
      q *= p;
      if (q >= lo) seg.lambda_[static_cast<std::size_t>(q - lo)] = logp;
    }
  }
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi,
                                     const SieveConfig& config) {
  if (lo < 2 || hi <= lo || hi > kSieveLimit) {
    throw RangeError(describe_range("primes_in", lo, hi));
  }
  std::vector<std::uint64_t> out;
  SegmentedSieve sieve(lo, hi, config);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    seg.for_each_prime([&](std::uint64_t p) { out.push_back(p); });
  });
  return out;
}

std::vector<std::int8_t> mobius_range(std::uint64_t lo, std::uint64_t hi,
                                      const SieveConfig& config) {
  if (lo < 1 || hi <= lo) throw RangeError(describe_range("mobius_range", lo, hi));
  std::vector<std::int8_t> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  SegmentedSieve sieve(lo, hi, config, SegmentTables::kMobius);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    auto t = seg.mobius_table();
    out.insert(out.end(), t.begin(), t.end());
  });
  return out;
}

std::vector<double> mangoldt_range(std::uint64_t lo, std::uint64_t hi,
                                   const SieveConfig& config) {
  if (lo < 1 || hi <= lo) {
    throw RangeError(describe_range("mangoldt_range", lo, hi));
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  SegmentedSieve sieve(lo, hi, config, SegmentTables::kMangoldt);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    auto t = seg.mangoldt_table();
    out.insert(out.end(), t.begin(), t.end());
  });
  return out;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kBases) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n) noexcept {
  if (n < 2) return 0;
  for (unsigned k = 63; k >= 1; --k) {
    const std::uint64_t r = iroot(n, k);
    if (r < 2) continue;
    std::uint64_t pw = 1;
    bool exact = true;
    for (unsigned i = 0; i < k; ++i) {
      if (pw > std::numeric_limits<std::uint64_t>::max() / r) {
        exact = false;
        break;
      }
      pw *= r;
    }
    if (exact && pw == n) return is_prime(r) ? r : 0;
  }
  return 0;
}

}  // namespace primelab
