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

#include "primelab/arith.hpp"

#include <cmath>
#include <limits>

namespace primelab {

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // The double estimate can be off by one either way near 2^64.
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
  while ((r + 1) <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t iroot(std::uint64_t n, unsigned k) noexcept {
  if (k == 0) return 0;
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  if (k >= 64) return 1;

  // true when r^k <= n, without overflow
  auto fits = [n, k](std::uint64_t r) {
    std::uint64_t pw = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (pw > n / r) return false;
      pw *= r;
    }
    return pw <= n;
  };
  auto r = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(n), 1.0 / static_cast<double>(k)));
  if (r == 0) r = 1;
  while (r > 1 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace primelab
