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

// Slow, obviously-correct reference implementations used as test oracles.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Prime factors with multiplicity, ascending.
inline std::vector<std::uint64_t> factor(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      f.push_back(d);
      n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

inline int mobius(std::uint64_t n) {
  const auto f = factor(n);
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] == f[i - 1]) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

inline double mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  const auto f = factor(n);
  return f.front() == f.back() ? std::log(static_cast<double>(f.front())) : 0.0;
}

inline std::uint64_t pi(std::uint64_t x) {
  std::uint64_t c = 0;
  for (std::uint64_t n = 2; n <= x; ++n) c += is_prime(n);
  return c;
}

inline double theta(std::uint64_t x) {
  double s = 0.0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    if (is_prime(n)) s += std::log(static_cast<double>(n));
  }
  return s;
}

inline double psi(std::uint64_t x) {
  double s = 0.0;
  for (std::uint64_t n = 2; n <= x; ++n) s += mangoldt(n);
  return s;
}

inline std::int64_t mertens(std::uint64_t x) {
  std::int64_t s = 0;
  for (std::uint64_t n = 1; n <= x; ++n) s += mobius(n);
  return s;
}

// Composite Simpson's rule with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
