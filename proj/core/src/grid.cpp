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

#include "primelab/grid.hpp"

#include <algorithm>
#include <cmath>

#include "primelab/error.hpp"

namespace primelab {

std::vector<std::uint64_t> log_grid(std::uint64_t lo, std::uint64_t hi,
                                    std::size_t points) {
  if (lo < 1 || hi < lo || points == 0) {
    throw RangeError("log_grid: need 1 <= lo <= hi and points >= 1");
  }
  std::vector<std::uint64_t> out;
  out.reserve(points);
  if (points == 1 || lo == hi) {
    out.push_back(lo);
    if (hi != lo && points > 1) out.push_back(hi);
    return out;
  }
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < points; ++i) {
    std::uint64_t v;
    if (i == 0) {
      v = lo;
    } else if (i + 1 == points) {
      v = hi;
    } else {
      const double t = static_cast<double>(i) / static_cast<double>(points - 1);
      v = static_cast<std::uint64_t>(std::llround(std::exp(a + (b - a) * t)));
      v = std::clamp(v, lo, hi);
    }
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

std::vector<double> log_grid_real(double lo, double hi, std::size_t points) {
  if (!(lo > 0) || !(hi >= lo) || points == 0) {
    throw RangeError("log_grid_real: need 0 < lo <= hi and points >= 1");
  }
  std::vector<double> out;
  if (points == 1) {
    out.push_back(lo);
    return out;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < points; ++i) {
    if (i + 1 == points) {
      out.push_back(hi);
    } else if (i == 0) {
      out.push_back(lo);
    } else {
      const double t = static_cast<double>(i) / static_cast<double>(points - 1);
      out.push_back(std::exp(a + (b - a) * t));
    }
  }
  return out;
}

std::optional<std::uint64_t> first_persistent(std::span<const std::uint64_t> xs,
                                              const std::vector<bool>& holds) {
  if (xs.size() != holds.size()) {
    throw RangeError("first_persistent: size mismatch");
  }
  std::optional<std::uint64_t> from;
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (!holds[i]) break;
    from = xs[i];
  }
  return from;
}

}  // namespace primelab
