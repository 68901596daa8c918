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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "primelab/error.hpp"
#include "primelab/grid.hpp"
#include "primelab/mertens.hpp"
#include "primelab/sieve.hpp"

using namespace primelab;

TEST_CASE("mertens examples") {
  CHECK(mertens(1) == 1);
  CHECK(mertens(2) == 0);
  CHECK(mertens(10) == -1);
  CHECK_THROWS_AS(mertens(0), RangeError);
}

TEST_CASE("squarefree examples") {
  CHECK(squarefree_count(1) == 1);
  CHECK(squarefree_count(10) == 7);
  CHECK(squarefree_count(100) == 61);
}

TEST_CASE("mertens matches naive factorization up to 1e5") {
  std::int64_t naive = 0;
  const auto grid = log_grid(1, 100000, 50);
  std::size_t g = 0;
  for (std::uint64_t n = 1; n <= 100000 && g < grid.size(); ++n) {
    naive += oracle::mobius(n);
    if (n == grid[g]) {
      REQUIRE(mertens(n) == naive);
      ++g;
    }
  }
}

TEST_CASE("Dirichlet sum of mu vanishes except at 1") {
  const auto mu = mobius_range(1, 10001);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    int s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      s += mu[d - 1];
      if (d * d != n) s += mu[n / d - 1];
    }
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("profile invariants") {
  std::vector<std::uint64_t> grid;
  for (std::uint64_t x = 1; x <= 3000; ++x) grid.push_back(x);
  const auto prof = mertens_profile(grid);
  REQUIRE(prof.samples.size() == grid.size());
  for (std::size_t i = 1; i < prof.samples.size(); ++i) {
    CHECK(std::llabs(prof.samples[i].m - prof.samples[i - 1].m) <= 1);
    const auto dq = prof.samples[i].q - prof.samples[i - 1].q;
    CHECK((dq == 0 || dq == 1));
  }
}

TEST_CASE("squarefree density envelope") {
  const double c = 6.0 / (std::numbers::pi * std::numbers::pi);
  for (const auto& s : mertens_profile(log_grid(100, 100000000, 40)).samples) {
    const double x = static_cast<double>(s.x);
    CHECK(std::abs(static_cast<double>(s.q) - c * x) <= 2.0 * std::sqrt(x));
  }
}

TEST_CASE("mertens_envelope") {
  const auto env = mertens_envelope(log_grid(2, 10000000, 60));
  CHECK(env.all_within);
  CHECK(env.rows.front().x == 2);
  CHECK(env.rows.front().m == 0);
  for (const auto& r : env.rows) {
    if (r.x == 10) {
      CHECK(r.m == -1);
      CHECK(r.envelope_ratio == doctest::Approx(1.0 / std::pow(10.0, 7.0 / 12.0)));
    }
    CHECK(r.normalized >= env.min_normalized);
    CHECK(r.normalized <= env.max_normalized);
  }
  const std::vector<std::uint64_t> bad{1, 5};
  CHECK_THROWS_AS(mertens_envelope(bad), RangeError);
}

TEST_CASE("mertens_scan checks every integer") {
  const auto s = mertens_scan(100000);
  CHECK(s.all_within());
  CHECK(s.final_m == mertens(100000));
  CHECK(s.worst_ratio <= 1.0);
  std::int64_t m = 0;
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    m += oracle::mobius(n);
    worst = std::max(worst, std::abs(static_cast<double>(m)) /
                                std::pow(static_cast<double>(n), 7.0 / 12.0));
  }
  CHECK(s.worst_ratio == doctest::Approx(worst));
}

TEST_CASE("truncated 1/zeta(2) converges") {
  const double target = 6.0 / (std::numbers::pi * std::numbers::pi);
  const double a = std::abs(inverse_zeta_partial(1000) - target);
  const double b = std::abs(inverse_zeta_partial(1000000) - target);
  CHECK(b < a);
  CHECK(b <= 1e-3);
  CHECK_THROWS_AS(inverse_zeta_partial(10, 1.0), RangeError);
}
