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
#include <string>

#include "oracles.hpp"
#include "primelab/chebyshev.hpp"
#include "primelab/error.hpp"
#include "primelab/grid.hpp"

using namespace primelab;

TEST_CASE("theta examples") {
  CHECK(theta(0) == 0.0);
  CHECK(theta(1) == 0.0);
  CHECK(theta(10) == doctest::Approx(5.347108).epsilon(1e-6));
  // Sum of log p over the 25 primes below 100.
  CHECK(theta(100) == doctest::Approx(oracle::theta(100)).epsilon(1e-14));
  CHECK(theta(100) == doctest::Approx(83.72839039906393).epsilon(1e-14));
}

TEST_CASE("psi examples") {
  const double l2 = std::log(2.0);
  const double l3 = std::log(3.0);
  CHECK(psi(1) == 0.0);
  CHECK(psi(10) == doctest::Approx(3 * l2 + 2 * l3 + std::log(5.0) + std::log(7.0)));
  CHECK(psi(100) == doctest::Approx(oracle::psi(100)).epsilon(1e-14));
  CHECK(psi(100) - theta(100) ==
        doctest::Approx(5 * l2 + 3 * l3 + std::log(5.0) + std::log(7.0)));
  CHECK(psi(100) - theta(100) == doctest::Approx(10.3169).epsilon(1e-5));
}

TEST_CASE("theta and psi agree with naive sums") {
  for (std::uint64_t x : {2ULL, 3ULL, 4ULL, 17ULL, 1000ULL, 4096ULL, 20000ULL}) {
    CHECK(theta(x) == doctest::Approx(oracle::theta(x)).epsilon(1e-13));
    CHECK(psi(x) == doctest::Approx(oracle::psi(x)).epsilon(1e-13));
  }
}

TEST_CASE("theta_ap") {
  CHECK(theta_ap(10, 4, 1) == doctest::Approx(std::log(5.0)));
  CHECK(theta_ap(10, 4, 3) == doctest::Approx(3.044522).epsilon(1e-6));
  CHECK(theta_ap(2, 3, 2) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(theta_ap(10, 4, 2), RangeError);
  CHECK(theta_ap(100000, 4, 1) + theta_ap(100000, 4, 3) + std::log(2.0) ==
        doctest::Approx(theta(100000)).epsilon(1e-13));
}

TEST_CASE("psi_minus_theta") {
  CHECK(psi_minus_theta(4) == doctest::Approx(std::log(2.0)));
  CHECK(psi_minus_theta(100) == doctest::Approx(psi(100) - theta(100)).epsilon(1e-12));
  CHECK_THROWS_AS(psi_minus_theta(3), RangeError);
}

TEST_CASE("Lambda sum and theta series agree on [1e2, 1e8]") {
  for (auto x : log_grid(100, 100000000, 100)) {
    REQUIRE(psi(x) == doctest::Approx(psi_theta_series(x)).epsilon(1e-9));
  }
}

TEST_CASE("profile invariants and desk-scale envelopes") {
  const auto grid = log_grid(2, 100000000, 80);
  const auto prof = chebyshev_profile(grid);
  REQUIRE(prof.samples.size() == grid.size());
  for (std::size_t i = 0; i < prof.samples.size(); ++i) {
    const auto& s = prof.samples[i];
    CHECK(s.theta <= s.psi);
    if (i > 0) {
      CHECK(s.theta >= prof.samples[i - 1].theta);
      CHECK(s.psi >= prof.samples[i - 1].psi);
    }
    const double x = static_cast<double>(s.x);
    if (s.x >= 1000) {
      CHECK(s.theta / x >= 0.8);
      CHECK(s.theta / x <= 1.1);
    }
    if (s.x >= 10000) {
      const double r = (s.psi - s.theta) / std::sqrt(x);
      CHECK(r >= 0.8);
      CHECK(r <= 1.5);
    }
  }
  CHECK(prof.samples.back().theta == doctest::Approx(theta(100000000)).epsilon(1e-13));
}

TEST_CASE("sign_change_scan witnesses verify pointwise") {
  const auto report = sign_change_scan(2, 1000, 1);
  REQUIRE_FALSE(report.changes.empty());
  for (const auto& c : report.changes) {
    const bool a = psi(c.a) - static_cast<double>(c.a) > 0.0;
    const bool b = psi(c.b) - static_cast<double>(c.b) > 0.0;
    CHECK(a != b);
    CHECK(c.b == c.a + 1);
    CHECK(c.crossing == c.b);
  }
  // Every sign change of psi(n) - n at integers in [2, 1000] is listed.
  std::size_t expected = 0;
  bool prev = psi(2) - 2.0 > 0.0;
  for (std::uint64_t n = 3; n <= 1000; ++n) {
    const bool cur = psi(n) - static_cast<double>(n) > 0.0;
    expected += cur != prev;
    prev = cur;
  }
  CHECK(report.changes.size() == expected);
}

TEST_CASE("window status follows coverage counts") {
  const auto none = sign_change_scan(600, 1000, 1000);
  CHECK(none.sharp.windows == 0);
  CHECK(none.sharp.status == WindowStatus::kNoWindow);
  CHECK(std::string(to_string(none.sharp.status)) == "no-window");

  for (std::uint64_t step : {1ULL, 50ULL, 300ULL}) {
    const auto r = sign_change_scan(100, 5000, step);
    const auto& s = r.sharp;
    if (s.windows == 0) {
      CHECK(s.status == WindowStatus::kNoWindow);
    } else if (s.covered == s.windows) {
      CHECK(s.status == WindowStatus::kAllCovered);
    } else if (s.covered == 0) {
      CHECK(s.status == WindowStatus::kUndetected);
    } else {
      CHECK(s.status == WindowStatus::kPartiallyCovered);
    }
    CHECK(r.weak.covered <= r.weak.windows);
  }
}

TEST_CASE("crossings refine coarse pairs") {
  const auto report = sign_change_scan(2, 100000, 37);
  for (const auto& c : report.changes) {
    CHECK(c.crossing > c.a);
    CHECK(c.crossing <= c.b);
    const bool a = psi(c.a) - static_cast<double>(c.a) > 0.0;
    const bool at = psi(c.crossing) - static_cast<double>(c.crossing) > 0.0;
    CHECK(a != at);
  }
  CHECK_THROWS_AS(sign_change_scan(1, 10, 1), RangeError);
  CHECK_THROWS_AS(sign_change_scan(2, 10, 0), RangeError);
}
