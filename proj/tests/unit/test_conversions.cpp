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

#include "oracles.hpp"
#include "primelab/chebyshev.hpp"
#include "primelab/conversions.hpp"
#include "primelab/counting.hpp"
#include "primelab/error.hpp"
#include "primelab/grid.hpp"

using namespace primelab;

TEST_CASE("pi from theta at small x") {
  for (auto mode : {PiFromThetaMode::kExactSum, PiFromThetaMode::kPiecewiseIntegral}) {
    CHECK(pi_from_theta(3, mode) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pi_from_theta(10, mode) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(pi_from_theta(100, mode) == doctest::Approx(25.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(pi_from_theta(2, PiFromThetaMode::kExactSum), RangeError);
}

TEST_CASE("theta from pi") {
  CHECK(theta_from_pi(10) == doctest::Approx(5.34710753071747).epsilon(1e-13));
  CHECK(theta_from_pi(100) == doctest::Approx(oracle::theta(100)).epsilon(1e-13));
  CHECK_THROWS_AS(theta_from_pi(1), RangeError);
}

TEST_CASE("mangoldt log sum") {
  const auto c = mangoldt_log_sum(4);
  CHECK(c.lhs == doctest::Approx(2.5));  // Lambda(n)/log n: 1 + 1 + 1/2
  CHECK(c.discrepancy < 1e-14);
}

TEST_CASE("reciprocal prime sum") {
  const auto c = reciprocal_prime_sum(10);
  const double naive = 1.0 / 2 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7;
  CHECK(c.lhs == doctest::Approx(naive).epsilon(1e-15));
  CHECK(c.lhs == doctest::Approx(1.176190).epsilon(1e-6));
  CHECK(c.rhs == doctest::Approx(naive).epsilon(1e-14));
  // pi(10)/10 plus the integral of pi(t)/t^2 over [2, 10].
  CHECK(c.rhs - 0.4 == doctest::Approx(0.776190).epsilon(1e-6));

  // sum 1/p - log log x tends to the Meissel-Mertens constant.
  const auto big = reciprocal_prime_sum(1000000);
  CHECK(std::abs(big.lhs - std::log(std::log(1e6)) - 0.2614972128) < 1e-3);
}

TEST_CASE("identities hold across a grid") {
  for (auto x : log_grid(3, 10000000, 25)) {
    const auto r = conversion_identities(x);
    CHECK(r.max_discrepancy <= 1e-12);
    CHECK(r.pi_exact_sum.lhs == static_cast<double>(pi(x)));
    CHECK(r.theta_from_pi.lhs == doctest::Approx(theta(x)).epsilon(1e-14));
  }
}

TEST_CASE("progression versions") {
  for (std::uint64_t a : {1ULL, 3ULL}) {
    const auto r = ap_conversions(100000, 4, a);
    CHECK(r.max_discrepancy <= 1e-12);
    CHECK(r.pi_from_theta.lhs == static_cast<double>(pi_ap(100000, 4, a)));
    CHECK(r.theta_from_pi.lhs == doctest::Approx(theta_ap(100000, 4, a)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(ap_conversions(100, 6, 3), RangeError);
}
