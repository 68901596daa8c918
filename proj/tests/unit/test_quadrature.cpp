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
#include "primelab/quadrature.hpp"

using namespace primelab;

TEST_CASE("smooth integrands") {
  const auto s = integrate([](double t) { return std::sin(t); }, 0.0, std::numbers::pi);
  CHECK(s.converged);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-14));

  const auto e = integrate([](double t) { return std::exp(t); }, 0.0, 5.0);
  CHECK(e.value == doctest::Approx(std::expm1(5.0)).epsilon(1e-14));

  const auto g = integrate([](double t) { return 1.0 / (1.0 + t * t); }, -20.0, 20.0);
  CHECK(g.value == doctest::Approx(2.0 * std::atan(20.0)).epsilon(1e-13));
}

TEST_CASE("endpoint singularity converges with subdivision") {
  const auto r = integrate([](double t) { return std::sqrt(t); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(r.evaluations > 15);
}

TEST_CASE("agrees with composite Simpson on a log kernel") {
  auto f = [](double t) { return 1.0 / std::log(t); };
  const auto r = integrate(f, 2.0, 1000.0);
  CHECK(r.value == doctest::Approx(oracle::simpson(f, 2.0, 1000.0, 200000)).epsilon(1e-10));
}

TEST_CASE("reversed and empty intervals") {
  auto f = [](double t) { return t * t; };
  CHECK(integrate(f, 3.0, 1.0).value == doctest::Approx(-26.0 / 3.0));
  const auto z = integrate(f, 2.0, 2.0);
  CHECK(z.value == 0.0);
  CHECK(z.converged);
}

TEST_CASE("tolerance validation") {
  CHECK_THROWS_AS(validate(QuadratureSpec{0.0, 1e-10, 10}), RangeError);
  CHECK_THROWS_AS(validate(QuadratureSpec{1e-10, -1.0, 10}), RangeError);
  CHECK_THROWS_AS(validate(QuadratureSpec{1e-10, 1e-10, 0}), RangeError);
  CHECK_NOTHROW(validate(QuadratureSpec{}));
}

TEST_CASE("depth limit reports non-convergence") {
  const QuadratureSpec tight{1e-300, 1e-300, 2};
  const auto r = integrate([](double t) { return std::sqrt(t); }, 0.0, 1.0, tight);
  CHECK_FALSE(r.converged);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
}
