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
#include <limits>
#include <numbers>

#include "primelab/error.hpp"
#include "primelab/logint.hpp"

using namespace primelab;

namespace {

// Reference values computed independently at 30 digits.
constexpr double kEi1 = 1.89511781635594;
constexpr double kEi10 = 2492.228976241877759;
constexpr double kEiMinus1 = -0.21938393439552027;
constexpr double kEi50 = 1.05856368971316909630e20;

double rel(ComplexValue a, ComplexValue b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Ei on the real axis") {
  CHECK(ei(1.0) == doctest::Approx(kEi1).epsilon(1e-14));
  CHECK(ei(10.0) == doctest::Approx(kEi10).epsilon(1e-14));
  CHECK(ei(-1.0) == doctest::Approx(kEiMinus1).epsilon(1e-14));
  CHECK(ei(50.0) == doctest::Approx(kEi50).epsilon(1e-13));
  CHECK(ei(ComplexValue(1.0, 0.0)).imag() == 0.0);
}

TEST_CASE("Ei off the axis") {
  CHECK(rel(ei(ComplexValue(1, 1)), {1.76462598556385, 2.38776985151052}) < 1e-13);
  CHECK(rel(ei(ComplexValue(0, 1)), {0.337403922900968, 2.51687939716208}) < 1e-13);
  CHECK(rel(ei(ComplexValue(3, 60)), {-0.112506567602452, 3.45658380310744}) < 1e-13);
  CHECK(rel(ei(ComplexValue(-20, 5)), {-4.77113745157653e-11, 3.14159265367270}) < 1e-13);
}

TEST_CASE("conjugate symmetry") {
  for (double re : {-30.0, -2.0, 0.5, 5.0, 25.0}) {
    for (double im : {0.3, 4.0, 40.0, 400.0}) {
      const ComplexValue z(re, im);
      const auto a = ei(z);
      const auto b = ei(std::conj(z));
      CHECK(std::abs(a - std::conj(b)) <= 1e-15 * std::abs(a));
    }
  }
}

TEST_CASE("methods agree where their regions overlap") {
  const ComplexValue near_cf(-8.0, 6.0);
  CHECK(rel(ei_by(near_cf, EiMethod::kSeries), ei_by(near_cf, EiMethod::kContinuedFraction)) <
        1e-12);
  const ComplexValue far(45.0, 10.0);
  CHECK(rel(ei_by(far, EiMethod::kAsymptotic), ei_by(far, EiMethod::kSeries)) < 1e-12);
  const ComplexValue far_cf(-10.0, 45.0);
  CHECK(rel(ei_by(far_cf, EiMethod::kAsymptotic),
            ei_by(far_cf, EiMethod::kContinuedFraction)) < 1e-12);
}

TEST_CASE("no jump across the asymptotic seam") {
  const double r = EiConfig{}.series_radius;
  for (int i = 0; i < 360; ++i) {
    const double phi = 2.0 * std::numbers::pi * (i + 0.5) / 360.0;
    const ComplexValue z = std::polar(r, phi);
    const ComplexValue w = z * (1.0 - 1e-12);
    CHECK(rel(ei(w), ei_by(w, EiMethod::kAsymptotic)) < 1e-12);
  }
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(ei(ComplexValue(0.0, 0.0)), RangeError);
  CHECK_THROWS_AS(ei(0.0), RangeError);
  CHECK_THROWS_AS(ei(std::numeric_limits<double>::quiet_NaN()), RangeError);
  CHECK_THROWS_AS(ei(ComplexValue(1.0, std::numeric_limits<double>::infinity())), RangeError);
  CHECK_THROWS_AS(ei(1.0, EiConfig{0.0}), RangeError);
  CHECK_THROWS_AS(li(1.5), RangeError);
}

TEST_CASE("li from 2") {
  CHECK(li(2.0) == 0.0);
  CHECK(li(100.0) == doctest::Approx(29.0809778039622).epsilon(1e-14));
  CHECK(li(1e6) == doctest::Approx(78626.5039956821).epsilon(1e-14));
}

TEST_CASE("li routes agree") {
  for (double x : {2.5, 10.0, 1e3, 1e6, 1e8, 1e12}) {
    const auto c = li_compare(x);
    CHECK(c.relative_difference < 1e-12);
  }
  CHECK_THROWS_AS(li_quadrature(1.0), RangeError);
}

TEST_CASE("envelope integral") {
  const auto e = integral_envelope_check(0.5, 2.0, 1e6);
  CHECK(e.integral == doctest::Approx(18.5143796506426569).epsilon(1e-12));
  CHECK(e.bound_ratio == doctest::Approx(e.integral * std::pow(std::log(1e6), 2.0) / 1e3));
  // The ratio stays bounded as x grows.
  double prev = 0.0;
  for (double x : {1e4, 1e6, 1e8, 1e10}) {
    const auto r = integral_envelope_check(0.5, 2.0, x);
    CHECK(r.bound_ratio < 10.0);
    CHECK(r.integral > prev);
    prev = r.integral;
  }
  CHECK_THROWS_AS(integral_envelope_check(0.0, 1.0, 10.0), RangeError);
  CHECK_THROWS_AS(integral_envelope_check(0.5, 1.0, 2.0), RangeError);
}

TEST_CASE("tail integral") {
  const auto t = riemann_tail_integral(10.0);
  CHECK(t.value == doctest::Approx(0.00183968694649316431).epsilon(1e-12));
  CHECK(t.truncation_bound < 1e-18);
  CHECK(riemann_tail_integral(2.0).value > riemann_tail_integral(3.0).value);
  CHECK_THROWS_AS(riemann_tail_integral(1.0), RangeError);
}
