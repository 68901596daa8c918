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

#include <complex>

#include "primelab/quadrature.hpp"

namespace primelab {

using ComplexValue = std::complex<double>;

// Throws RangeError unless both components are finite.
void check_finite(ComplexValue z, const char* what);

struct EiConfig {
  // Power series inside this modulus, asymptotic expansion outside.
  double series_radius = 40.0;
};

enum class EiMethod { kAuto, kSeries, kAsymptotic, kContinuedFraction };

// Principal-branch exponential integral. On the real axis the value is the
// real (Cauchy principal value) Ei; off it the cut runs along the negative
// real axis. z = 0 is rejected.
ComplexValue ei(ComplexValue z, const EiConfig& config = {});
double ei(double x, const EiConfig& config = {});

// Forces one expansion; used by seam tests. kAuto behaves like ei().
ComplexValue ei_by(ComplexValue z, EiMethod method, const EiConfig& config = {});

// Integral of dt / log t from 2 to x, so li(2) = 0. Requires x >= 2.
// Evaluated as Ei(log x) - Ei(log 2).
double li(double x);

// Same integral by adaptive quadrature of e^u / u over [log 2, log x].
double li_quadrature(double x, const QuadratureSpec& spec = {});

struct LiComparison {
  double series = 0.0;
  double quadrature = 0.0;
  double relative_difference = 0.0;  // |series - quadrature| / max(|series|, tiny)
};

LiComparison li_compare(double x, const QuadratureSpec& spec = {});

struct EnvelopeIntegral {
  double integral = 0.0;     // integral of dt / (t^nu log^C t) over [2, x]
  double bound_ratio = 0.0;  // integral / (x^(1 - nu) / log^C x)
};

// Requires nu > 0, C > 0, x > 2.
EnvelopeIntegral integral_envelope_check(double nu, double c, double x,
                                         const QuadratureSpec& spec = {});

struct TailIntegral {
  double value = 0.0;
  double truncation_bound = 0.0;  // upper bound on the discarded remainder
};

// Integral of dt / (t (t^2 - 1) log t) over [y, infinity). Requires y > 1.
TailIntegral riemann_tail_integral(double y, const QuadratureSpec& spec = {});

}  // namespace primelab
