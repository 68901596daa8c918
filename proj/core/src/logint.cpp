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

#include "primelab/logint.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "primelab/error.hpp"

namespace primelab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kPi = std::numbers::pi;

// The series loses about (|z| - Re z) / ln 10 digits to cancellation.
constexpr double kSeriesCancellation = 9.0;
constexpr int kMaxTerms = 10000;
constexpr double kTailSpan = 20.0;

double branch_sign(ComplexValue z) {
  if (z.imag() > 0.0) return 1.0;
  if (z.imag() < 0.0) return -1.0;
  return 0.0;
}

ComplexValue ei_series(ComplexValue z) {
  // gamma + log z + sum z^k / (k k!)
  ComplexValue term = 1.0;  // z^k / k!
  ComplexValue sum = 0.0;
  const double modulus = std::abs(z);
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= z / static_cast<double>(k);
    const ComplexValue add = term / static_cast<double>(k);
    sum += add;
    if (k > modulus && std::abs(add) <= kEps * std::abs(sum)) break;
  }
  // Real axis: log|z| gives the principal value on both half-lines.
  const ComplexValue log_z(std::log(modulus),
                           z.imag() == 0.0 ? 0.0 : std::arg(z));
  return kEulerGamma + log_z + sum;
}

ComplexValue ei_asymptotic(ComplexValue z) {
  // e^z / z * sum k! / z^k, cut where the terms stop shrinking.
  ComplexValue term = 1.0;
  ComplexValue sum = 1.0;
  double last = 1.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= static_cast<double>(k) / z;
    const double size = std::abs(term);
    if (size >= last) break;
    sum += term;
    last = size;
    if (size <= kEps * std::abs(sum)) break;
  }
  return std::exp(z) / z * sum + ComplexValue(0.0, kPi * branch_sign(z));
}

ComplexValue ei_continued_fraction(ComplexValue z) {
  // E1(w), w = -z, by modified Lentz on
  // e^-w / (w + 1 - 1 / (w + 3 - 4 / (w + 5 - ...))).
  const ComplexValue w = -z;
  constexpr double kTiny = 1e-300;
  ComplexValue b = w + 1.0;
  ComplexValue c = 1.0 / kTiny;
  ComplexValue d = 1.0 / b;
  ComplexValue h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const ComplexValue delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) break;
  }
  const ComplexValue e1 = h * std::exp(-w);
  return -e1 + ComplexValue(0.0, kPi * branch_sign(z));
}

EiMethod pick(ComplexValue z, const EiConfig& config) {
  const double modulus = std::abs(z);
  if (modulus >= config.series_radius) return EiMethod::kAsymptotic;
  if (modulus - z.real() <= kSeriesCancellation) return EiMethod::kSeries;
  return EiMethod::kContinuedFraction;
}

}  // namespace

void check_finite(ComplexValue z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw RangeError(std::string(what) + ": non-finite argument");
  }
}

ComplexValue ei_by(ComplexValue z, EiMethod method, const EiConfig& config) {
  check_finite(z, "ei");
  if (z == ComplexValue(0.0, 0.0)) {
    throw RangeError("ei: z = 0 is a logarithmic singularity");
  }
  if (!(config.series_radius > 0.0)) {
    throw RangeError("ei: series radius must be positive");
  }
  if (method == EiMethod::kAuto) method = pick(z, config);
  switch (method) {
    case EiMethod::kSeries:
      return ei_series(z);
    case EiMethod::kAsymptotic:
      return ei_asymptotic(z);
    case EiMethod::kContinuedFraction:
    case EiMethod::kAuto:
      break;
  }
  return ei_continued_fraction(z);
}

ComplexValue ei(ComplexValue z, const EiConfig& config) {
  return ei_by(z, EiMethod::kAuto, config);
}

double ei(double x, const EiConfig& config) {
  return ei(ComplexValue(x, 0.0), config).real();
}

double li(double x) {
  if (!(x >= 2.0) || !std::isfinite(x)) {
    throw RangeError("li: x must be >= 2, got " + std::to_string(x));
  }
  if (x == 2.0) return 0.0;
  return ei(std::log(x)) - ei(std::numbers::ln2);
}

double li_quadrature(double x, const QuadratureSpec& spec) {
  if (!(x >= 2.0) || !std::isfinite(x)) {
    throw RangeError("li: x must be >= 2, got " + std::to_string(x));
  }
  const auto r = integrate([](double u) { return std::exp(u) / u; },
                           std::numbers::ln2, std::log(x), spec);
  return r.value;
}

LiComparison li_compare(double x, const QuadratureSpec& spec) {
  LiComparison out;
  out.series = li(x);
  out.quadrature = li_quadrature(x, spec);
  const double scale =
      std::max(std::abs(out.series), std::numeric_limits<double>::min());
  out.relative_difference = std::abs(out.series - out.quadrature) / scale;
  return out;
}

EnvelopeIntegral integral_envelope_check(double nu, double c, double x,
                                         const QuadratureSpec& spec) {
  if (!(nu > 0.0) || !(c > 0.0) || !(x > 2.0) || !std::isfinite(x)) {
    throw RangeError("integral_envelope_check: need nu > 0, C > 0, x > 2");
  }
  // t = e^u turns the integrand into e^((1 - nu) u) / u^C.
  const auto r = integrate(
      [nu, c](double u) { return std::exp((1.0 - nu) * u) / std::pow(u, c); },
      std::numbers::ln2, std::log(x), spec);
  EnvelopeIntegral out;
  out.integral = r.value;
  out.bound_ratio =
      r.value / (std::pow(x, 1.0 - nu) / std::pow(std::log(x), c));
  return out;
}

TailIntegral riemann_tail_integral(double y, const QuadratureSpec& spec) {
  if (!(y > 1.0) || !std::isfinite(y)) {
    throw RangeError("riemann_tail_integral: y must be > 1");
  }
  // t = e^u: du / ((e^(2u) - 1) u), truncated kTailSpan past log y.
  const double lo = std::log(y);
  const double hi = lo + kTailSpan;
  const auto r = integrate(
      [](double u) { return 1.0 / (std::expm1(2.0 * u) * u); }, lo, hi, spec);
  TailIntegral out;
  out.value = r.value;
  // Beyond hi the integrand is below e^(-2u) / (u (1 - e^(-2 hi))).
  out.truncation_bound =
      std::exp(-2.0 * hi) / (2.0 * hi * (-std::expm1(-2.0 * hi)));
  return out;
}

}  // namespace primelab
