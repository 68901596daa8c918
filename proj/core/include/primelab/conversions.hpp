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

#include <cstdint>

namespace primelab {

// Both sides of an identity between prime sums and integrals of step
// functions. Integrals of a step function are summed in closed form over
// each interval on which it is constant.
struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double discrepancy = 0.0;  // |lhs - rhs| / |lhs|, 0 when both vanish
};

enum class PiFromThetaMode {
  kExactSum,           // theta(x)/log x + sum log p (1/log p - 1/log x)
  kPiecewiseIntegral,  // theta(x)/log x + closed-form integral of theta(t)/(t log^2 t)
};

// theta(x)/log x + integral_2^x theta(t) / (t log^2 t) dt. Requires x >= 3.
double pi_from_theta(std::uint64_t x, PiFromThetaMode mode);

// pi(x) log x - integral_2^x pi(t) / t dt. Requires x >= 3.
double theta_from_pi(std::uint64_t x);

// lhs: sum over 2 <= n <= x of Lambda(n) / log n.
// rhs: psi(x)/log x + integral_2^x psi(t) / (t log^2 t) dt. Requires x >= 2.
IdentityCheck mangoldt_log_sum(std::uint64_t x);

// lhs: sum of 1/p over p <= x. rhs: pi(x)/x + integral_2^x pi(t)/t^2 dt.
// Requires x >= 2.
IdentityCheck reciprocal_prime_sum(std::uint64_t x);

struct ConversionReport {
  std::uint64_t x = 0;
  IdentityCheck pi_exact_sum;      // lhs pi(x), rhs telescoped sum
  IdentityCheck pi_piecewise;      // lhs pi(x), rhs piecewise integral
  IdentityCheck modes_agree;       // lhs telescoped, rhs piecewise
  IdentityCheck theta_from_pi;     // lhs theta(x)
  IdentityCheck mangoldt_log_sum;
  IdentityCheck reciprocal_prime_sum;
  double max_discrepancy = 0.0;
};

// All of the above from one sieve pass. Requires x >= 3.
ConversionReport conversion_identities(std::uint64_t x);

// The same identities restricted to primes p = a (mod q):
// pi(x;q,a) from theta(t;q,a), theta(x;q,a) from pi(t;q,a), and the sum of
// 1/p from pi(t;q,a).
struct ApConversionReport {
  std::uint64_t x = 0;
  std::uint64_t q = 0;
  std::uint64_t a = 0;
  IdentityCheck pi_from_theta;
  IdentityCheck theta_from_pi;
  IdentityCheck reciprocal_sum;
  double max_discrepancy = 0.0;
};

// Requires x >= 3 and a valid residue class (q >= 1, a < q, gcd(a, q) = 1).
ApConversionReport ap_conversions(std::uint64_t x, std::uint64_t q,
                                  std::uint64_t a);

}  // namespace primelab
