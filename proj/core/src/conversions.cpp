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

#include "primelab/conversions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "primelab/counting.hpp"
#include "primelab/error.hpp"
#include "primelab/sieve.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

// Closed forms on a block [a, b] where the step function equals c.
double block_t_log2(double a, double b) {  // integral dt / (t log^2 t)
  return std::log1p((b - a) / a) / (std::log(a) * std::log(b));
}
double block_t(double a, double b) {  // integral dt / t
  return std::log1p((b - a) / a);
}
double block_t2(double a, double b) {  // integral dt / t^2
  return (b - a) / (a * b);
}

// Running state for one sieve pass: the three step functions pi, theta, psi
// and their block integrals up to the last jump.
struct Pass {
  double log_x = 0.0;

  CompensatedSum pi;
  CompensatedSum theta;
  CompensatedSum psi;
  std::uint64_t prime_count = 0;

  CompensatedSum telescoped;     // sum log p (1/log p - 1/log x)
  CompensatedSum recip;          // sum 1/p
  CompensatedSum lambda_over_log;  // sum Lambda(n) / log n

  CompensatedSum int_theta;   // theta(t) / (t log^2 t)
  CompensatedSum int_pi_t;    // pi(t) / t
  CompensatedSum int_pi_t2;   // pi(t) / t^2
  CompensatedSum int_psi;     // psi(t) / (t log^2 t)

  double last_prime = 0.0;
  double last_power = 0.0;

  void close_prime_block(double b) {
    if (last_prime == 0.0 || b == last_prime) return;
    const double a = last_prime;
    int_theta.add(theta.value() * block_t_log2(a, b));
    const double c = static_cast<double>(prime_count);
    int_pi_t.add(c * block_t(a, b));
    int_pi_t2.add(c * block_t2(a, b));
  }

  void close_power_block(double b) {
    if (last_power == 0.0 || b == last_power) return;
    int_psi.add(psi.value() * block_t_log2(last_power, b));
  }

  void add_prime(std::uint64_t p) {
    const double pd = static_cast<double>(p);
    const double lp = std::log(pd);
    close_prime_block(pd);
    theta.add(lp);
    ++prime_count;
    telescoped.add(lp * (1.0 / lp - 1.0 / log_x));
    recip.add(1.0 / pd);
    last_prime = pd;
  }

  void add_power(std::uint64_t n, double lambda) {
    const double nd = static_cast<double>(n);
    close_power_block(nd);
    psi.add(lambda);
    lambda_over_log.add(lambda / std::log(nd));
    last_power = nd;
  }

  void finish(double x) {
    close_prime_block(x);
    close_power_block(x);
  }
};

IdentityCheck check(double lhs, double rhs) {
  IdentityCheck c{lhs, rhs, 0.0};
  const double diff = std::abs(lhs - rhs);
  if (diff != 0.0) c.discrepancy = diff / std::abs(lhs);
  return c;
}

void require(std::uint64_t x, std::uint64_t min, const char* what) {
  if (x < min) {
    throw RangeError(std::string(what) + ": x must be >= " + std::to_string(min));
  }
}

template <class Keep>
Pass run_pass(std::uint64_t x, bool with_powers, Keep keep) {
  Pass pass;
  pass.log_x = std::log(static_cast<double>(x));
  SegmentedSieve sieve(2, x + 1, {},
                       with_powers ? SegmentTables::kMangoldt
                                   : SegmentTables::kFlags);
  sieve.for_each_segment([&](const PrimeSegment& seg) {
    if (!with_powers) {
      seg.for_each_prime([&](std::uint64_t p) {
        if (keep(p)) pass.add_prime(p);
      });
      return;
    }
    const auto lambda = seg.mangoldt_table();
    for (std::uint64_t n = seg.lo(); n < seg.hi(); ++n) {
      const double v = lambda[static_cast<std::size_t>(n - seg.lo())];
      if (v == 0.0) continue;
      pass.add_power(n, v);
      if (seg.is_prime(n)) pass.add_prime(n);
    }
  });
  pass.finish(static_cast<double>(x));
  return pass;
}

Pass full_pass(std::uint64_t x) {
  return run_pass(x, true, [](std::uint64_t) { return true; });
}

double exact_sum_value(const Pass& p) {
  return p.theta.value() / p.log_x + p.telescoped.value();
}
double piecewise_value(const Pass& p) {
  return p.theta.value() / p.log_x + p.int_theta.value();
}
double theta_from_pi_value(const Pass& p) {
  return static_cast<double>(p.prime_count) * p.log_x - p.int_pi_t.value();
}
double reciprocal_rhs(const Pass& p, double x) {
  return static_cast<double>(p.prime_count) / x + p.int_pi_t2.value();
}

}  // namespace

double pi_from_theta(std::uint64_t x, PiFromThetaMode mode) {
  require(x, 3, "pi_from_theta");
  const Pass p = run_pass(x, false, [](std::uint64_t) { return true; });
  return mode == PiFromThetaMode::kExactSum ? exact_sum_value(p)
                                            : piecewise_value(p);
}

double theta_from_pi(std::uint64_t x) {
  require(x, 3, "theta_from_pi");
  return theta_from_pi_value(
      run_pass(x, false, [](std::uint64_t) { return true; }));
}

IdentityCheck mangoldt_log_sum(std::uint64_t x) {
  require(x, 2, "mangoldt_log_sum");
  const Pass p = full_pass(x);
  return check(p.lambda_over_log.value(),
               p.psi.value() / p.log_x + p.int_psi.value());
}

IdentityCheck reciprocal_prime_sum(std::uint64_t x) {
  require(x, 2, "reciprocal_prime_sum");
  const Pass p = run_pass(x, false, [](std::uint64_t) { return true; });
  return check(p.recip.value(), reciprocal_rhs(p, static_cast<double>(x)));
}

ConversionReport conversion_identities(std::uint64_t x) {
  require(x, 3, "conversion_identities");
  const Pass p = full_pass(x);
  const double xd = static_cast<double>(x);
  const double pi_x = static_cast<double>(p.prime_count);
  ConversionReport r;
  r.x = x;
  r.pi_exact_sum = check(pi_x, exact_sum_value(p));
  r.pi_piecewise = check(pi_x, piecewise_value(p));
  r.modes_agree = check(exact_sum_value(p), piecewise_value(p));
  r.theta_from_pi = check(p.theta.value(), theta_from_pi_value(p));
  r.mangoldt_log_sum = check(p.lambda_over_log.value(),
                             p.psi.value() / p.log_x + p.int_psi.value());
  r.reciprocal_prime_sum = check(p.recip.value(), reciprocal_rhs(p, xd));
  r.max_discrepancy = std::max(
      {r.pi_exact_sum.discrepancy, r.pi_piecewise.discrepancy,
       r.modes_agree.discrepancy, r.theta_from_pi.discrepancy,
       r.mangoldt_log_sum.discrepancy, r.reciprocal_prime_sum.discrepancy});
  return r;
}

ApConversionReport ap_conversions(std::uint64_t x, std::uint64_t q,
                                  std::uint64_t a) {
  check_residue_class(q, a);
  require(x, 3, "ap_conversions");
  const Pass p =
      run_pass(x, false, [q, a](std::uint64_t n) { return n % q == a; });
  ApConversionReport r;
  r.x = x;
  r.q = q;
  r.a = a;
  r.pi_from_theta =
      check(static_cast<double>(p.prime_count), piecewise_value(p));
  r.theta_from_pi = check(p.theta.value(), theta_from_pi_value(p));
  r.reciprocal_sum =
      check(p.recip.value(), reciprocal_rhs(p, static_cast<double>(x)));
  r.max_discrepancy =
      std::max({r.pi_from_theta.discrepancy, r.theta_from_pi.discrepancy,
                r.reciprocal_sum.discrepancy});
  return r;
}

}  // namespace primelab
