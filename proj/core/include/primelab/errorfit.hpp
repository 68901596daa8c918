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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "primelab/parallel.hpp"
#include "primelab/quadrature.hpp"

namespace primelab {

struct ErrorRow {
  std::uint64_t x = 0;
  double e_pi = 0.0;     // pi(x) - li(x)
  double e_theta = 0.0;  // theta(x) - x
  double e_psi = 0.0;    // psi(x) - x
  // log|E| / log x; NaN when E = 0.
  double eps_eff_pi = 0.0;
  double eps_eff_theta = 0.0;
  // |li series - li quadrature|, the spread between two independent li routes.
  double li_gap = 0.0;
};

struct ErrorProfile {
  std::vector<ErrorRow> rows;  // ascending in x
};

// Grid ascending within [10, 10^8].
ErrorProfile build_profile(std::span<const std::uint64_t> grid,
                           const QuadratureSpec& quad = {}, Exec exec = {});

// Columns: x,e_pi,e_theta,e_psi,eps_eff_pi,eps_eff_theta,li_gap.
void write_csv(std::ostream& os, const ErrorProfile& profile);

struct EnvelopeConfig {
  double c_dvp = 1.0;          // x exp(-c sqrt(log x))
  double c_vinogradov = 1.0;   // x exp(-c (log x)^(3/5) (log log x)^(-1/5))
};

struct EnvelopeFamily {
  std::string name;
  double max_ratio_pi = 0.0;     // max |E_pi| / envelope over the profile
  double max_ratio_theta = 0.0;
  std::uint64_t worst_x_pi = 0;
  std::uint64_t worst_x_theta = 0;
};

struct EnvelopeViolation {
  std::uint64_t x = 0;
  std::string which;  // "pi" or "theta"
  double ratio = 0.0;  // |E| / x^(7/12)
};

struct EnvelopeReport {
  std::vector<EnvelopeFamily> families;
  // Rows with x >= 10 where |E_pi| or |E_theta| exceeds x^(7/12).
  std::vector<EnvelopeViolation> violations;
  bool pi_within = true;
  bool theta_within = true;
};

EnvelopeReport envelope_report(const ErrorProfile& profile,
                               const EnvelopeConfig& config = {});

struct EpsilonRow {
  std::uint64_t x = 0;
  double eps_pi = 0.0;     // 7/12 - eps_eff_pi (NaN when undefined)
  double eps_theta = 0.0;  // 7/12 - eps_eff_theta
};

struct EpsilonFit {
  std::vector<EpsilonRow> rows;
  double slope_pi = 0.0;  // least-squares slope of eps_eff_pi against log x
  double intercept_pi = 0.0;
  double slope_theta = 0.0;
  double intercept_theta = 0.0;
  std::size_t used_pi = 0;
  std::size_t used_theta = 0;
  bool all_eps_pi_positive = false;
  bool all_eps_theta_positive = false;
};

// Requires at least 10 rows spanning at least 3 decades, and at least two
// distinct x with defined eps_eff for each fitted series.
EpsilonFit epsilon_fit(const ErrorProfile& profile);

void write_csv(std::ostream& os, const EpsilonFit& fit);

}  // namespace primelab
