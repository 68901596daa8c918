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
#include <vector>

#include "primelab/parallel.hpp"

namespace primelab {

struct MertensSample {
  std::uint64_t x = 0;
  std::int64_t m = 0;   // M(x)
  std::uint64_t q = 0;  // squarefree integers <= x
};

struct MertensProfile {
  std::vector<MertensSample> samples;
};

// M(x) = sum of mu(n), n <= x. Requires x >= 1.
std::int64_t mertens(std::uint64_t x, Exec exec = {});

// Q(x) = number of squarefree n <= x. Requires x >= 1.
std::uint64_t squarefree_count(std::uint64_t x, Exec exec = {});

// M and Q at every grid point (ascending, >= 1) in one streaming pass.
MertensProfile mertens_profile(std::span<const std::uint64_t> grid,
                               Exec exec = {});

// Columns: x,M,Q.
void write_csv(std::ostream& os, const MertensProfile& profile);

struct MertensEnvelopeRow {
  std::uint64_t x = 0;
  std::int64_t m = 0;
  double envelope_ratio = 0.0;  // |M| / x^(7/12)
  double normalized = 0.0;      // M / sqrt(x)
};

struct MertensEnvelope {
  std::vector<MertensEnvelopeRow> rows;
  bool all_within = true;  // |M| <= x^(7/12) on every row
  double min_normalized = 0.0;
  double max_normalized = 0.0;
};

// Grid within [2, 10^8].
MertensEnvelope mertens_envelope(std::span<const std::uint64_t> grid,
                                 Exec exec = {});

// |M(x)| <= x^(7/12) checked at every integer 1 <= x <= limit.
struct MertensScan {
  std::uint64_t limit = 0;
  std::uint64_t violations = 0;
  std::uint64_t first_violation = 0;  // 0 when none
  double worst_ratio = 0.0;           // max |M(x)| / x^(7/12)
  std::uint64_t worst_x = 0;
  double min_normalized = 0.0;  // min M(x)/sqrt(x), x >= 1
  std::uint64_t min_x = 0;
  double max_normalized = 0.0;
  std::uint64_t max_x = 0;
  std::int64_t final_m = 0;
  bool all_within() const noexcept { return violations == 0; }
};

MertensScan mertens_scan(std::uint64_t limit, Exec exec = {});

// sum_{n<=N} M(n) (n^-s - (n+1)^-s): the truncation of s * int_1^inf
// M(x) x^-(s+1) dx, which tends to 1/zeta(s). Requires N >= 1, s > 1.
double inverse_zeta_partial(std::uint64_t n_max, double s = 2.0,
                            Exec exec = {});

}  // namespace primelab
