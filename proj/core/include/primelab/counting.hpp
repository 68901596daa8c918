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
#include <optional>
#include <span>
#include <vector>

#include "primelab/parallel.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

struct PiCheckpoint {
  std::uint64_t x;
  std::uint64_t pi;
};

// Number of primes <= x, by segmented accumulation.
std::uint64_t pi(std::uint64_t x, Exec exec = {}, const SieveConfig& config = {});

// Number of primes in [lo, hi).
std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi, Exec exec = {},
                           const SieveConfig& config = {});

// pi(x) through Legendre's inclusion-exclusion, evaluated as the partial
// sieve function phi(x, a) with a = pi(sqrt(x)):
//   pi(x) = phi(x, a) + a - 1.
// Independent of the segmented sieve apart from the primes <= sqrt(x).
// Requires x >= 4.
std::uint64_t pi_legendre(std::uint64_t x);

// pi(x + y) - pi(x), sieving only (x, x + y]. Requires x >= 2, y >= 1.
std::uint64_t pi_interval(std::uint64_t x, std::uint64_t y);

// Primes p <= x with p = a (mod q). Requires q >= 1, a < q, gcd(a, q) = 1.
std::uint64_t pi_ap(std::uint64_t x, std::uint64_t q, std::uint64_t a);

// Validates an arithmetic-progression residue class; throws RangeError.
void check_residue_class(std::uint64_t q, std::uint64_t a);

// pi at every grid point in one streaming pass. Grid must be ascending.
std::vector<PiCheckpoint> pi_checkpoints(std::span<const std::uint64_t> grid,
                                         Exec exec = {});

struct BrunTitchmarshReport {
  std::uint64_t count = 0;  // pi(x + y) - pi(x)
  double bound = 0.0;       // 2y / (log y + 3.53)
  bool satisfied = false;
};

// Requires x >= 2, y >= 2.
BrunTitchmarshReport brun_titchmarsh_ratio(std::uint64_t x, std::uint64_t y);

struct BrunTitchmarshRow {
  std::uint64_t x;
  std::uint64_t y;
  BrunTitchmarshReport report;
};

struct BrunTitchmarshScan {
  std::vector<BrunTitchmarshRow> rows;
  std::size_t violations = 0;
  // Smallest scanned x from which every later row satisfies the bound.
  std::optional<std::uint64_t> holds_from;
};

// Brun-Titchmarsh at each grid x with y = floor(x^exponent) (at least 2).
BrunTitchmarshScan brun_titchmarsh_scan(std::span<const std::uint64_t> grid,
                                        double exponent, Exec exec = {});

}  // namespace primelab
