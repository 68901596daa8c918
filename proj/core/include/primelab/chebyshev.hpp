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

struct ChebyshevSample {
  std::uint64_t x = 0;
  double theta = 0.0;
  double psi = 0.0;
};

// Rows ascending in x; theta <= psi at every row.
struct ChebyshevProfile {
  std::vector<ChebyshevSample> samples;
};

// Sum of log p over primes p <= x (compensated).
double theta(std::uint64_t x, Exec exec = {});

// Sum of Lambda(n) over n <= x (compensated).
double psi(std::uint64_t x, Exec exec = {});

// psi(x) as the finite series theta(x) + theta(x^(1/2)) + ... truncated at
// k = floor(log2 x). Independent route to psi().
double psi_theta_series(std::uint64_t x);

// Sum of log p over primes p <= x with p = a (mod q).
double theta_ap(std::uint64_t x, std::uint64_t q, std::uint64_t a);

// psi(x) - theta(x) through the series tail. Requires x >= 4.
double psi_minus_theta(std::uint64_t x);

// theta and psi at each grid point, one streaming pass. Grid ascending.
ChebyshevProfile chebyshev_profile(std::span<const std::uint64_t> grid,
                                   Exec exec = {});

// Columns: x,theta,psi,theta_minus_x,psi_minus_x.
void write_csv(std::ostream& os, const ChebyshevProfile& profile);

struct SignChange {
  std::uint64_t a = 0;         // sample before the change
  std::uint64_t b = 0;         // sample after the change (a + step)
  std::uint64_t crossing = 0;  // first integer c in (a, b] whose sign differs from a's
};

enum class WindowStatus {
  kAllCovered,
  kPartiallyCovered,
  kUndetected,
  kNoWindow,
};

// Windows [x, floor(factor * x)] starting at each sample x that fit in the
// scanned range, and how many contain a detected change.
struct WindowCoverage {
  double factor = 0.0;
  std::size_t windows = 0;
  std::size_t covered = 0;
  std::vector<std::uint64_t> uncovered;  // first few uncovered window starts
  WindowStatus status = WindowStatus::kNoWindow;
};

struct SignChangeReport {
  std::vector<SignChange> changes;
  WindowCoverage sharp;  // factor 2.02
  WindowCoverage weak;   // factor 19, informational
};

// Sign changes of psi(x) - x between consecutive samples lo, lo + step, ...
// (<= hi). Requires 2 <= lo < hi, step >= 1.
SignChangeReport sign_change_scan(std::uint64_t lo, std::uint64_t hi,
                                  std::uint64_t step);

const char* to_string(WindowStatus status) noexcept;

}  // namespace primelab
