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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "primelab/error.hpp"

namespace primelab {

// Ordinates gamma of zeta zeros rho = 1/2 + i gamma, strictly ascending.
struct ZeroList {
  std::vector<double> gammas;
  std::string source;
  double height = 0.0;  // every ordinate is <= height
};

enum class ZeroErrorKind {
  kIo,        // file could not be opened or read
  kParse,     // a line is not a decimal number
  kOrdering,  // not strictly ascending
  kEmpty,     // no ordinates
  kValue,     // ordinate <= 14, non-finite, or above the declared height
  kMismatch,  // leading ordinates differ from the known first zeros
};

class ZeroTableError : public DataError {
 public:
  ZeroTableError(ZeroErrorKind kind, const std::string& message)
      : DataError(message), kind_(kind) {}
  ZeroErrorKind kind() const noexcept { return kind_; }

 private:
  ZeroErrorKind kind_;
};

const char* to_string(ZeroErrorKind kind) noexcept;

// One ordinate per line; blank lines and lines starting with '#' are
// skipped. A comment of the form "# height <H>" declares the table height;
// without one the height is the last ordinate.
ZeroList parse_zeros(std::istream& in, const std::string& source);
ZeroList load_zeros(const std::string& path);

// The first k ordinates; height becomes the k-th ordinate.
ZeroList zero_prefix(const ZeroList& zeros, std::size_t k);

// (T / 2pi) log(T / 2pi) - T / 2pi + 7/8.
double zero_count_main_term(double t);

struct ZeroCountReport {
  std::size_t counted = 0;  // ordinates <= T
  double main_term = 0.0;
  double deviation = 0.0;   // counted - main_term
};

// Requires 0 < T <= zeros.height.
ZeroCountReport zero_count_check(const ZeroList& zeros, double t);

// x - sum over the first K zeros of 2 Re(x^rho / rho). Requires x >= 2, x not
// an integer prime power, K <= zeros.gammas.size().
double psi_landau(double x, const ZeroList& zeros, std::size_t k);

struct RiemannOptions {
  // Adds the constant -log 2 and the integral over [x^(1/n), inf) to each
  // n-term, plus li(2) to move li to the integral from 0.
  bool tail_terms = true;
};

// sum over n <= N with x^(1/n) >= 2 of mu(n)/n times
//   li(x^(1/n)) - sum_{k<=K} 2 Re Ei(rho_k log x / n)  (+ tail terms).
// Requires x >= 2, N >= 1, K <= zeros.gammas.size().
double pi_riemann(double x, std::uint64_t n_terms, const ZeroList& zeros,
                  std::size_t k, const RiemannOptions& options = {});

}  // namespace primelab
