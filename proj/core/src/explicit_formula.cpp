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

#include "primelab/explicit_formula.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "primelab/logint.hpp"
#include "primelab/sieve.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

constexpr double kKnownZeros[3] = {14.134725, 21.022040, 25.010858};
constexpr double kKnownTolerance = 1e-4;
constexpr double kMinOrdinate = 14.0;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void fail(ZeroErrorKind kind, const std::string& source,
                       std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "zero table " << source;
  if (line > 0) os << " line " << line;
  os << ": " << what;
  throw ZeroTableError(kind, os.str());
}

void require_k(const ZeroList& zeros, std::size_t k) {
  if (k > zeros.gammas.size()) {
    throw RangeError("explicit formula: K = " + std::to_string(k) +
                     " exceeds the table length " +
                     std::to_string(zeros.gammas.size()));
  }
}

}  // namespace

const char* to_string(ZeroErrorKind kind) noexcept {
  switch (kind) {
    case ZeroErrorKind::kIo:
      return "io";
    case ZeroErrorKind::kParse:
      return "parse";
    case ZeroErrorKind::kOrdering:
      return "ordering";
    case ZeroErrorKind::kEmpty:
      return "empty";
    case ZeroErrorKind::kValue:
      return "value";
    case ZeroErrorKind::kMismatch:
      return "mismatch";
  }
  return "unknown";
}

ZeroList parse_zeros(std::istream& in, const std::string& source) {
  ZeroList zeros;
  zeros.source = source;
  double declared = 0.0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      std::istringstream comment(text.substr(1));
      std::string key;
      std::string value;
      if (comment >> key >> value && key == "height") {
        if (!parse_double(value, declared) || !std::isfinite(declared)) {
          fail(ZeroErrorKind::kParse, source, line, "bad height '" + value + "'");
        }
      }
      continue;
    }
    double gamma = 0.0;
    if (!parse_double(text, gamma)) {
      fail(ZeroErrorKind::kParse, source, line, "not a number: '" + text + "'");
    }
    if (!std::isfinite(gamma) || gamma <= kMinOrdinate) {
      fail(ZeroErrorKind::kValue, source, line,
           "ordinate " + text + " must be a finite value > 14");
    }
    if (!zeros.gammas.empty() && gamma <= zeros.gammas.back()) {
      fail(ZeroErrorKind::kOrdering, source, line,
           "ordinate " + text + " is not above the previous one");
    }
    zeros.gammas.push_back(gamma);
  }
  if (in.bad()) fail(ZeroErrorKind::kIo, source, 0, "read failure");
  if (zeros.gammas.empty()) {
    fail(ZeroErrorKind::kEmpty, source, 0, "no ordinates");
  }
  const std::size_t known = std::min<std::size_t>(3, zeros.gammas.size());
  for (std::size_t i = 0; i < known; ++i) {
    if (std::abs(zeros.gammas[i] - kKnownZeros[i]) > kKnownTolerance) {
      std::ostringstream os;
      os << "ordinate #" << (i + 1) << " = " << zeros.gammas[i]
         << " differs from " << kKnownZeros[i] << " by more than 1e-4";
      fail(ZeroErrorKind::kMismatch, source, 0, os.str());
    }
  }
  if (declared > 0.0) {
    if (zeros.gammas.back() > declared) {
      fail(ZeroErrorKind::kValue, source, 0,
           "last ordinate exceeds the declared height");
    }
    zeros.height = declared;
  } else {
    zeros.height = zeros.gammas.back();
  }
  return zeros;
}

ZeroList load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ZeroErrorKind::kIo, path, 0, "cannot open file");
  return parse_zeros(in, path);
}

ZeroList zero_prefix(const ZeroList& zeros, std::size_t k) {
  if (k == 0) throw RangeError("zero_prefix: k must be >= 1");
  require_k(zeros, k);
  ZeroList out;
  out.gammas.assign(zeros.gammas.begin(),
                    zeros.gammas.begin() + static_cast<std::ptrdiff_t>(k));
  out.source = zeros.source + " (first " + std::to_string(k) + ")";
  out.height = k == zeros.gammas.size() ? zeros.height : out.gammas.back();
  return out;
}

double zero_count_main_term(double t) {
  const double u = t / (2.0 * std::numbers::pi);
  return u * std::log(u) - u + 7.0 / 8.0;
}

ZeroCountReport zero_count_check(const ZeroList& zeros, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw RangeError("zero_count_check: T must be positive");
  }
  if (t > zeros.height) {
    std::ostringstream os;
    os << "zero_count_check: T = " << t << " is above the table height "
       << zeros.height;
    throw RangeError(os.str());
  }
  ZeroCountReport r;
  r.counted = static_cast<std::size_t>(
      std::upper_bound(zeros.gammas.begin(), zeros.gammas.end(), t) -
      zeros.gammas.begin());
  r.main_term = zero_count_main_term(t);
  r.deviation = static_cast<double>(r.counted) - r.main_term;
  return r;
}

double psi_landau(double x, const ZeroList& zeros, std::size_t k) {
  if (!(x >= 2.0) || !std::isfinite(x)) {
    throw RangeError("psi_landau: x must be >= 2");
  }
  if (x == std::floor(x) && x < 18446744073709551616.0 &&
      prime_power_base(static_cast<std::uint64_t>(x)) != 0) {
    throw RangeError("psi_landau: x is a prime power; use a half-integer");
  }
  require_k(zeros, k);
  const double log_x = std::log(x);
  CompensatedSum sum;
  for (std::size_t i = 0; i < k; ++i) {
    const double g = zeros.gammas[i];
    const double phase = g * log_x;
    sum.add((0.5 * std::cos(phase) + g * std::sin(phase)) / (0.25 + g * g));
  }
  return x - 2.0 * std::sqrt(x) * sum.value();
}

double pi_riemann(double x, std::uint64_t n_terms, const ZeroList& zeros,
                  std::size_t k, const RiemannOptions& options) {
  if (!(x >= 2.0) || !std::isfinite(x)) {
    throw RangeError("pi_riemann: x must be >= 2");
  }
  if (n_terms < 1) throw RangeError("pi_riemann: N must be >= 1");
  require_k(zeros, k);

  const double log_x = std::log(x);
  std::uint64_t n_max = 1;
  while (n_max < n_terms &&
         log_x / static_cast<double>(n_max + 1) >= std::numbers::ln2) {
    ++n_max;
  }
  const auto mu = mobius_range(1, n_max + 1);
  const double li_offset = ei(std::numbers::ln2);

  CompensatedSum total;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const int m = mu[n - 1];
    if (m == 0) continue;
    const double scale = log_x / static_cast<double>(n);
    const double y = std::max(2.0, std::exp(scale));
    CompensatedSum term;
    term.add(li(y));
    if (options.tail_terms) {
      term.add(li_offset);
      term.add(-std::numbers::ln2);
      term.add(riemann_tail_integral(y).value);
    }
    for (std::size_t i = 0; i < k; ++i) {
      const ComplexValue z(0.5 * scale, zeros.gammas[i] * scale);
      term.add(-2.0 * ei(z).real());
    }
    total.add(static_cast<double>(m) / static_cast<double>(n) * term.value());
  }
  return total.value();
}

}  // namespace primelab
