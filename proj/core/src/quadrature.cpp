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

#include "primelab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "primelab/error.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxIntervals = 20000;

struct Piece {
  double a;
  double b;
  double value;
  double error;
  int depth;
};

struct ByError {
  bool operator()(const Piece& l, const Piece& r) const { return l.error < r.error; }
};

Piece kronrod(const std::function<double(double)>& f, double a, double b,
              int depth, int& evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  kron *= half;
  gauss *= half;
  return {a, b, kron, std::abs(kron - gauss), depth};
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1) {
    throw RangeError(
        "quadrature spec: need abs_tol > 0, rel_tol > 0, max_depth >= 1");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec) {
  validate(spec);
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Piece, std::vector<Piece>, ByError> open;
  std::vector<Piece> settled;  // hit the depth limit
  open.push(kronrod(f, a, b, 0, out.evaluations));
  double value = open.top().value;
  double error = open.top().error;

  int intervals = 1;
  while (!open.empty()) {
    if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
      out.converged = true;
      break;
    }
    if (intervals >= kMaxIntervals) break;
    Piece worst = open.top();
    open.pop();
    if (worst.depth >= spec.max_depth) {
      settled.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Piece left = kronrod(f, worst.a, mid, worst.depth + 1, out.evaluations);
    Piece right = kronrod(f, mid, worst.b, worst.depth + 1, out.evaluations);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
    ++intervals;
  }

  // Re-add the pieces in a fixed order to drop the drift of the running
  // totals.
  std::vector<Piece> all = std::move(settled);
  while (!open.empty()) {
    all.push_back(open.top());
    open.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Piece& l, const Piece& r) { return l.a < r.a; });
  CompensatedSum v;
  CompensatedSum e;
  for (const auto& p : all) {
    v.add(p.value);
    e.add(p.error);
  }
  out.value = v.value();
  out.error = e.value();
  if (!out.converged) {
    out.converged =
        out.error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value));
  }
  return out;
}

}  // namespace primelab
