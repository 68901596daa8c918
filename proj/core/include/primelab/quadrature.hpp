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

#include <functional>

namespace primelab {

struct QuadratureSpec {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_depth = 48;  // bisection depth limit for any subinterval
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // sum of |K15 - G7| over accepted subintervals
  int evaluations = 0;
  bool converged = false;
};

// Throws RangeError when the spec violates abs_tol > 0, rel_tol > 0,
// max_depth >= 1.
void validate(const QuadratureSpec& spec);

// Globally adaptive Gauss-Kronrod (7/15) over the finite interval [a, b]:
// the subinterval with the largest error estimate is bisected until the
// total estimate is within max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec = {});

}  // namespace primelab
