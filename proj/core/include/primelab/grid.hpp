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
#include <optional>
#include <span>
#include <vector>

namespace primelab {

// `points` log-spaced integers from lo to hi inclusive, rounded to nearest,
// deduplicated and ascending. Both endpoints are always present.
std::vector<std::uint64_t> log_grid(std::uint64_t lo, std::uint64_t hi,
                                    std::size_t points);

// Same grid over reals (no rounding).
std::vector<double> log_grid_real(double lo, double hi, std::size_t points);

// Smallest xs[i] such that holds[j] is true for every j >= i, or nullopt if
// the last entry fails. xs must be ascending.
std::optional<std::uint64_t> first_persistent(std::span<const std::uint64_t> xs,
                                              const std::vector<bool>& holds);

}  // namespace primelab
