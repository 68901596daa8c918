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
#include <utility>
#include <vector>

namespace primelab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // unknown subcommand, malformed flags
  kExitData = 2,        // parameter out of range, unreadable or invalid input
  kExitAssertion = 3,   // a --check assertion failed
};

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  std::string subcommand;
  std::string op;  // operation within the subcommand; "" selects the default
  bool check = false;

  std::uint64_t x = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t points = 0;
  std::uint64_t step = 1;
  std::uint64_t q = 0;
  std::uint64_t a = 0;
  std::uint64_t y = 0;
  std::uint64_t n = 0;
  std::uint64_t stride = 1;
  std::uint64_t k = 0;
  std::uint64_t terms = 0;
  std::vector<std::uint64_t> ys;

  double real_x = 0.0;
  double re = 0.0;
  double im = 0.0;
  double nu = 0.0;
  double c = 0.0;
  double s = 2.0;
  double t = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double c_dvp = 1.0;
  double c_vinogradov = 1.0;
  std::string rule;  // fixed | power | log-power
  std::string mode;  // exact-sum | piecewise-integral
  bool no_tail = false;

  std::string zeros_path;
  OutputFormat format = OutputFormat::kCsv;
  std::string output;  // empty: stdout
  unsigned workers = 1;
  bool timestamp = false;

  // Parameters as given on the command line, in declaration order; echoed
  // into every artifact header. Excludes the worker count and output path.
  std::vector<std::pair<std::string, std::string>> echo;
};

// One row per (subcommand, op); `operation` names the library operation it
// reaches as "<module>.<function>".
struct DispatchEntry {
  const char* subcommand;
  const char* op;
  const char* operation;
};

std::span<const DispatchEntry> dispatch_table();

// Executes a parsed configuration. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace primelab::cli
