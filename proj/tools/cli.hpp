// Copyright 2026 The qsim Authors
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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsim::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseFailure = 2,
  kValidationFailure = 3,
  kIoFailure = 4,
};

enum class Format { kCsv, kJson };

/// Largest register the state-vector commands accept.
inline constexpr std::size_t kMaxQubits = 12;
/// verify works on the 2^n x 2^n density matrix.
inline constexpr std::size_t kMaxVerifyQubits = 10;

struct RunConfig {
  std::string command;
  std::size_t n = 0;
  std::string density_path;
  std::string unitary_path;
  std::string output_path;
  std::string angles_path;
  std::uint64_t shots = 2048;
  std::uint64_t seed = 0;
  Format format = Format::kCsv;
  bool prune = false;
  bool identity = false;
  std::optional<double> tol;
};

/// Runs one command; diagnostics go to `err`, results to `out` unless an
/// output path is configured.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses argv (argv[0] is the program name) and runs the command.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

// Readers for the command outputs.

struct LawRow {
  std::uint64_t k = 0;
  std::string bits;
  double p = 0.0;
};

std::vector<LawRow> parse_law_output(std::string_view text, Format format);

struct SampleRow {
  std::uint64_t k = 0;
  std::string bits;
  std::uint64_t count = 0;
  double freq = 0.0;
  double exact = 0.0;
  double deviation = 0.0;
};

struct SampleTable {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;
  std::vector<SampleRow> rows;
};

SampleTable parse_sample_output(std::string_view text, Format format);

}  // namespace qsim::cli
