// Copyright 2026 The qipsim Authors
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
#include <vector>

namespace qipsim::cli {

/// Seed used when neither --seed nor QIPSIM_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 1234;
inline constexpr const char* kSeedEnvVar = "QIPSIM_SEED";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Parsed command line of one invocation.
struct RunConfig {
  std::string command;  // encode | decode | measure | qft | invert | resources
  std::string input_path;
  std::string output_path;  // empty: write to stdout
  std::string model = "frqi";
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = kDefaultSeed;
  int sign = +1;
  std::string format;     // output format; empty: from extension or default
  std::string in_format;  // input image format; empty: from extension
  std::optional<std::uint32_t> max_value;
  std::optional<unsigned> bits;
  std::string reg;  // measured / transformed register; empty: default
  std::vector<unsigned> qubits;
  bool histogram = false;
  bool no_swap = false;
  bool decompose = false;
  std::optional<unsigned> qft_qubits;
  std::string circuit_out;
  std::string state_out;
  unsigned threads = 1;
};

/// Runs one command line (args[0] is the program name). Returns the process
/// exit code: 0 success, 1 usage error, 2 data error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qipsim::cli
