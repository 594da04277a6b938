// Copyright 2026 The gqtsp Authors
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

#include <CLI11.hpp>

#include <functional>
#include <memory>

namespace gqtsp::cli {

/// Process exit codes. Every failure class has its own code.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kResource = 3,
  kNoValidCycle = 4,
  kMismatch = 5,
  kInputError = 6,
};

/// Registers gen, solve, sweep, verify and qubits on `app`. The returned
/// action runs whichever subcommand was parsed.
std::function<int()> register_commands(CLI::App& app);

/// Parses argv (program name first), runs the subcommand and maps errors
/// to exit codes with a one-line message on stderr.
int run(int argc, const char* const* argv);

}  // namespace gqtsp::cli
