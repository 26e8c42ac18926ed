// Copyright 2026 The Coarse Utility Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUE_TOOLS_COMMANDS_H_
#define CUE_TOOLS_COMMANDS_H_

#include <ostream>

#include "run_config.h"

namespace cue::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitFails = 3;

// Each command prints its report to `out` and returns the exit code. Errors
// propagate as exceptions; Run maps them to exit codes and messages on
// `err`.
int RunCheck(const RunConfig& config, std::ostream& out);
int RunEnumerate(const RunConfig& config, std::ostream& out);
int RunCharacterize(const RunConfig& config, std::ostream& out);
int RunBounds(const RunConfig& config, std::ostream& out);

int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cue::cli

#endif  // CUE_TOOLS_COMMANDS_H_
