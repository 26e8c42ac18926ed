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

#ifndef CUE_TOOLS_RUN_CONFIG_H_
#define CUE_TOOLS_RUN_CONFIG_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cue/game.h"
#include "cue/solver.h"

namespace cue::cli {

// Default grid resolutions and family size.
inline constexpr int kEnumerateGrid = 41;
inline constexpr int kCheckGrid = 121;
inline constexpr int kFiniteGrid = 60;
inline constexpr int kDefaultK = 15;

// Everything one command needs. Unset optional fields take the defaults
// above when resolved.
struct RunConfig {
  std::string command;
  std::string game;
  std::map<std::string, double> params;
  std::optional<int> grid;
  int K = kDefaultK;
  Quantifier quantifier = Quantifier::kForall;
  MoveMode mode = MoveMode::kUnilateral;
  std::vector<Concept> concepts;
  bool ne_layer = true;
  // check
  std::string profile;
  std::optional<std::string> clustering[2];
  Concept concept_kind = Concept::kCue;
  // enumerate
  std::string csv_path;
  std::string svg_path;
  int workers = 1;

  // Grid resolution for `game` given the command and game type.
  int Resolution(const Game& game) const;
  SolverOptions Solver() const;
  // Comment lines describing the resolved configuration and the defaults.
  std::string Header(const Game& game) const;
};

// Parses "ne,weak,cue,strong" (any subset, any order). Sets `ne` when "ne"
// is listed and returns the remaining concepts in canonical order. Throws
// ValidationError on unknown names.
std::vector<Concept> ParseConcepts(const std::string& text, bool* ne);
Concept ParseConcept(const std::string& text);
Quantifier ParseQuantifier(const std::string& text);
MoveMode ParseMode(const std::string& text);

}  // namespace cue::cli

#endif  // CUE_TOOLS_RUN_CONFIG_H_
