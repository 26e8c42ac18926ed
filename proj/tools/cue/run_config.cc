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

#include "run_config.h"

#include <sstream>

#include "cue/errors.h"

namespace cue::cli {

int RunConfig::Resolution(const Game& game) const {
  if (grid) return *grid;
  if (game.is_finite()) return kFiniteGrid;
  return command == "check" || command == "bounds" ? kCheckGrid
                                                   : kEnumerateGrid;
}

SolverOptions RunConfig::Solver() const {
  SolverOptions options;
  options.family.K = K;
  options.quantifier = quantifier;
  options.mode = mode;
  return options;
}

std::string RunConfig::Header(const Game& game) const {
  std::ostringstream out;
  out << "# cue " << command
      << " game=" << (game.name().empty() ? this->game : game.name())
      << " grid=" << Resolution(game) << " K=" << K
      << " quantifier=" << ToString(quantifier) << " mode=" << ToString(mode);
  for (const auto& [key, value] : game.params()) {
    out << ' ' << key << '=' << FormatNumber(value);
  }
  out << "\n# defaults: enumerate grid " << kEnumerateGrid << ", check grid "
      << kCheckGrid << ", finite grid " << kFiniteGrid << ", K " << kDefaultK
      << ", quantifier forall, mode unilateral\n";
  return out.str();
}

std::vector<Concept> ParseConcepts(const std::string& text, bool* ne) {
  *ne = false;
  bool want[3] = {false, false, false};
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    if (item == "ne") {
      *ne = true;
      continue;
    }
    want[static_cast<int>(ParseConcept(item))] = true;
  }
  std::vector<Concept> concepts;
  for (Concept kind : {Concept::kWeak, Concept::kCue, Concept::kStrong}) {
    if (want[static_cast<int>(kind)]) concepts.push_back(kind);
  }
  return concepts;
}

Concept ParseConcept(const std::string& text) {
  if (text == "weak") return Concept::kWeak;
  if (text == "cue") return Concept::kCue;
  if (text == "strong") return Concept::kStrong;
  throw ValidationError("unknown concept '" + text +
                        "' (expected weak, cue or strong)");
}

Quantifier ParseQuantifier(const std::string& text) {
  if (text == "forall") return Quantifier::kForall;
  if (text == "exists") return Quantifier::kExists;
  throw ValidationError("unknown quantifier '" + text +
                        "' (expected forall or exists)");
}

MoveMode ParseMode(const std::string& text) {
  if (text == "unilateral") return MoveMode::kUnilateral;
  if (text == "simultaneous") return MoveMode::kSimultaneous;
  throw ValidationError("unknown mode '" + text +
                        "' (expected unilateral or simultaneous)");
}

}  // namespace cue::cli
