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

#ifndef CUE_CATALOG_H_
#define CUE_CATALOG_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cue/game.h"

namespace cue {

// Line-oriented game document; `#` starts a comment.
//
//   name cournot              (optional)
//   type interval
//   param t 1                 (optional, repeatable; usable in payoffs)
//   bounds 0 1 ; 0 1
//   payoff1 s1*(1 - s1 - s2)
//   payoff2 s2*(1 - s1 - s2)
//
//   type finite
//   actions a b ; a b
//   payoffs1
//   2 0
//   0 1
//   payoffs2
//   1 0
//   0 2
//
// Numbers may be written as fractions p/q. Throws ParseError with the line
// of the offending entry, or ValidationError for invalid games.
Game ParseGame(std::string_view text);
Game LoadGame(const std::string& path);

// Inverse of ParseGame.
std::string SerializeGame(const Game& game);

// Built-in games:
//   cournot            s_i (1 - s_i - s_-i) on [0, 1]^2
//   hotelling          params t (1) and M (3), 0 < t < M
//   battle_of_sexes    actions a1 b1 ; a2 b2
//   zero_sum_3x3       actions a b c ; a b c
//   common_interest    params uRC (1-based row R, column C) give the
//                      shared payoff matrix
// Throws ValidationError for unknown names or bad parameters.
Game Catalog(const std::string& name,
             const std::map<std::string, double>& params = {});

std::vector<std::string> CatalogNames();

// Document text of a built-in game other than common_interest.
std::string CatalogDocument(const std::string& name);

// Both players receive matrix[a][b].
Game CommonInterestGame(const std::vector<std::vector<double>>& matrix);

// A catalog name or, failing that, a document path.
Game ResolveGame(const std::string& source,
                 const std::map<std::string, double>& params = {});

}  // namespace cue

#endif  // CUE_CATALOG_H_
