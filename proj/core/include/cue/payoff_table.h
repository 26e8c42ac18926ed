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

#ifndef CUE_PAYOFF_TABLE_H_
#define CUE_PAYOFF_TABLE_H_

#include <array>
#include <optional>
#include <vector>

#include "cue/game.h"

namespace cue {

// Payoffs of both players at every grid profile, plus a ranking of each
// player's payoffs into levels. Payoffs within `tol` of the lowest member of
// a level share it, so all later comparisons are integer comparisons.
class PayoffTable {
 public:
  // Throws EvaluationError if a payoff is not finite somewhere on the grid.
  PayoffTable(Game game, StrategyGrid grid, double tol = kPayoffTol);
  static PayoffTable Make(const Game& game, int resolution,
                          double tol = kPayoffTol);

  const Game& game() const { return game_; }
  const StrategyGrid& grid() const { return grid_; }
  double tol() const { return tol_; }

  int size(int player) const { return size_[player]; }
  int num_cells() const { return size_[0] * size_[1]; }
  int cell(const Profile& s) const { return s[0] * size_[1] + s[1]; }
  Profile profile(int cell) const { return {cell / size_[1], cell % size_[1]}; }

  double payoff(int player, const Profile& s) const {
    return payoff_[player][cell(s)];
  }
  int level(int player, const Profile& s) const {
    return level_[player][cell(s)];
  }
  int num_levels(int player) const {
    return static_cast<int>(levels_[player].size());
  }
  // Representative (lowest) payoff of each level, ascending.
  const std::vector<double>& levels(int player) const {
    return levels_[player];
  }
  // Highest level `player` reaches against opponent strategy `opp`.
  int best_level(int player, int opp) const { return best_[player][opp]; }

 private:
  Game game_;
  StrategyGrid grid_;
  double tol_;
  std::array<int, 2> size_;
  std::array<std::vector<double>, 2> payoff_;
  std::array<std::vector<int>, 2> level_;
  std::array<std::vector<double>, 2> levels_;
  std::array<std::vector<int>, 2> best_;
};

// The profile in which `player` plays `own` and the opponent plays `opp`.
inline Profile MakeProfile(int player, int own, int opp) {
  return player == 0 ? Profile{own, opp} : Profile{opp, own};
}

// Grid strategies within tol of the best payoff against `opp`, ascending.
std::vector<int> BestReply(const PayoffTable& table, int player, int opp,
                           double tol = kPayoffTol);
double BestReplyPayoff(const PayoffTable& table, int player, int opp);

struct MinimaxValues {
  // Lowest best-reply payoff the opponent can hold the player to.
  std::array<double, 2> under = {0.0, 0.0};
  // Highest payoff the player can guarantee against every opponent strategy.
  std::array<double, 2> over = {0.0, 0.0};
};

MinimaxValues ComputeMinimax(const PayoffTable& table);

// The common value of pi_1 + pi_2 if it is constant on the grid within tol.
std::optional<double> ConstantSum(const PayoffTable& table,
                                  double tol = kPayoffTol);

}  // namespace cue

#endif  // CUE_PAYOFF_TABLE_H_
