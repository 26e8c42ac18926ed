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

#ifndef CUE_GAME_H_
#define CUE_GAME_H_

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cue/expression.h"

namespace cue {

// Absolute tolerance for payoff comparisons.
inline constexpr double kPayoffTol = 1e-9;
// Margin for structural sign tests.
inline constexpr double kSignTol = 1e-7;

// Players are indexed 0 and 1 throughout; printed as 1 and 2.
inline int Opponent(int player) { return 1 - player; }

// Two-player game on a rectangle [lo_0, hi_0] x [lo_1, hi_1] with payoffs
// given as expressions in s1 and s2.
struct IntervalGame {
  std::array<double, 2> lo = {0.0, 0.0};
  std::array<double, 2> hi = {1.0, 1.0};
  std::array<Expression, 2> payoff;
};

// Bimatrix game. payoffs[p][a][b] is player p's payoff when the first player
// plays action a and the second plays action b.
struct FiniteGame {
  std::array<std::vector<std::string>, 2> actions;
  std::array<std::vector<std::vector<double>>, 2> payoffs;
};

class Game {
 public:
  // Both constructors validate and throw ValidationError.
  explicit Game(IntervalGame game, std::string name = "");
  explicit Game(FiniteGame game, std::string name = "");

  bool is_finite() const { return std::holds_alternative<FiniteGame>(data_); }
  const IntervalGame& interval() const { return std::get<IntervalGame>(data_); }
  const FiniteGame& finite() const { return std::get<FiniteGame>(data_); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Named constants the payoff expressions were parsed with.
  const std::map<std::string, double>& params() const { return params_; }
  void set_params(std::map<std::string, double> params) {
    params_ = std::move(params);
  }

 private:
  std::variant<IntervalGame, FiniteGame> data_;
  std::string name_;
  std::map<std::string, double> params_;
};

// A strategy of one player. For interval games `value` is the point and
// `mixture` is empty. For finite games `mixture` holds action probabilities
// and `value` is the coordinate used for ordering and plotting.
struct Strategy {
  double value = 0.0;
  std::vector<double> mixture;
};

// Discretized strategy sets.
//
// Interval games use n uniform points with both endpoints. Finite games use
// mixtures with denominator m: with two actions the points are ordered by
// ascending probability of the first action; with three actions by
// descending count of the first action, then of the second. With one action
// the set is the single pure strategy.
class StrategyGrid {
 public:
  StrategyGrid() = default;

  // `resolution` is n for interval games and m for finite games.
  static StrategyGrid Make(const Game& game, int resolution);

  int resolution() const { return resolution_; }
  int size(int player) const {
    return static_cast<int>(points_[player].size());
  }
  const Strategy& point(int player, int index) const {
    return points_[player][index];
  }
  double value(int player, int index) const {
    return points_[player][index].value;
  }
  // Distance between neighbouring values; 1 for three-action simplices.
  double step(int player) const { return step_[player]; }

  // Action name for pure strategies of finite games, otherwise the value
  // (two actions) or the mixture joined by ':' (three actions).
  std::string Label(int player, int index) const;

  // Index of the grid point closest to `value`; ties go to the lower index.
  int Nearest(int player, double value) const;

  // Resolves "0.5", "a1", "1/3" or "0.2:0.3:0.5" to a grid index. Throws
  // DomainError if the point is outside the strategy set or off the grid by
  // more than half a step.
  int Resolve(int player, const std::string& text) const;

 private:
  int resolution_ = 0;
  bool finite_ = false;
  std::array<std::vector<Strategy>, 2> points_;
  std::array<std::vector<std::string>, 2> actions_;
  std::array<double, 2> step_ = {0.0, 0.0};
};

// Grid indices of both players' strategies.
using Profile = std::array<int, 2>;

// Payoff of `player` at an arbitrary strategy pair. Throws DomainError
// outside the strategy sets and EvaluationError on non-finite values.
double Payoff(const Game& game, int player, const Strategy& s1,
              const Strategy& s2);
double Payoff(const Game& game, int player, double s1, double s2);

enum class Externalities { kPositive, kNegative, kNone };
enum class Strategic { kComplements, kSubstitutes, kNeither };
enum class Ordering { kLower, kEqual, kHigher };

struct StructureReport {
  Externalities externalities = Externalities::kNone;
  Strategic strategic = Strategic::kNeither;
  // Discrete second differences along the own strategy are <= tol_sign
  // (resp. < -tol_sign) at every interior cell.
  std::array<bool, 2> concavity_ok = {false, false};
  std::array<bool, 2> strictly_concave = {false, false};
};

// Sign tests on finite-difference derivatives at every grid cell.
// Externalities use d pi_i / d s_-i; strategic interaction uses the cross
// derivative of pi_i. Cells where the one-sided slopes disagree (kinks of
// min/max payoffs) are skipped. A label is assigned when no remaining cell
// violates its sign by more than tol_sign and at least one cell is strict.
// Throws UnsupportedError for finite games.
StructureReport DetectStructure(const Game& game, const StrategyGrid& grid,
                                double tol_sign = kSignTol);

// Whether strategy a of `player` is better for the opponent than b. Throws
// UnsupportedError when externalities are not monotone.
Ordering ExtCompare(const StructureReport& structure, int player, double a,
                    double b);

const char* ToString(Externalities value);
const char* ToString(Strategic value);
const char* ToString(Ordering value);

}  // namespace cue

#endif  // CUE_GAME_H_
