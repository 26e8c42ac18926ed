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

#include "cue/game.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "cue/errors.h"

namespace cue {
namespace {

// Drops floating-point noise below 1e-12 from printed grid values.
double Snap(double v) {
  if (std::fabs(v) > 1e3) return v;
  return std::round(v * 1e12) / 1e12;
}

constexpr double kMixtureTol = 1e-9;

void CheckFinite(double value, const std::string& what) {
  if (!std::isfinite(value)) throw ValidationError(what + " is not finite");
}

std::string Trim(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

// Slope of fn at t using steps of size delta, one-sided at the bounds.
// Clears *smooth when the two one-sided slopes disagree.
double Slope(const std::function<double(double)>& fn, double t, double lo,
             double hi, double delta, bool* smooth) {
  bool has_forward = t + delta <= hi;
  bool has_backward = t - delta >= lo;
  double center = fn(t);
  double forward = has_forward ? (fn(t + delta) - center) / delta : 0.0;
  double backward = has_backward ? (center - fn(t - delta)) / delta : 0.0;
  if (has_forward && has_backward) {
    if (std::fabs(forward - backward) >
        1e-3 * (1.0 + std::fabs(forward) + std::fabs(backward))) {
      *smooth = false;
    }
    return 0.5 * (forward + backward);
  }
  return has_forward ? forward : backward;
}

struct SignTally {
  bool positive = false;
  bool negative = false;
  bool violated_positive = false;  // some cell below -tol
  bool violated_negative = false;  // some cell above +tol

  void Add(double value, double tol) {
    if (value > tol) {
      positive = true;
      violated_negative = true;
    } else if (value < -tol) {
      negative = true;
      violated_positive = true;
    }
  }
  int Sign() const {
    if (positive && !violated_positive) return 1;
    if (negative && !violated_negative) return -1;
    return 0;
  }
};

}  // namespace

Game::Game(IntervalGame game, std::string name) : name_(std::move(name)) {
  for (int p = 0; p < 2; ++p) {
    CheckFinite(game.lo[p], "lower bound");
    CheckFinite(game.hi[p], "upper bound");
    if (!(game.lo[p] < game.hi[p])) {
      throw ValidationError("bounds of player " + std::to_string(p + 1) +
                            " need lo < hi");
    }
    if (game.payoff[p].empty()) {
      throw ValidationError("missing payoff expression for player " +
                            std::to_string(p + 1));
    }
  }
  data_ = std::move(game);
}

Game::Game(FiniteGame game, std::string name) : name_(std::move(name)) {
  size_t rows = game.actions[0].size();
  size_t cols = game.actions[1].size();
  if (rows == 0 || cols == 0) {
    throw ValidationError("each player needs at least one action");
  }
  for (int p = 0; p < 2; ++p) {
    const auto& matrix = game.payoffs[p];
    if (matrix.size() != rows) {
      throw ValidationError("payoff matrix of player " +
                            std::to_string(p + 1) + " has " +
                            std::to_string(matrix.size()) + " rows, expected " +
                            std::to_string(rows));
    }
    for (const auto& row : matrix) {
      if (row.size() != cols) {
        throw ValidationError("payoff matrix of player " +
                              std::to_string(p + 1) + " has a row of " +
                              std::to_string(row.size()) +
                              " entries, expected " + std::to_string(cols));
      }
      for (double v : row) CheckFinite(v, "payoff entry");
    }
    std::vector<std::string> sorted = game.actions[p];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("duplicate action label for player " +
                            std::to_string(p + 1));
    }
  }
  data_ = std::move(game);
}

StrategyGrid StrategyGrid::Make(const Game& game, int resolution) {
  StrategyGrid grid;
  grid.resolution_ = resolution;
  if (!game.is_finite()) {
    if (resolution < 2) {
      throw ValidationError("interval grids need at least 2 points");
    }
    const IntervalGame& g = game.interval();
    for (int p = 0; p < 2; ++p) {
      double lo = g.lo[p];
      double hi = g.hi[p];
      grid.step_[p] = (hi - lo) / (resolution - 1);
      auto& points = grid.points_[p];
      points.resize(resolution);
      for (int k = 0; k < resolution; ++k) {
        points[k].value =
            k == resolution - 1 ? hi : lo + (hi - lo) * k / (resolution - 1);
      }
    }
    return grid;
  }
  if (resolution < 1) {
    throw ValidationError("mixture denominator must be at least 1");
  }
  grid.finite_ = true;
  const FiniteGame& g = game.finite();
  const int m = resolution;
  for (int p = 0; p < 2; ++p) {
    grid.actions_[p] = g.actions[p];
    auto& points = grid.points_[p];
    switch (g.actions[p].size()) {
      case 1:
        points.push_back({0.0, {1.0}});
        grid.step_[p] = 1.0;
        break;
      case 2:
        for (int k = 0; k <= m; ++k) {
          double q = static_cast<double>(k) / m;
          points.push_back({q, {q, static_cast<double>(m - k) / m}});
        }
        grid.step_[p] = 1.0 / m;
        break;
      case 3:
        for (int k1 = m; k1 >= 0; --k1) {
          for (int k2 = m - k1; k2 >= 0; --k2) {
            double index = static_cast<double>(points.size());
            points.push_back({index,
                              {static_cast<double>(k1) / m,
                               static_cast<double>(k2) / m,
                               static_cast<double>(m - k1 - k2) / m}});
          }
        }
        grid.step_[p] = 1.0;
        break;
      default:
        throw UnsupportedError(
            "mixed-strategy grids support at most 3 actions per player");
    }
  }
  return grid;
}

std::string StrategyGrid::Label(int player, int index) const {
  const Strategy& s = points_[player][index];
  if (!finite_) return FormatNumber(Snap(s.value));
  for (size_t a = 0; a < s.mixture.size(); ++a) {
    if (s.mixture[a] == 1.0) return actions_[player][a];
  }
  if (s.mixture.size() == 2) return FormatNumber(Snap(s.value));
  std::string text;
  for (size_t a = 0; a < s.mixture.size(); ++a) {
    if (a > 0) text += ':';
    text += FormatNumber(Snap(s.mixture[a]));
  }
  return text;
}

int StrategyGrid::Nearest(int player, double value) const {
  const auto& points = points_[player];
  auto it = std::lower_bound(
      points.begin(), points.end(), value,
      [](const Strategy& s, double v) { return s.value < v; });
  if (it == points.begin()) return 0;
  if (it == points.end()) return static_cast<int>(points.size()) - 1;
  int upper = static_cast<int>(it - points.begin());
  int lower = upper - 1;
  return value - points[lower].value <= points[upper].value - value ? lower
                                                                    : upper;
}

int StrategyGrid::Resolve(int player, const std::string& raw) const {
  std::string text = Trim(raw);
  const auto& points = points_[player];
  if (finite_) {
    const auto& actions = actions_[player];
    for (size_t a = 0; a < actions.size(); ++a) {
      if (actions[a] != text) continue;
      for (size_t k = 0; k < points.size(); ++k) {
        if (points[k].mixture[a] == 1.0) return static_cast<int>(k);
      }
    }
    std::vector<double> mixture;
    if (text.find(':') != std::string::npos) {
      std::stringstream stream(text);
      std::string part;
      while (std::getline(stream, part, ':')) {
        mixture.push_back(ParseNumber(part));
      }
    } else if (actions.size() == 2) {
      double q = ParseNumber(text);
      mixture = {q, 1.0 - q};
    } else {
      throw DomainError("'" + text + "' is not an action of player " +
                        std::to_string(player + 1));
    }
    if (mixture.size() != actions.size()) {
      throw DomainError("mixture '" + text + "' has the wrong number of "
                        "components for player " +
                        std::to_string(player + 1));
    }
    double total = 0.0;
    for (double q : mixture) {
      if (q < -kMixtureTol) throw DomainError("negative probability");
      total += q;
    }
    if (std::fabs(total - 1.0) > 1e-6) {
      throw DomainError("mixture '" + text + "' does not sum to 1");
    }
    double half = 0.5 / resolution_ + 1e-12;
    for (size_t k = 0; k < points.size(); ++k) {
      bool close = true;
      for (size_t a = 0; a < mixture.size(); ++a) {
        if (std::fabs(points[k].mixture[a] - mixture[a]) > half) close = false;
      }
      if (close) return static_cast<int>(k);
    }
    throw DomainError("mixture '" + text + "' is not on the grid");
  }
  double value = ParseNumber(text);
  double slack = 1e-9 * (points.back().value - points.front().value);
  if (value < points.front().value - slack ||
      value > points.back().value + slack) {
    throw DomainError("strategy " + text + " of player " +
                      std::to_string(player + 1) +
                      " is outside the strategy set");
  }
  return Nearest(player, value);
}

double Payoff(const Game& game, int player, const Strategy& s1,
              const Strategy& s2) {
  if (!game.is_finite()) return Payoff(game, player, s1.value, s2.value);
  const FiniteGame& g = game.finite();
  const Strategy* s[2] = {&s1, &s2};
  for (int p = 0; p < 2; ++p) {
    if (s[p]->mixture.size() != g.actions[p].size()) {
      throw DomainError("mixture size does not match the action count");
    }
    double total = 0.0;
    for (double q : s[p]->mixture) {
      if (!(q >= -kMixtureTol)) throw DomainError("negative probability");
      total += q;
    }
    if (std::fabs(total - 1.0) > 1e-6) {
      throw DomainError("mixture does not sum to 1");
    }
  }
  const auto& matrix = g.payoffs[player];
  double sum = 0.0;
  for (size_t a = 0; a < matrix.size(); ++a) {
    double row = 0.0;
    for (size_t b = 0; b < matrix[a].size(); ++b) {
      row += matrix[a][b] * s2.mixture[b];
    }
    sum += s1.mixture[a] * row;
  }
  return sum;
}

double Payoff(const Game& game, int player, double s1, double s2) {
  if (game.is_finite()) {
    throw DomainError("finite games take mixed strategies");
  }
  const IntervalGame& g = game.interval();
  double s[2] = {s1, s2};
  for (int p = 0; p < 2; ++p) {
    double slack = 1e-12 * (g.hi[p] - g.lo[p]);
    if (!(s[p] >= g.lo[p] - slack && s[p] <= g.hi[p] + slack)) {
      throw DomainError("strategy " + FormatNumber(s[p]) + " of player " +
                        std::to_string(p + 1) + " is outside [" +
                        FormatNumber(g.lo[p]) + ", " + FormatNumber(g.hi[p]) +
                        "]");
    }
  }
  return g.payoff[player].Evaluate(s1, s2);
}

StructureReport DetectStructure(const Game& game, const StrategyGrid& grid,
                                double tol_sign) {
  if (game.is_finite()) {
    throw UnsupportedError("structure detection needs an interval game");
  }
  const IntervalGame& g = game.interval();
  StructureReport report;
  SignTally externality;
  SignTally cross;
  for (int p = 0; p < 2; ++p) {
    int q = Opponent(p);
    // pi_p as a function of (own, other).
    auto eval = [&](double own, double other) {
      return p == 0 ? g.payoff[0].Evaluate(own, other)
                    : g.payoff[1].Evaluate(other, own);
    };
    double own_lo = g.lo[p], own_hi = g.hi[p];
    double other_lo = g.lo[q], other_hi = g.hi[q];
    double d_ext = 1e-5 * (other_hi - other_lo);
    double d_own = 1e-4 * (own_hi - own_lo);
    double d_cross = 1e-3 * (other_hi - other_lo);
    bool concave = true;
    bool strict = true;
    int n_own = grid.size(p);
    for (int a = 0; a < n_own; ++a) {
      double own = grid.value(p, a);
      for (int b = 0; b < grid.size(q); ++b) {
        double other = grid.value(q, b);
        bool smooth = true;
        double slope = Slope([&](double t) { return eval(own, t); }, other,
                             other_lo, other_hi, d_ext, &smooth);
        if (smooth) externality.Add(slope, tol_sign);

        bool cross_smooth = true;
        auto own_slope = [&](double t) {
          return Slope([&](double x) { return eval(x, t); }, own, own_lo,
                       own_hi, d_own, &cross_smooth);
        };
        double mixed =
            Slope(own_slope, other, other_lo, other_hi, d_cross, &cross_smooth);
        if (cross_smooth) cross.Add(mixed, tol_sign);

        if (a > 0 && a + 1 < n_own) {
          double second = eval(grid.value(p, a + 1), other) -
                          2.0 * eval(own, other) +
                          eval(grid.value(p, a - 1), other);
          if (second > tol_sign) concave = false;
          if (second >= -tol_sign) strict = false;
        }
      }
    }
    report.concavity_ok[p] = concave;
    report.strictly_concave[p] = strict && n_own >= 3;
  }
  switch (externality.Sign()) {
    case 1:
      report.externalities = Externalities::kPositive;
      break;
    case -1:
      report.externalities = Externalities::kNegative;
      break;
    default:
      report.externalities = Externalities::kNone;
  }
  switch (cross.Sign()) {
    case 1:
      report.strategic = Strategic::kComplements;
      break;
    case -1:
      report.strategic = Strategic::kSubstitutes;
      break;
    default:
      report.strategic = Strategic::kNeither;
  }
  return report;
}

Ordering ExtCompare(const StructureReport& structure, int player, double a,
                    double b) {
  if (player != 0 && player != 1) throw DomainError("player must be 0 or 1");
  if (structure.externalities == Externalities::kNone) {
    throw UnsupportedError("externalities are not monotone");
  }
  if (a == b) return Ordering::kEqual;
  bool greater = a > b;
  if (structure.externalities == Externalities::kNegative) greater = !greater;
  return greater ? Ordering::kHigher : Ordering::kLower;
}

const char* ToString(Externalities value) {
  switch (value) {
    case Externalities::kPositive:
      return "positive";
    case Externalities::kNegative:
      return "negative";
    default:
      return "none";
  }
}

const char* ToString(Strategic value) {
  switch (value) {
    case Strategic::kComplements:
      return "complements";
    case Strategic::kSubstitutes:
      return "substitutes";
    default:
      return "neither";
  }
}

const char* ToString(Ordering value) {
  switch (value) {
    case Ordering::kHigher:
      return "higher";
    case Ordering::kEqual:
      return "equal";
    default:
      return "lower";
  }
}

}  // namespace cue
