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

#include "cue/payoff_table.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cue/errors.h"

namespace cue {

namespace {

// Rounds away floating-point noise below 1e-12 so that payoffs print short.
double Snap(double v) {
  if (!std::isfinite(v) || std::fabs(v) > 1e3) return v;
  return std::round(v * 1e12) / 1e12;
}

}  // namespace

PayoffTable::PayoffTable(Game game, StrategyGrid grid, double tol)
    : game_(std::move(game)), grid_(std::move(grid)), tol_(tol) {
  size_ = {grid_.size(0), grid_.size(1)};
  const int cells = num_cells();
  for (int p = 0; p < 2; ++p) payoff_[p].resize(cells);
  if (game_.is_finite()) {
    const FiniteGame& g = game_.finite();
    for (int p = 0; p < 2; ++p) {
      const auto& matrix = g.payoffs[p];
      // Expected payoff of each pure action of the first player against
      // each column strategy.
      std::vector<double> against(matrix.size());
      for (int j = 0; j < size_[1]; ++j) {
        const auto& y = grid_.point(1, j).mixture;
        for (size_t a = 0; a < matrix.size(); ++a) {
          double sum = 0.0;
          for (size_t b = 0; b < y.size(); ++b) sum += matrix[a][b] * y[b];
          against[a] = sum;
        }
        for (int i = 0; i < size_[0]; ++i) {
          const auto& x = grid_.point(0, i).mixture;
          double sum = 0.0;
          for (size_t a = 0; a < x.size(); ++a) sum += x[a] * against[a];
          payoff_[p][i * size_[1] + j] = Snap(sum);
        }
      }
    }
  } else {
    const IntervalGame& g = game_.interval();
    for (int i = 0; i < size_[0]; ++i) {
      for (int j = 0; j < size_[1]; ++j) {
        double s1 = grid_.value(0, i);
        double s2 = grid_.value(1, j);
        for (int p = 0; p < 2; ++p) {
          payoff_[p][i * size_[1] + j] = Snap(g.payoff[p].Evaluate(s1, s2));
        }
      }
    }
  }

  std::vector<int> order(cells);
  for (int p = 0; p < 2; ++p) {
    const auto& values = payoff_[p];
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    level_[p].resize(cells);
    auto& levels = levels_[p];
    for (int c : order) {
      double v = values[c];
      if (levels.empty() || v - levels.back() > tol_) levels.push_back(v);
      level_[p][c] = static_cast<int>(levels.size()) - 1;
    }
    int q = Opponent(p);
    best_[p].assign(size_[q], -1);
    for (int own = 0; own < size_[p]; ++own) {
      for (int opp = 0; opp < size_[q]; ++opp) {
        int l = level_[p][cell(MakeProfile(p, own, opp))];
        best_[p][opp] = std::max(best_[p][opp], l);
      }
    }
  }
}

PayoffTable PayoffTable::Make(const Game& game, int resolution, double tol) {
  return PayoffTable(game, StrategyGrid::Make(game, resolution), tol);
}

std::vector<int> BestReply(const PayoffTable& table, int player, int opp,
                           double tol) {
  double best = BestReplyPayoff(table, player, opp);
  std::vector<int> members;
  for (int own = 0; own < table.size(player); ++own) {
    if (table.payoff(player, MakeProfile(player, own, opp)) >= best - tol) {
      members.push_back(own);
    }
  }
  return members;
}

double BestReplyPayoff(const PayoffTable& table, int player, int opp) {
  if (opp < 0 || opp >= table.size(Opponent(player))) {
    throw DomainError("opponent strategy index out of range");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int own = 0; own < table.size(player); ++own) {
    best = std::max(best, table.payoff(player, MakeProfile(player, own, opp)));
  }
  return best;
}

MinimaxValues ComputeMinimax(const PayoffTable& table) {
  MinimaxValues values;
  for (int p = 0; p < 2; ++p) {
    int q = Opponent(p);
    double under = std::numeric_limits<double>::infinity();
    for (int opp = 0; opp < table.size(q); ++opp) {
      under = std::min(under, BestReplyPayoff(table, p, opp));
    }
    double over = -std::numeric_limits<double>::infinity();
    for (int own = 0; own < table.size(p); ++own) {
      double worst = std::numeric_limits<double>::infinity();
      for (int opp = 0; opp < table.size(q); ++opp) {
        worst = std::min(worst, table.payoff(p, MakeProfile(p, own, opp)));
      }
      over = std::max(over, worst);
    }
    values.under[p] = under;
    values.over[p] = over;
  }
  return values;
}

std::optional<double> ConstantSum(const PayoffTable& table, double tol) {
  double first = table.payoff(0, {0, 0}) + table.payoff(1, {0, 0});
  for (int c = 0; c < table.num_cells(); ++c) {
    Profile s = table.profile(c);
    double sum = table.payoff(0, s) + table.payoff(1, s);
    if (std::fabs(sum - first) > tol) return std::nullopt;
  }
  return first;
}

}  // namespace cue
