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

#ifndef CUE_EQUILIBRIUM_H_
#define CUE_EQUILIBRIUM_H_

#include <array>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cue/clustering.h"
#include "cue/game.h"
#include "cue/payoff_table.h"

namespace cue {

// A game on a grid whose players rank outcomes by clustered payoff. Holds a
// reference to the table, which must outlive it.
class CoarseGame {
 public:
  CoarseGame(const PayoffTable& table, LevelClustering f1, LevelClustering f2);
  CoarseGame(const PayoffTable& table, const ClusteringProfile& f);

  const PayoffTable& table() const { return *table_; }
  const LevelClustering& clustering(int player) const { return f_[player]; }

  // Clustered payoff class of `player` at s.
  int Class(int player, const Profile& s) const {
    return f_[player].Class(table_->level(player, s));
  }
  // Best clustered class `player` reaches against opponent strategy `opp`.
  int BestClass(int player, int opp) const { return best_[player][opp]; }

  bool IsNe(const Profile& s) const {
    return Class(0, s) == best_[0][s[1]] && Class(1, s) == best_[1][s[0]];
  }

 private:
  const PayoffTable* table_;
  std::array<LevelClustering, 2> f_;
  std::array<std::vector<int>, 2> best_;
};

bool IsClusteredNe(const CoarseGame& game, const Profile& s);

// All grid Nash equilibria of the clustered game in row-major order.
std::vector<Profile> EnumerateNe(const CoarseGame& game);

enum class MoveMode {
  // One player changes strategy per step.
  kUnilateral,
  // Both may change in one step, each improving against the pre-step
  // opponent strategy.
  kSimultaneous,
};

inline constexpr int kBothMove = 2;

struct ImprovementPath {
  std::vector<Profile> steps;
  // movers[k] is the player (0, 1 or kBothMove) moving from steps[k] to
  // steps[k + 1].
  std::vector<int> movers;
};

// Breadth-first closure of an anchor under strictly improving moves.
class ReachableSet {
 public:
  bool Contains(const Profile& s) const;
  // Reached profiles in row-major order; includes the anchor.
  std::vector<Profile> Profiles() const;
  // Shortest improvement path from the anchor. Requires Contains(s).
  ImprovementPath PathTo(const Profile& s) const;
  // Set when the search stopped early on a profile accepted by `stop`.
  bool stopped() const { return stopped_; }
  const Profile& stop_profile() const { return stop_profile_; }

 private:
  friend ReachableSet ImprovementReachable(
      const CoarseGame&, const Profile&, MoveMode,
      const std::function<bool(const Profile&)>&);

  const PayoffTable* table_ = nullptr;
  Profile anchor_ = {0, 0};
  struct Step {
    int parent;  // the anchor's own cell for the anchor
    int mover;
  };
  std::unordered_map<int, Step> reached_;
  bool stopped_ = false;
  Profile stop_profile_ = {0, 0};
};

// Profiles reachable from `anchor`. If `stop` accepts a reached profile the
// search ends there and the set is partial.
ReachableSet ImprovementReachable(
    const CoarseGame& game, const Profile& anchor,
    MoveMode mode = MoveMode::kUnilateral,
    const std::function<bool(const Profile&)>& stop = nullptr);

struct PlausibleSet {
  Profile anchor = {0, 0};
  std::vector<Profile> members;
  std::vector<ImprovementPath> reached_via;
};

// Clustered equilibria reachable from the anchor, each with a path.
PlausibleSet PlausibleEquilibria(const CoarseGame& game, const Profile& anchor,
                                 MoveMode mode = MoveMode::kUnilateral);

// Empty string if every step of the path is a strict clustered improvement
// for its mover against the pre-step opponent strategy, otherwise a
// description of the first bad step.
std::string ValidatePath(const CoarseGame& game, const ImprovementPath& path);

// Alternating best-reply iteration from `start`, each player picking the
// member of the best-reply set that is worst for the opponent. Returns the
// fixed point. Throws ConvergenceError after 10 n rounds, UnsupportedError
// without monotone externalities.
Profile ExtremalBrDynamics(const PayoffTable& table,
                           const StructureReport& structure,
                           const Profile& start);

}  // namespace cue

#endif  // CUE_EQUILIBRIUM_H_
