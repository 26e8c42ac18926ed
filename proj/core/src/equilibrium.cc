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

#include "cue/equilibrium.h"

#include <algorithm>
#include <climits>

#include "cue/errors.h"

namespace cue {

CoarseGame::CoarseGame(const PayoffTable& table, LevelClustering f1,
                       LevelClustering f2)
    : table_(&table), f_{std::move(f1), std::move(f2)} {
  for (int p = 0; p < 2; ++p) {
    int q = Opponent(p);
    best_[p].resize(table.size(q));
    for (int opp = 0; opp < table.size(q); ++opp) {
      // Classes are monotone in levels, so the best class is the class of
      // the best level.
      best_[p][opp] = f_[p].Class(table.best_level(p, opp));
    }
  }
}

CoarseGame::CoarseGame(const PayoffTable& table, const ClusteringProfile& f)
    : CoarseGame(table, LevelClustering(f[0], table.levels(0), table.tol()),
                 LevelClustering(f[1], table.levels(1), table.tol())) {}

bool IsClusteredNe(const CoarseGame& game, const Profile& s) {
  const PayoffTable& table = game.table();
  for (int p = 0; p < 2; ++p) {
    if (s[p] < 0 || s[p] >= table.size(p)) {
      throw DomainError("profile is not on the grid");
    }
  }
  return game.IsNe(s);
}

std::vector<Profile> EnumerateNe(const CoarseGame& game) {
  const PayoffTable& table = game.table();
  std::vector<Profile> equilibria;
  for (int i = 0; i < table.size(0); ++i) {
    for (int j = 0; j < table.size(1); ++j) {
      if (game.IsNe({i, j})) equilibria.push_back({i, j});
    }
  }
  return equilibria;
}

bool ReachableSet::Contains(const Profile& s) const {
  return reached_.count(table_->cell(s)) > 0;
}

std::vector<Profile> ReachableSet::Profiles() const {
  std::vector<int> cells;
  cells.reserve(reached_.size());
  for (const auto& entry : reached_) cells.push_back(entry.first);
  std::sort(cells.begin(), cells.end());
  std::vector<Profile> profiles;
  profiles.reserve(cells.size());
  for (int c : cells) profiles.push_back(table_->profile(c));
  return profiles;
}

ImprovementPath ReachableSet::PathTo(const Profile& s) const {
  ImprovementPath path;
  int c = table_->cell(s);
  if (!reached_.count(c)) throw DomainError("profile was not reached");
  int start = table_->cell(anchor_);
  while (c != start) {
    const Step& step = reached_.at(c);
    path.steps.push_back(table_->profile(c));
    path.movers.push_back(step.mover);
    c = step.parent;
  }
  path.steps.push_back(anchor_);
  std::reverse(path.steps.begin(), path.steps.end());
  std::reverse(path.movers.begin(), path.movers.end());
  return path;
}

ReachableSet ImprovementReachable(
    const CoarseGame& game, const Profile& anchor, MoveMode mode,
    const std::function<bool(const Profile&)>& stop) {
  const PayoffTable& table = game.table();
  ReachableSet reach;
  reach.table_ = &table;
  reach.anchor_ = anchor;
  std::vector<int> queue;
  queue.reserve(64);
  int start = table.cell(anchor);
  reach.reached_.emplace(start, ReachableSet::Step{start, -1});
  queue.push_back(start);
  if (stop && stop(anchor)) {
    reach.stopped_ = true;
    reach.stop_profile_ = anchor;
    return reach;
  }

  auto visit = [&](const Profile& t, int from, int mover) {
    int c = table.cell(t);
    if (!reach.reached_.emplace(c, ReachableSet::Step{from, mover}).second) {
      return false;
    }
    queue.push_back(c);
    if (stop && stop(t)) {
      reach.stopped_ = true;
      reach.stop_profile_ = t;
      return true;
    }
    return false;
  };

  if (mode == MoveMode::kUnilateral) {
    // Lowest class each line (player, opponent strategy) was expanded from.
    // Expanding again from a class at least as high adds nothing new.
    std::array<std::vector<int>, 2> expanded = {
        std::vector<int>(table.size(1), INT_MAX),
        std::vector<int>(table.size(0), INT_MAX)};
    for (size_t head = 0; head < queue.size(); ++head) {
      int c = queue[head];
      Profile s = table.profile(c);
      for (int p = 0; p < 2; ++p) {
        int opp = s[Opponent(p)];
        int cls = game.Class(p, s);
        if (cls >= game.BestClass(p, opp)) continue;
        int& lowest = expanded[p][opp];
        if (cls >= lowest) continue;
        lowest = cls;
        for (int own = 0; own < table.size(p); ++own) {
          Profile t = MakeProfile(p, own, opp);
          if (game.Class(p, t) > cls && visit(t, c, p)) return reach;
        }
      }
    }
    return reach;
  }

  std::array<std::vector<int>, 2> moves;
  for (size_t head = 0; head < queue.size(); ++head) {
    int c = queue[head];
    Profile s = table.profile(c);
    for (int p = 0; p < 2; ++p) {
      moves[p].assign(1, s[p]);
      int cls = game.Class(p, s);
      for (int own = 0; own < table.size(p); ++own) {
        if (game.Class(p, MakeProfile(p, own, s[Opponent(p)])) > cls) {
          moves[p].push_back(own);
        }
      }
    }
    for (int a : moves[0]) {
      for (int b : moves[1]) {
        bool first = a != s[0];
        bool second = b != s[1];
        if (!first && !second) continue;
        int mover = first && second ? kBothMove : (first ? 0 : 1);
        if (visit({a, b}, c, mover)) return reach;
      }
    }
  }
  return reach;
}

PlausibleSet PlausibleEquilibria(const CoarseGame& game, const Profile& anchor,
                                 MoveMode mode) {
  PlausibleSet set;
  set.anchor = anchor;
  ReachableSet reach = ImprovementReachable(game, anchor, mode);
  for (const Profile& s : reach.Profiles()) {
    if (!game.IsNe(s)) continue;
    set.members.push_back(s);
    set.reached_via.push_back(reach.PathTo(s));
  }
  return set;
}

std::string ValidatePath(const CoarseGame& game, const ImprovementPath& path) {
  if (path.steps.empty()) return "path has no steps";
  if (path.movers.size() + 1 != path.steps.size()) {
    return "path has " + std::to_string(path.steps.size()) + " steps but " +
           std::to_string(path.movers.size()) + " movers";
  }
  const PayoffTable& table = game.table();
  for (const Profile& s : path.steps) {
    for (int p = 0; p < 2; ++p) {
      if (s[p] < 0 || s[p] >= table.size(p)) return "step is off the grid";
    }
  }
  for (size_t k = 0; k + 1 < path.steps.size(); ++k) {
    const Profile& a = path.steps[k];
    const Profile& b = path.steps[k + 1];
    int mover = path.movers[k];
    std::string where = "step " + std::to_string(k + 1);
    auto improves = [&](int p) {
      Profile moved = MakeProfile(p, b[p], a[Opponent(p)]);
      return game.Class(p, moved) > game.Class(p, a);
    };
    if (mover == 0 || mover == 1) {
      int q = Opponent(mover);
      if (a[q] != b[q] || a[mover] == b[mover]) {
        return where + ": not a unilateral move by player " +
               std::to_string(mover + 1);
      }
      if (!improves(mover)) {
        return where + ": move does not raise the clustered payoff";
      }
    } else if (mover == kBothMove) {
      if (a[0] == b[0] || a[1] == b[1]) {
        return where + ": joint move leaves a coordinate unchanged";
      }
      if (!improves(0) || !improves(1)) {
        return where + ": joint move does not raise both clustered payoffs";
      }
    } else {
      return where + ": unknown mover";
    }
  }
  return "";
}

Profile ExtremalBrDynamics(const PayoffTable& table,
                           const StructureReport& structure,
                           const Profile& start) {
  if (structure.externalities == Externalities::kNone) {
    throw UnsupportedError("extremal best-reply dynamics need monotone "
                           "externalities");
  }
  bool positive = structure.externalities == Externalities::kPositive;
  Profile s = start;
  int cap = 10 * std::max(table.size(0), table.size(1));
  for (int round = 0; round < cap; ++round) {
    bool changed = false;
    for (int p = 0; p < 2; ++p) {
      std::vector<int> replies = BestReply(table, p, s[Opponent(p)]);
      if (std::binary_search(replies.begin(), replies.end(), s[p])) continue;
      s[p] = positive ? replies.front() : replies.back();
      changed = true;
    }
    if (!changed) return s;
  }
  throw ConvergenceError("best-reply dynamics did not settle within " +
                         std::to_string(cap) + " rounds");
}

}  // namespace cue
