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

#ifndef CUE_CHARACTERIZATION_H_
#define CUE_CHARACTERIZATION_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cue/game.h"
#include "cue/payoff_table.h"
#include "cue/solver.h"

namespace cue {

// Whether s lies at least one grid step inside the strategy rectangle.
bool IsInterior(const PayoffTable& table, const Profile& s);

// Whether s_p is a best reply to s_-p.
bool IsBestReplying(const PayoffTable& table, int player, const Profile& s);

// Necessary conditions for interior CUE outcomes in which neither player
// best-replies, under monotone externalities.
struct Thm1Report {
  // cond1[i]: s_i is better for the opponent than every best reply of i.
  std::array<bool, 2> cond1 = {false, false};
  // cond2[i]: no profile s' with s'_i no better for -i than s_i and s'_-i
  // no better for i than s_-i, where -i is no worse off or best-replies,
  // gives i more than at s.
  std::array<bool, 2> cond2 = {false, false};
  std::array<std::optional<Profile>, 2> cond2_witness;

  bool holds() const { return cond1[0] && cond1[1] && cond2[0] && cond2[1]; }
};

// Throws ApplicabilityError unless externalities are monotone, s is
// interior and neither player best-replies.
Thm1Report Thm1Check(const PayoffTable& table,
                     const StructureReport& structure, const Profile& s);

// The second condition above for one player role, with a witness.
bool StackelbergRobust(const PayoffTable& table,
                       const StructureReport& structure, int player,
                       const Profile& s, Profile* witness = nullptr);

// Profiles satisfying: each s_i is at least as good for the opponent as one of
// i's best replies, and the robustness condition of Thm1Check for both roles.
// Under complements these are exactly the CUE outcomes. With
// `interior_only` the boundary rows and columns stay unlabeled. Throws
// ApplicabilityError without complements and monotone externalities.
Region Thm2Region(const PayoffTable& table, const StructureReport& structure,
                  bool interior_only = true);

struct Thm3Report {
  // The player who does not best-reply; the opponent does.
  int player = 0;
  // s_i is no better for the opponent than i's best replies.
  bool part1 = false;
  std::vector<int> best_replies;
  // Set when both payoffs are strictly concave in the own strategy.
  bool part2_applicable = false;
  // Equilibrium e of the unclustered game with s_i no better for the
  // opponent than e_i and s_-i at least as good for i as e_-i.
  std::optional<Profile> equilibrium;
  bool part2 = false;
};

// Throws ApplicabilityError unless externalities are monotone, actions are
// substitutes, s is interior and exactly one player best-replies.
Thm3Report Thm3Check(const PayoffTable& table,
                     const StructureReport& structure, const Profile& s);

// The equilibrium reached by extremal best-reply dynamics from the corner
// that is worst for both opponents. Throws ApplicabilityError without
// complements and monotone externalities.
Profile WorstNe(const PayoffTable& table, const StructureReport& structure);

struct StackelbergResult {
  int leader = 0;
  Profile profile = {0, 0};
  double leader_value = 0.0;
};

// Leader-optimal profile where the follower best-replies. Follower ties are
// broken in the leader's favour unless `pessimistic`.
StackelbergResult Stackelberg(const PayoffTable& table, int leader,
                              bool pessimistic = false);

// Checks CUE at the Stackelberg profile with the leader clustering all
// payoffs and the follower none.
ConceptVerdict StackelbergIsCue(const Solver& solver, int leader,
                                bool pessimistic = false);

// Checks strong CUE at s with each player clustering the payoffs at or
// above their own payoff at s. Throws ApplicabilityError if s is not Pareto
// efficient on the grid or some player gets less than the grid
// Stackelberg leader value.
ConceptVerdict Prop5StrongSupport(const Solver& solver, const Profile& s);

// |a & b| / |a | b| over the cells of two label layers; 1 if both are empty.
double Jaccard(const std::vector<char>& a, const std::vector<char>& b);

}  // namespace cue

#endif  // CUE_CHARACTERIZATION_H_
