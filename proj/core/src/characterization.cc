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

#include "cue/characterization.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cue/errors.h"

namespace cue {
namespace {

void RequireMonotone(const StructureReport& structure) {
  if (structure.externalities == Externalities::kNone) {
    throw ApplicabilityError("externalities are not monotone");
  }
}

// Whether strategy a of `player` is at least as good for the opponent as b.
bool NoLower(const StructureReport& structure, int player, double a,
             double b) {
  return ExtCompare(structure, player, a, b) != Ordering::kLower;
}

bool NoHigher(const StructureReport& structure, int player, double a,
              double b) {
  return ExtCompare(structure, player, a, b) != Ordering::kHigher;
}

// Best reply of `player` to `opp` among `allowed` own strategies, picking
// the member closest to `current` (lower index on ties).
int NearestBestReply(const PayoffTable& table, int player, int opp,
                     int current, const std::vector<char>& allowed) {
  int best_level = -1;
  for (int own = 0; own < table.size(player); ++own) {
    if (!allowed[own]) continue;
    best_level =
        std::max(best_level, table.level(player, MakeProfile(player, own, opp)));
  }
  int choice = -1;
  for (int own = 0; own < table.size(player); ++own) {
    if (!allowed[own]) continue;
    if (table.level(player, MakeProfile(player, own, opp)) != best_level) {
      continue;
    }
    if (choice < 0 || std::abs(own - current) < std::abs(choice - current)) {
      choice = own;
    }
  }
  return choice;
}

}  // namespace

bool IsInterior(const PayoffTable& table, const Profile& s) {
  for (int p = 0; p < 2; ++p) {
    if (s[p] < 1 || s[p] > table.size(p) - 2) return false;
  }
  return true;
}

bool IsBestReplying(const PayoffTable& table, int player, const Profile& s) {
  return table.level(player, s) == table.best_level(player, s[Opponent(player)]);
}

bool StackelbergRobust(const PayoffTable& table,
                       const StructureReport& structure, int player,
                       const Profile& s, Profile* witness) {
  const int i = player;
  const int j = Opponent(player);
  const StrategyGrid& grid = table.grid();
  double own_payoff = table.payoff(i, s);
  double other_payoff = table.payoff(j, s);
  for (int a = 0; a < table.size(i); ++a) {
    if (!NoHigher(structure, i, grid.value(i, a), grid.value(i, s[i]))) {
      continue;
    }
    for (int b = 0; b < table.size(j); ++b) {
      if (!NoHigher(structure, j, grid.value(j, b), grid.value(j, s[j]))) {
        continue;
      }
      Profile t = MakeProfile(i, a, b);
      if (table.payoff(i, t) <= own_payoff + table.tol()) continue;
      bool other_no_worse = table.payoff(j, t) >= other_payoff - table.tol();
      if (other_no_worse || IsBestReplying(table, j, t)) {
        if (witness) *witness = t;
        return false;
      }
    }
  }
  return true;
}

Thm1Report Thm1Check(const PayoffTable& table,
                     const StructureReport& structure, const Profile& s) {
  RequireMonotone(structure);
  if (!IsInterior(table, s)) {
    throw ApplicabilityError("profile is not interior");
  }
  for (int p = 0; p < 2; ++p) {
    if (IsBestReplying(table, p, s)) {
      throw ApplicabilityError("player " + std::to_string(p + 1) +
                               " plays a best reply");
    }
  }
  const StrategyGrid& grid = table.grid();
  Thm1Report report;
  for (int p = 0; p < 2; ++p) {
    report.cond1[p] = true;
    for (int b : BestReply(table, p, s[Opponent(p)])) {
      if (ExtCompare(structure, p, grid.value(p, s[p]), grid.value(p, b)) !=
          Ordering::kHigher) {
        report.cond1[p] = false;
      }
    }
    Profile witness;
    report.cond2[p] = StackelbergRobust(table, structure, p, s, &witness);
    if (!report.cond2[p]) report.cond2_witness[p] = witness;
  }
  return report;
}

Region Thm2Region(const PayoffTable& table, const StructureReport& structure,
                  bool interior_only) {
  RequireMonotone(structure);
  if (structure.strategic != Strategic::kComplements) {
    throw ApplicabilityError("actions are not strategic complements");
  }
  const StrategyGrid& grid = table.grid();
  Region region;
  region.grid = grid;
  region.size = {table.size(0), table.size(1)};
  const int cells = table.num_cells();
  region.is_ne.assign(cells, 0);
  for (int p = 0; p < 2; ++p) {
    region.payoff[p].resize(cells);
    for (int c = 0; c < cells; ++c) {
      region.payoff[p][c] = table.payoff(p, table.profile(c));
    }
  }
  // For each opponent strategy, the best reply that is worst for the
  // opponent, so that every grid equilibrium meets the first condition.
  std::array<std::vector<int>, 2> replies;
  for (int p = 0; p < 2; ++p) {
    int q = Opponent(p);
    for (int opp = 0; opp < table.size(q); ++opp) {
      std::vector<int> br = BestReply(table, p, opp);
      bool positive = structure.externalities == Externalities::kPositive;
      replies[p].push_back(positive ? br.front() : br.back());
    }
  }
  auto& layer = region.flags[static_cast<int>(Concept::kCue)];
  layer.assign(cells, 0);
  for (int c = 0; c < cells; ++c) {
    Profile s = table.profile(c);
    region.is_ne[c] = IsBestReplying(table, 0, s) && IsBestReplying(table, 1, s);
    if (interior_only && !IsInterior(table, s)) continue;
    bool ok = true;
    for (int p = 0; p < 2 && ok; ++p) {
      int top = replies[p][s[Opponent(p)]];
      ok = NoLower(structure, p, grid.value(p, s[p]), grid.value(p, top));
    }
    for (int p = 0; p < 2 && ok; ++p) {
      ok = StackelbergRobust(table, structure, p, s);
    }
    layer[c] = ok ? 1 : 0;
  }
  return region;
}

Thm3Report Thm3Check(const PayoffTable& table,
                     const StructureReport& structure, const Profile& s) {
  RequireMonotone(structure);
  if (structure.strategic != Strategic::kSubstitutes) {
    throw ApplicabilityError("actions are not strategic substitutes");
  }
  if (!IsInterior(table, s)) {
    throw ApplicabilityError("profile is not interior");
  }
  bool replying[2] = {IsBestReplying(table, 0, s),
                      IsBestReplying(table, 1, s)};
  if (replying[0] == replying[1]) {
    throw ApplicabilityError(replying[0]
                                 ? "both players best-reply"
                                 : "neither player best-replies");
  }
  const StrategyGrid& grid = table.grid();
  Thm3Report report;
  const int i = replying[0] ? 1 : 0;
  const int j = Opponent(i);
  report.player = i;
  report.best_replies = BestReply(table, i, s[j]);
  report.part1 = true;
  for (int b : report.best_replies) {
    if (!NoHigher(structure, i, grid.value(i, s[i]), grid.value(i, b))) {
      report.part1 = false;
    }
  }
  report.part2_applicable =
      structure.strictly_concave[0] && structure.strictly_concave[1];
  if (!report.part2_applicable) return report;

  // Best-reply iteration in the game where i may only use strategies at
  // least as good for the opponent as s_i.
  std::vector<char> restricted(table.size(i));
  for (int a = 0; a < table.size(i); ++a) {
    restricted[a] = NoLower(structure, i, grid.value(i, a), grid.value(i, s[i]));
  }
  std::vector<char> everything(table.size(j), 1);
  Profile e = s;
  int cap = 10 * std::max(table.size(0), table.size(1));
  bool settled = false;
  for (int round = 0; round < cap && !settled; ++round) {
    int a = NearestBestReply(table, i, e[j], e[i], restricted);
    int b = NearestBestReply(table, j, a, e[j], everything);
    settled = a == e[i] && b == e[j];
    e[i] = a;
    e[j] = b;
  }
  if (!settled) return report;
  report.equilibrium = e;
  report.part2 = IsBestReplying(table, 0, e) && IsBestReplying(table, 1, e) &&
                 NoHigher(structure, i, grid.value(i, s[i]), grid.value(i, e[i])) &&
                 NoLower(structure, j, grid.value(j, s[j]), grid.value(j, e[j]));
  return report;
}

Profile WorstNe(const PayoffTable& table, const StructureReport& structure) {
  RequireMonotone(structure);
  if (structure.strategic != Strategic::kComplements) {
    throw ApplicabilityError("actions are not strategic complements");
  }
  bool positive = structure.externalities == Externalities::kPositive;
  Profile corner = positive ? Profile{0, 0}
                            : Profile{table.size(0) - 1, table.size(1) - 1};
  return ExtremalBrDynamics(table, structure, corner);
}

StackelbergResult Stackelberg(const PayoffTable& table, int leader,
                              bool pessimistic) {
  const int follower = Opponent(leader);
  StackelbergResult result;
  result.leader = leader;
  bool found = false;
  for (int x = 0; x < table.size(leader); ++x) {
    bool have = false;
    Profile pick{0, 0};
    double value = 0.0;
    for (int y = 0; y < table.size(follower); ++y) {
      Profile t = MakeProfile(leader, x, y);
      if (!IsBestReplying(table, follower, t)) continue;
      double v = table.payoff(leader, t);
      if (!have || (pessimistic ? v < value : v > value)) {
        have = true;
        value = v;
        pick = t;
      }
    }
    if (!found || value > result.leader_value) {
      found = true;
      result.leader_value = value;
      result.profile = pick;
    }
  }
  return result;
}

ConceptVerdict StackelbergIsCue(const Solver& solver, int leader,
                                bool pessimistic) {
  StackelbergResult result = Stackelberg(solver.table(), leader, pessimistic);
  ClusteringProfile f;
  f[leader] = Clustering::All();
  f[Opponent(leader)] = Clustering::None();
  return solver.Check(Concept::kCue, f, result.profile);
}

ConceptVerdict Prop5StrongSupport(const Solver& solver, const Profile& s) {
  const PayoffTable& table = solver.table();
  for (int c = 0; c < table.num_cells(); ++c) {
    Profile t = table.profile(c);
    int up = 0;
    bool down = false;
    for (int p = 0; p < 2; ++p) {
      int delta = table.level(p, t) - table.level(p, s);
      if (delta > 0) ++up;
      if (delta < 0) down = true;
    }
    if (up > 0 && !down) {
      throw ApplicabilityError(
          "Pareto efficiency fails: (" + table.grid().Label(0, t[0]) + ", " +
          table.grid().Label(1, t[1]) + ") dominates the profile");
    }
  }
  for (int p = 0; p < 2; ++p) {
    StackelbergResult leader = Stackelberg(table, p);
    if (table.payoff(p, s) < leader.leader_value - table.tol()) {
      throw ApplicabilityError(
          "Stackelberg robustness fails: player " + std::to_string(p + 1) +
          " gets " + FormatNumber(table.payoff(p, s)) +
          " below the leader value " + FormatNumber(leader.leader_value));
    }
  }
  ClusteringProfile f = {Clustering::AtLeast(table.payoff(0, s)),
                         Clustering::AtLeast(table.payoff(1, s))};
  return solver.Check(Concept::kStrong, f, s);
}

double Jaccard(const std::vector<char>& a, const std::vector<char>& b) {
  if (a.size() != b.size()) throw ValidationError("layer sizes differ");
  long both = 0;
  long either = 0;
  for (size_t c = 0; c < a.size(); ++c) {
    if (a[c] && b[c]) ++both;
    if (a[c] || b[c]) ++either;
  }
  return either == 0 ? 1.0 : static_cast<double>(both) / either;
}

}  // namespace cue
