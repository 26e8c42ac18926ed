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

#ifndef CUE_SOLVER_H_
#define CUE_SOLVER_H_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cue/clustering.h"
#include "cue/equilibrium.h"
#include "cue/payoff_table.h"

namespace cue {

enum class Concept { kWeak, kCue, kStrong };

// How a CUE check treats several plausible equilibria of a deviation game:
// kForall requires the deviator to be weakly worse off in each of them,
// kExists in at least one.
enum class Quantifier { kForall, kExists };

const char* ToString(Concept kind);
const char* ToString(Quantifier quantifier);
const char* ToString(MoveMode mode);

struct FamilyOptions {
  // Number of payoff levels sampled for thresholds and intervals.
  int K = 15;
  // Also try at_least(v) for every guaranteed commitment value v of the
  // deviator: its payoff at (x, b) where b is the opponent best reply to x
  // that is worst for the deviator.
  bool commitment_thresholds = true;
  // Also try at_least(pi_i(x, s_-i)) for every own grid strategy x.
  bool anchor_thresholds = false;

  std::string Describe() const;
};

struct SolverOptions {
  FamilyOptions family;
  Quantifier quantifier = Quantifier::kForall;
  MoveMode mode = MoveMode::kUnilateral;
};

struct Refutation {
  enum class Kind {
    // The profile is not an equilibrium of the clustered game: `player` does
    // better with `better_strategy`.
    kNotEquilibrium,
    // `player` gains by switching to `deviation`.
    kDeviation,
  };
  Kind kind = Kind::kDeviation;
  int player = 0;
  int better_strategy = -1;
  Clustering deviation;
  // Equilibrium of the deviation game at which the deviator is compared.
  // For weak and exists-CUE refutations it is the least profitable one.
  Profile equilibrium = {0, 0};
  // Improvement path from the anchor to `equilibrium` (CUE only).
  ImprovementPath path;
  double anchor_payoff = 0.0;
  double equilibrium_payoff = 0.0;
};

struct Certificate {
  // Clustering profile the verdict was computed under.
  ClusteringProfile supporting;
  std::optional<Refutation> refutation;
  int deviations_checked = 0;
  // Deviation games without an equilibrium; these count as satisfied.
  int vacuous_deviations = 0;
};

struct ConceptVerdict {
  Concept kind = Concept::kWeak;
  bool holds = false;
  Profile profile = {0, 0};
  Quantifier quantifier = Quantifier::kForall;
  MoveMode mode = MoveMode::kUnilateral;
  std::string family;
  Certificate certificate;
};

// Deviator-payoff summary of all equilibria of one deviation game.
struct NeSummary {
  bool any = false;
  int min_level = 0;
  int max_level = 0;
  Profile argmin = {0, 0};
  Profile argmax = {0, 0};
};

class SummaryCache;

// Decides weak CUE, CUE and strong CUE on one payoff table. Deviation-game
// summaries are memoized; a Solver may be used from several threads.
class Solver {
 public:
  explicit Solver(const PayoffTable& table, SolverOptions options = {});
  ~Solver();

  const PayoffTable& table() const { return *table_; }
  const SolverOptions& options() const { return options_; }
  // Deviation clusterings tried for `player`, excluding anchor thresholds.
  const std::vector<DeviationClustering>& family(int player) const {
    return family_[player];
  }
  // Grid equilibria of the unclustered game.
  const std::vector<Profile>& nash_equilibria() const { return nash_; }

  ConceptVerdict Check(Concept kind, const ClusteringProfile& f,
                       const Profile& s) const;

  // Default supporting profiles {at_least(pi_i(s)), all, none} per player.
  std::vector<ClusteringProfile> SupportFamily(const Profile& s) const;

  // Holds if some supporting profile passes; the verdict of the first
  // passing profile is returned, else that of the first one tried.
  ConceptVerdict IsOutcome(Concept kind, const Profile& s) const;
  ConceptVerdict IsOutcome(Concept kind, const Profile& s,
                           const std::vector<ClusteringProfile>& support) const;

  // Summary of the equilibria of the game where `player` uses `deviation`
  // and the opponent `other`.
  NeSummary Summarize(int player, const LevelClustering& deviation,
                      const LevelClustering& other) const;

 private:
  ConceptVerdict CheckLevels(Concept kind, const ClusteringProfile& f,
                             const std::array<LevelClustering, 2>& lf,
                             const Profile& s) const;
  std::vector<const DeviationClustering*> Deviations(
      int player, const Profile& s,
      std::vector<DeviationClustering>* scratch) const;

  const PayoffTable* table_;
  SolverOptions options_;
  std::array<std::vector<DeviationClustering>, 2> family_;
  std::vector<Profile> nash_;
  std::unique_ptr<SummaryCache> cache_;
};

ConceptVerdict CheckWeakCue(const PayoffTable& table,
                            const ClusteringProfile& f, const Profile& s,
                            const FamilyOptions& family = {});
ConceptVerdict CheckStrongCue(const PayoffTable& table,
                              const ClusteringProfile& f, const Profile& s,
                              const FamilyOptions& family = {});
ConceptVerdict CheckCue(const PayoffTable& table, const ClusteringProfile& f,
                        const Profile& s, const FamilyOptions& family = {},
                        Quantifier quantifier = Quantifier::kForall,
                        MoveMode mode = MoveMode::kUnilateral);

// Re-validates a verdict: refutations are replayed step by step, and
// verdicts that hold are recomputed. Returns an empty string on success.
std::string ReplayVerdict(const Solver& solver, const ConceptVerdict& verdict);

// Grid-resolved labels for every profile.
struct Region {
  StrategyGrid grid;
  std::array<int, 2> size = {0, 0};
  std::array<std::vector<double>, 2> payoff;
  std::vector<char> is_ne;
  // Indexed by Concept; empty when the concept was not requested.
  std::array<std::vector<char>, 3> flags;

  int cell(const Profile& s) const { return s[0] * size[1] + s[1]; }
  bool has(Concept kind) const {
    return !flags[static_cast<int>(kind)].empty();
  }
  bool label(Concept kind, const Profile& s) const {
    return flags[static_cast<int>(kind)][cell(s)] != 0;
  }
  std::vector<Profile> Members(Concept kind) const;
};

// Runs IsOutcome at every grid profile for each kind, splitting rows
// across `workers` threads. The result does not depend on `workers`.
Region EnumerateOutcomes(const Solver& solver,
                         const std::vector<Concept>& kinds, int workers = 1);

enum class Rationality { kStrict, kWeak, kNot };
const char* ToString(Rationality value);

struct FolkReport {
  Rationality rationality = Rationality::kNot;
  MinimaxValues bounds;
  ConceptVerdict weak_outcome;
  // Strictly rational implies weak outcome, and weak outcome implies weakly
  // rational.
  bool consistent = false;
};

// Classifies s against the punishment values (lowest best-reply payoffs) and
// cross-checks with a weak-CUE outcome search. `slack` widens the weak
// classification.
FolkReport FolkCheck(const Solver& solver, const Profile& s,
                     double slack = kPayoffTol);

}  // namespace cue

#endif  // CUE_SOLVER_H_
