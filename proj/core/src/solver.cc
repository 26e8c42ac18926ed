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

#include "cue/solver.h"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <thread>
#include <tuple>

#include "cue/errors.h"

namespace cue {

class SummaryCache {
 public:
  using Ranges = std::vector<std::pair<int, int>>;
  using Key = std::tuple<int, Ranges, Ranges>;

  bool Find(const Key& key, NeSummary* summary) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    *summary = it->second;
    return true;
  }

  // Entries are pure functions of the key, so concurrent inserts of the
  // same key store the same value.
  void Insert(Key key, const NeSummary& summary) {
    std::unique_lock lock(mutex_);
    if (map_.size() >= kCapacity) return;
    map_.emplace(std::move(key), summary);
  }

 private:
  static constexpr size_t kCapacity = 1 << 18;
  mutable std::shared_mutex mutex_;
  std::map<Key, NeSummary> map_;
};

const char* ToString(Concept kind) {
  switch (kind) {
    case Concept::kWeak:
      return "weak";
    case Concept::kCue:
      return "cue";
    default:
      return "strong";
  }
}

const char* ToString(Quantifier quantifier) {
  return quantifier == Quantifier::kForall ? "forall" : "exists";
}

const char* ToString(MoveMode mode) {
  return mode == MoveMode::kUnilateral ? "unilateral" : "simultaneous";
}

const char* ToString(Rationality value) {
  switch (value) {
    case Rationality::kStrict:
      return "strictly_IR";
    case Rationality::kWeak:
      return "weakly_IR";
    default:
      return "not_IR";
  }
}

std::string FamilyOptions::Describe() const {
  std::string text = "none,all,>=c,<=c,[a,b] over K=" + std::to_string(K) +
                     " payoff quantiles";
  if (commitment_thresholds) text += " + commitment thresholds";
  if (anchor_thresholds) text += " + anchor thresholds";
  return text;
}

namespace {

// Appends at_least(v) for each payoff v that `player` secures by committing
// to a grid strategy when the opponent best replies against it adversarially.
void AddCommitmentThresholds(const PayoffTable& table, int player,
                             std::vector<DeviationClustering>* family) {
  int q = Opponent(player);
  std::set<int> levels;
  int stackelberg = 0;
  for (int own = 0; own < table.size(player); ++own) {
    int worst = table.num_levels(player);
    for (int reply : BestReply(table, q, own)) {
      int level = table.level(player, MakeProfile(player, own, reply));
      worst = std::min(worst, level);
      stackelberg = std::max(stackelberg, level);
    }
    levels.insert(worst);
  }
  levels.insert(stackelberg);
  std::set<LevelClustering> seen;
  for (const DeviationClustering& d : *family) seen.insert(d.levels);
  for (int level : levels) {
    LevelClustering form =
        LevelClustering::AtLeast(level, table.num_levels(player));
    if (!seen.insert(form).second) continue;
    family->push_back(
        {Clustering::AtLeast(table.levels(player)[level]), std::move(form)});
  }
}

}  // namespace

Solver::Solver(const PayoffTable& table, SolverOptions options)
    : table_(&table),
      options_(options),
      cache_(std::make_unique<SummaryCache>()) {
  for (int p = 0; p < 2; ++p) {
    family_[p] = DeviationFamily(table, p, options_.family.K);
    if (options_.family.commitment_thresholds) {
      AddCommitmentThresholds(table, p, &family_[p]);
    }
  }
  nash_ = EnumerateNe(CoarseGame(table, LevelClustering(), LevelClustering()));
}

Solver::~Solver() = default;

NeSummary Solver::Summarize(int player, const LevelClustering& deviation,
                            const LevelClustering& other) const {
  SummaryCache::Key key{player, deviation.ranges(), other.ranges()};
  NeSummary summary;
  if (cache_->Find(key, &summary)) return summary;
  const PayoffTable& table = *table_;
  CoarseGame game = player == 0 ? CoarseGame(table, deviation, other)
                                : CoarseGame(table, other, deviation);
  for (int c = 0; c < table.num_cells(); ++c) {
    Profile s = table.profile(c);
    if (!game.IsNe(s)) continue;
    int level = table.level(player, s);
    if (!summary.any || level < summary.min_level) {
      summary.min_level = level;
      summary.argmin = s;
    }
    if (!summary.any || level > summary.max_level) {
      summary.max_level = level;
      summary.argmax = s;
    }
    summary.any = true;
  }
  cache_->Insert(std::move(key), summary);
  return summary;
}

std::vector<const DeviationClustering*> Solver::Deviations(
    int player, const Profile& s,
    std::vector<DeviationClustering>* scratch) const {
  std::vector<const DeviationClustering*> result;
  for (const DeviationClustering& d : family_[player]) result.push_back(&d);
  if (!options_.family.anchor_thresholds) return result;
  const PayoffTable& table = *table_;
  int q = Opponent(player);
  std::vector<int> levels;
  for (int own = 0; own < table.size(player); ++own) {
    levels.push_back(table.level(player, MakeProfile(player, own, s[q])));
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  scratch->clear();
  scratch->reserve(levels.size());
  for (int level : levels) {
    LevelClustering form =
        LevelClustering::AtLeast(level, table.num_levels(player));
    bool known = false;
    for (const DeviationClustering* d : result) {
      if (d->levels == form) {
        known = true;
        break;
      }
    }
    if (known) continue;
    scratch->push_back(
        {Clustering::AtLeast(table.levels(player)[level]), std::move(form)});
    result.push_back(&scratch->back());
  }
  return result;
}

ConceptVerdict Solver::Check(Concept kind, const ClusteringProfile& f,
                             const Profile& s) const {
  for (int p = 0; p < 2; ++p) {
    if (s[p] < 0 || s[p] >= table_->size(p)) {
      throw DomainError("profile is not on the grid");
    }
  }
  std::array<LevelClustering, 2> lf = {
      LevelClustering(f[0], table_->levels(0), table_->tol()),
      LevelClustering(f[1], table_->levels(1), table_->tol())};
  return CheckLevels(kind, f, lf, s);
}

ConceptVerdict Solver::CheckLevels(Concept kind, const ClusteringProfile& f,
                                   const std::array<LevelClustering, 2>& lf,
                                   const Profile& s) const {
  const PayoffTable& table = *table_;
  ConceptVerdict verdict;
  verdict.kind = kind;
  verdict.profile = s;
  verdict.quantifier = options_.quantifier;
  verdict.mode = options_.mode;
  verdict.family = options_.family.Describe();
  Certificate& certificate = verdict.certificate;
  certificate.supporting = f;

  auto refute = [&](int player, const Clustering& deviation,
                    const Profile& equilibrium, ImprovementPath path) {
    Refutation r;
    r.kind = Refutation::Kind::kDeviation;
    r.player = player;
    r.deviation = deviation;
    r.equilibrium = equilibrium;
    r.path = std::move(path);
    r.anchor_payoff = table.payoff(player, s);
    r.equilibrium_payoff = table.payoff(player, equilibrium);
    certificate.refutation = std::move(r);
    verdict.holds = false;
    return verdict;
  };

  CoarseGame game(table, lf[0], lf[1]);
  if (!game.IsNe(s)) {
    for (int p = 0; p < 2; ++p) {
      int q = Opponent(p);
      int current = game.Class(p, s);
      for (int own = 0; own < table.size(p); ++own) {
        if (game.Class(p, MakeProfile(p, own, s[q])) > current) {
          Refutation r;
          r.kind = Refutation::Kind::kNotEquilibrium;
          r.player = p;
          r.better_strategy = own;
          r.anchor_payoff = table.payoff(p, s);
          r.equilibrium_payoff = table.payoff(p, MakeProfile(p, own, s[q]));
          certificate.refutation = std::move(r);
          verdict.holds = false;
          return verdict;
        }
      }
    }
  }

  if (kind == Concept::kStrong) {
    // A player who does better at some equilibrium of the unclustered game
    // refutes by dropping the clustering: that equilibrium survives.
    for (const Profile& e : nash_) {
      for (int p = 0; p < 2; ++p) {
        if (table.level(p, e) > table.level(p, s)) {
          certificate.deviations_checked = 1;
          return refute(p, Clustering::None(), e, {});
        }
      }
    }
  }

  std::vector<DeviationClustering> scratch;
  for (int p = 0; p < 2; ++p) {
    int q = Opponent(p);
    int anchor_level = table.level(p, s);
    if (kind == Concept::kStrong) {
      // Keeping the supporting clustering is also a deviation.
      ++certificate.deviations_checked;
      NeSummary summary = Summarize(p, lf[p], lf[q]);
      if (summary.any && summary.max_level > anchor_level) {
        return refute(p, f[p], summary.argmax, {});
      }
    }
    for (const DeviationClustering* dev : Deviations(p, s, &scratch)) {
      ++certificate.deviations_checked;
      bool forall = options_.quantifier == Quantifier::kForall;
      NeSummary summary = Summarize(p, dev->levels, lf[q]);
      if (!summary.any) {
        ++certificate.vacuous_deviations;
        continue;
      }
      if (kind == Concept::kWeak) {
        if (summary.min_level > anchor_level) {
          return refute(p, dev->clustering, summary.argmin, {});
        }
        continue;
      }
      if (kind == Concept::kStrong) {
        if (summary.max_level > anchor_level) {
          return refute(p, dev->clustering, summary.argmax, {});
        }
        continue;
      }
      if (forall && summary.max_level <= anchor_level) continue;
      CoarseGame deviation =
          p == 0 ? CoarseGame(table, dev->levels, lf[q])
                 : CoarseGame(table, lf[q], dev->levels);
      bool found = false;
      ReachableSet reach = ImprovementReachable(
          deviation, s, options_.mode, [&](const Profile& t) {
            if (!deviation.IsNe(t)) return false;
            found = true;
            bool profitable = table.level(p, t) > anchor_level;
            return forall ? profitable : !profitable;
          });
      // No plausible equilibrium although the deviation game has some.
      if (!found) continue;
      if (forall) {
        if (reach.stopped()) {
          return refute(p, dev->clustering, reach.stop_profile(),
                        reach.PathTo(reach.stop_profile()));
        }
        continue;
      }
      if (reach.stopped()) continue;
      // Every plausible equilibrium is profitable; report the least
      // profitable one.
      bool first = true;
      Profile worst = s;
      for (const Profile& t : reach.Profiles()) {
        if (!deviation.IsNe(t)) continue;
        if (first || table.level(p, t) < table.level(p, worst)) worst = t;
        first = false;
      }
      return refute(p, dev->clustering, worst, reach.PathTo(worst));
    }
  }
  verdict.holds = true;
  return verdict;
}

std::vector<ClusteringProfile> Solver::SupportFamily(const Profile& s) const {
  std::array<std::vector<Clustering>, 2> options;
  std::array<std::vector<LevelClustering>, 2> forms;
  for (int p = 0; p < 2; ++p) {
    for (Clustering f : {Clustering::AtLeast(table_->payoff(p, s)),
                         Clustering::All(), Clustering::None()}) {
      LevelClustering form(f, table_->levels(p), table_->tol());
      if (std::find(forms[p].begin(), forms[p].end(), form) !=
          forms[p].end()) {
        continue;
      }
      forms[p].push_back(std::move(form));
      options[p].push_back(std::move(f));
    }
  }
  std::vector<ClusteringProfile> support;
  for (const Clustering& f1 : options[0]) {
    for (const Clustering& f2 : options[1]) support.push_back({f1, f2});
  }
  return support;
}

ConceptVerdict Solver::IsOutcome(Concept kind, const Profile& s) const {
  return IsOutcome(kind, s, SupportFamily(s));
}

ConceptVerdict Solver::IsOutcome(
    Concept kind, const Profile& s,
    const std::vector<ClusteringProfile>& support) const {
  if (support.empty()) throw ValidationError("support family is empty");
  std::optional<ConceptVerdict> first;
  for (const ClusteringProfile& f : support) {
    ConceptVerdict verdict = Check(kind, f, s);
    if (verdict.holds) return verdict;
    if (!first) first = std::move(verdict);
  }
  return *first;
}

ConceptVerdict CheckWeakCue(const PayoffTable& table,
                            const ClusteringProfile& f, const Profile& s,
                            const FamilyOptions& family) {
  return Solver(table, {family}).Check(Concept::kWeak, f, s);
}

ConceptVerdict CheckStrongCue(const PayoffTable& table,
                              const ClusteringProfile& f, const Profile& s,
                              const FamilyOptions& family) {
  return Solver(table, {family}).Check(Concept::kStrong, f, s);
}

ConceptVerdict CheckCue(const PayoffTable& table, const ClusteringProfile& f,
                        const Profile& s, const FamilyOptions& family,
                        Quantifier quantifier, MoveMode mode) {
  return Solver(table, {family, quantifier, mode}).Check(Concept::kCue, f, s);
}

std::string ReplayVerdict(const Solver& solver,
                          const ConceptVerdict& verdict) {
  const SolverOptions& options = solver.options();
  if (verdict.family != options.family.Describe() ||
      verdict.quantifier != options.quantifier ||
      verdict.mode != options.mode) {
    return "verdict was computed with different solver options";
  }
  const PayoffTable& table = solver.table();
  const Profile& s = verdict.profile;
  const ClusteringProfile& f = verdict.certificate.supporting;
  if (verdict.holds) {
    ConceptVerdict again = solver.Check(verdict.kind, f, s);
    return again.holds ? "" : "verdict does not hold on a second run";
  }
  if (!verdict.certificate.refutation) return "refuted verdict has no witness";
  const Refutation& r = *verdict.certificate.refutation;
  int p = r.player;
  if (p != 0 && p != 1) return "refutation names no player";
  if (r.anchor_payoff != table.payoff(p, s)) return "anchor payoff mismatch";
  if (r.kind == Refutation::Kind::kNotEquilibrium) {
    CoarseGame game(table, f);
    Profile better = MakeProfile(p, r.better_strategy, s[Opponent(p)]);
    if (r.better_strategy < 0 || r.better_strategy >= table.size(p)) {
      return "better strategy is off the grid";
    }
    if (game.Class(p, better) <= game.Class(p, s)) {
      return "claimed better strategy is not a clustered improvement";
    }
    return "";
  }
  ClusteringProfile deviated = f;
  deviated[p] = r.deviation;
  CoarseGame game(table, deviated);
  const Profile& e = r.equilibrium;
  if (e[0] < 0 || e[0] >= table.size(0) || e[1] < 0 ||
      e[1] >= table.size(1)) {
    return "witness equilibrium is off the grid";
  }
  if (!game.IsNe(e)) return "witness is not an equilibrium of the deviation";
  if (r.equilibrium_payoff != table.payoff(p, e)) {
    return "witness payoff mismatch";
  }
  int anchor_level = table.level(p, s);
  if (table.level(p, e) <= anchor_level) {
    return "witness does not improve on the anchor payoff";
  }
  if (verdict.kind == Concept::kWeak) {
    for (const Profile& t : EnumerateNe(game)) {
      if (table.level(p, t) <= anchor_level) {
        return "deviation game has an unprofitable equilibrium";
      }
    }
    return "";
  }
  if (verdict.kind == Concept::kStrong) return "";
  if (r.path.steps.empty() || r.path.steps.front() != s ||
      r.path.steps.back() != e) {
    return "path does not run from the anchor to the witness";
  }
  std::string error = ValidatePath(game, r.path);
  if (!error.empty()) return error;
  if (verdict.quantifier == Quantifier::kExists) {
    PlausibleSet plausible = PlausibleEquilibria(game, s, verdict.mode);
    if (plausible.members.empty()) return "no plausible equilibrium";
    for (const Profile& t : plausible.members) {
      if (table.level(p, t) <= anchor_level) {
        return "deviation game has an unprofitable plausible equilibrium";
      }
    }
  }
  return "";
}

std::vector<Profile> Region::Members(Concept kind) const {
  std::vector<Profile> members;
  const auto& layer = flags[static_cast<int>(kind)];
  for (int c = 0; c < static_cast<int>(layer.size()); ++c) {
    if (layer[c]) members.push_back({c / size[1], c % size[1]});
  }
  return members;
}

Region EnumerateOutcomes(const Solver& solver,
                         const std::vector<Concept>& kinds, int workers) {
  const PayoffTable& table = solver.table();
  Region region;
  region.grid = table.grid();
  region.size = {table.size(0), table.size(1)};
  const int cells = table.num_cells();
  for (int p = 0; p < 2; ++p) {
    region.payoff[p].resize(cells);
    for (int c = 0; c < cells; ++c) {
      region.payoff[p][c] = table.payoff(p, table.profile(c));
    }
  }
  region.is_ne.assign(cells, 0);
  for (const Profile& s : solver.nash_equilibria()) {
    region.is_ne[table.cell(s)] = 1;
  }
  for (Concept kind : kinds) {
    region.flags[static_cast<int>(kind)].assign(cells, 0);
  }
  workers = std::max(1, std::min(workers, table.size(0)));
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](int worker) {
    try {
      for (int i = worker; i < table.size(0); i += workers) {
        for (int j = 0; j < table.size(1); ++j) {
          for (Concept kind : kinds) {
            bool holds = solver.IsOutcome(kind, {i, j}).holds;
            region.flags[static_cast<int>(kind)][i * table.size(1) + j] =
                holds ? 1 : 0;
          }
        }
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (std::thread& t : threads) t.join();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return region;
}

FolkReport FolkCheck(const Solver& solver, const Profile& s, double slack) {
  const PayoffTable& table = solver.table();
  FolkReport report;
  report.bounds = ComputeMinimax(table);
  bool strict = true;
  bool weak = true;
  for (int p = 0; p < 2; ++p) {
    double value = table.payoff(p, s);
    double floor = report.bounds.under[p];
    if (!(value > floor + table.tol())) strict = false;
    if (value < floor - slack) weak = false;
  }
  report.rationality = strict ? Rationality::kStrict
                       : weak ? Rationality::kWeak
                              : Rationality::kNot;
  report.weak_outcome = solver.IsOutcome(Concept::kWeak, s);
  bool holds = report.weak_outcome.holds;
  report.consistent = (!strict || holds) &&
                      (!holds || report.rationality != Rationality::kNot);
  return report;
}

}  // namespace cue
