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

// Acceptance suite. Prints one PASS or FAIL line per criterion, followed by
// indented details, and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "cue/catalog.h"
#include "cue/characterization.h"
#include "cue/errors.h"
#include "cue/solver.h"
#include "run_config.h"
#include "support/oracles.h"
#include "support/random_games.h"

namespace cue {
namespace {

// Pinned tolerances.
constexpr double kStep41 = 0.025;
constexpr double kGridSlack = 1e-9;
constexpr double kPayoffSlack = 1e-9;
constexpr double kHotellingJaccard = 0.95;
constexpr double kStackelbergProfileTol = 0.01;
constexpr double kStackelbergValueTol = 1e-3;
constexpr double kConstantSumTol = 1e-6;
constexpr double kSingleWorkerSeconds = 300.0;
constexpr double kEightWorkerSeconds = 60.0;

// Grids.
constexpr int kCournotGrid = 41;
constexpr int kHotellingGrid = 61;
constexpr int kStackelbergGrid = 401;
constexpr int kCheckGrid = 121;
constexpr int kFiniteGrid = 60;
constexpr int kConstantSumGrid = 10;
constexpr int kCommonInterestGrid = 20;
constexpr int kCommonInterestGames = 25;
constexpr int kPropertyGrid = 8;
constexpr int kPropertyGames = 100;
constexpr int kProfilesPerGame = 5;

struct Result {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void Fail(const std::string& line) {
    pass = false;
    details.push_back(line);
  }
  void Note(const std::string& line) { details.push_back(line); }
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string Fixed(double value, int digits = 4) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string Text(const PayoffTable& table, const Profile& s) {
  return "(" + table.grid().Label(0, s[0]) + ", " +
         table.grid().Label(1, s[1]) + ")";
}

Profile At(const PayoffTable& table, double x, double y) {
  return {table.grid().Nearest(0, x), table.grid().Nearest(1, y)};
}

std::string RefutationText(const PayoffTable& table, const ConceptVerdict& v) {
  if (!v.certificate.refutation) return "no refutation";
  const Refutation& r = *v.certificate.refutation;
  return "player " + std::to_string(r.player + 1) + " deviates to " +
         r.deviation.ToString() + ", equilibrium " + Text(table, r.equilibrium) +
         " pays " + FormatNumber(r.equilibrium_payoff) + " > " +
         FormatNumber(r.anchor_payoff);
}

// Collects every verdict the suite produces for the replay criterion.
struct VerdictLog {
  struct Entry {
    const Solver* solver;
    ConceptVerdict verdict;
  };
  std::vector<Entry> entries;
  void Add(const Solver& solver, const ConceptVerdict& verdict) {
    entries.push_back({&solver, verdict});
  }
};

Result CournotRegion(const Solver& solver, VerdictLog* log) {
  Result result;
  const PayoffTable& table = solver.table();
  auto start = std::chrono::steady_clock::now();
  Region region = EnumerateOutcomes(solver, {Concept::kCue}, 1);
  double single = Seconds(start);
  start = std::chrono::steady_clock::now();
  Solver fresh(table);
  Region eight = EnumerateOutcomes(fresh, {Concept::kCue}, 8);
  double parallel = Seconds(start);

  std::vector<Profile> members = region.Members(Concept::kCue);
  auto expected = testing::CournotExpectedPoints();
  int outside = 0;
  for (const Profile& s : members) {
    double d = testing::DistanceToCournotSet(
        expected, table.grid().value(0, s[0]), table.grid().value(1, s[1]));
    if (d > kStep41 + kGridSlack) {
      ++outside;
      result.Fail("cell " + Text(table, s) + " is " + Fixed(d) +
                  " from the expected set");
    }
  }
  int uncovered = 0;
  for (const auto& e : expected) {
    double best = 1e300;
    for (const Profile& s : members) {
      best = std::min(best, std::max(std::fabs(table.grid().value(0, s[0]) - e[0]),
                                     std::fabs(table.grid().value(1, s[1]) - e[1])));
    }
    if (best > kStep41 + kGridSlack) {
      if (uncovered++ < 5) {
        result.Fail("expected point (" + Fixed(e[0]) + ", " + Fixed(e[1]) +
                    ") has no CUE cell within one step");
      }
    }
  }
  if (region.flags != eight.flags) result.Fail("8-worker region differs");
  if (single > kSingleWorkerSeconds) result.Fail("single worker too slow");
  if (parallel > kEightWorkerSeconds) result.Fail("8 workers too slow");
  std::string cells;
  for (const Profile& s : members) cells += " " + Text(table, s);
  result.Note("cells:" + cells);
  result.summary = std::to_string(members.size()) + " CUE cells, " +
                   std::to_string(outside) + " outside, " +
                   std::to_string(uncovered) + " expected points uncovered, " +
                   Fixed(single, 2) + "s (1 worker), " + Fixed(parallel, 2) +
                   "s (8 workers)";
  // Every cell's verdict goes to the replay log.
  for (int cell = 0; cell < table.num_cells(); ++cell) {
    log->Add(solver, solver.IsOutcome(Concept::kCue, table.profile(cell)));
  }
  return result;
}

Result HotellingRegion(const Solver& solver, Region* out) {
  Result result;
  const PayoffTable& table = solver.table();
  auto start = std::chrono::steady_clock::now();
  Region region = EnumerateOutcomes(solver, {Concept::kCue}, 1);
  double seconds = Seconds(start);
  std::vector<char> analytic(table.num_cells());
  for (int cell = 0; cell < table.num_cells(); ++cell) {
    analytic[cell] = testing::HotellingAnalytic(table, table.profile(cell));
  }
  const auto& layer = region.flags[static_cast<int>(Concept::kCue)];
  double jaccard = testing::JaccardOf(layer, analytic);
  if (jaccard < kHotellingJaccard) {
    result.Fail("jaccard " + Fixed(jaccard) + " below " +
                Fixed(kHotellingJaccard, 2));
  }
  double step = table.grid().step(0);
  std::array<double, 2> worst_ne = {1e300, 1e300};
  for (const Profile& e : solver.nash_equilibria()) {
    for (int p = 0; p < 2; ++p) {
      double d = std::fabs(table.grid().value(p, e[p]) - 1.0);
      if (d > step + kGridSlack) {
        result.Fail("equilibrium " + Text(table, e) + " is not within one step "
                    "of (1, 1)");
      }
      worst_ne[p] = std::min(worst_ne[p], table.payoff(p, e));
    }
  }
  int below = 0;
  for (const Profile& s : region.Members(Concept::kCue)) {
    for (int p = 0; p < 2; ++p) {
      if (table.payoff(p, s) < worst_ne[p] - kPayoffSlack) {
        ++below;
        result.Fail("cell " + Text(table, s) + " pays player " +
                    std::to_string(p + 1) + " below the equilibrium payoff");
      }
    }
  }
  std::string ne;
  for (const Profile& e : solver.nash_equilibria()) ne += " " + Text(table, e);
  result.Note("grid equilibria:" + ne + "; NE payoff floor " +
              FormatNumber(worst_ne[0]) + ", " + FormatNumber(worst_ne[1]));
  int solver_only = 0;
  int analytic_only = 0;
  for (int cell = 0; cell < table.num_cells(); ++cell) {
    solver_only += layer[cell] && !analytic[cell];
    analytic_only += analytic[cell] && !layer[cell];
  }
  result.Note("solver-only cells " + std::to_string(solver_only) +
              ", analytic-only cells " + std::to_string(analytic_only));
  result.summary = "jaccard " + Fixed(jaccard) + " (>= " +
                   Fixed(kHotellingJaccard, 2) + "), " +
                   std::to_string(solver.nash_equilibria().size()) +
                   " grid NE, " + std::to_string(below) +
                   " cells below NE payoffs, " + Fixed(seconds, 2) + "s";
  *out = std::move(region);
  return result;
}

Result StackelbergCriterion(VerdictLog* log, std::deque<Solver>* keep) {
  Result result;
  static const PayoffTable table =
      PayoffTable::Make(Catalog("cournot"), kStackelbergGrid);
  StackelbergResult leader = Stackelberg(table, 0);
  double x = table.grid().value(0, leader.profile[0]);
  double y = table.grid().value(1, leader.profile[1]);
  if (std::fabs(x - 0.5) > kStackelbergProfileTol ||
      std::fabs(y - 0.25) > kStackelbergProfileTol) {
    result.Fail("profile " + Text(table, leader.profile) +
                " is not within 0.01 of (0.5, 0.25)");
  }
  if (std::fabs(leader.leader_value - 0.125) > kStackelbergValueTol) {
    result.Fail("value " + FormatNumber(leader.leader_value) +
                " is not within 1e-3 of 0.125");
  }
  keep->emplace_back(table);
  const Solver& solver = keep->back();
  ConceptVerdict verdict = StackelbergIsCue(solver, 0);
  log->Add(solver, verdict);
  if (!verdict.holds) {
    result.Fail("stackelberg_is_cue fails: " + RefutationText(table, verdict));
  }
  result.summary = "grid " + std::to_string(kStackelbergGrid) + ": " +
                   Text(table, leader.profile) + " value " +
                   FormatNumber(leader.leader_value) + ", stackelberg_is_cue " +
                   (verdict.holds ? "holds" : "fails");
  return result;
}

Result StrongInstances(VerdictLog* log, std::deque<Solver>* keep) {
  Result result;
  std::vector<std::string> parts;

  static const PayoffTable cournot =
      PayoffTable::Make(Catalog("cournot"), kCheckGrid);
  keep->emplace_back(cournot);
  const Solver& c = keep->back();
  Profile quarter = At(cournot, 0.25, 0.25);
  for (int p = 0; p < 2; ++p) {
    if (std::fabs(cournot.payoff(p, quarter) - 0.125) > kPayoffSlack) {
      result.Fail("payoff at (0.25, 0.25) is not 0.125");
    }
  }
  try {
    ConceptVerdict v = Prop5StrongSupport(c, quarter);
    log->Add(c, v);
    if (!v.holds) result.Fail("cournot (0.25, 0.25): " + RefutationText(cournot, v));
    parts.push_back(std::string("cournot (0.25,0.25) ") +
                    (v.holds ? "holds" : "fails"));
  } catch (const ApplicabilityError& e) {
    result.Fail("cournot (0.25, 0.25): prop5_strong_support not applicable: " +
                std::string(e.what()));
    parts.push_back("cournot (0.25,0.25) not applicable");
  }
  ClusteringProfile eighth = {Clustering::AtLeast(0.125),
                              Clustering::AtLeast(0.125)};
  ConceptVerdict direct = c.Check(Concept::kStrong, eighth, quarter);
  log->Add(c, direct);
  result.Note("direct strong check under (>=0.125, >=0.125): " +
              std::string(direct.holds ? "holds" : "fails") +
              (direct.holds ? "" : "; " + RefutationText(cournot, direct)));
  if (!direct.holds) {
    const Refutation& r = *direct.certificate.refutation;
    std::vector<int> br =
        BestReply(cournot, 1 - r.player, r.equilibrium[r.player]);
    std::string replies;
    for (int b : br) replies += " " + cournot.grid().Label(1 - r.player, b);
    result.Note("best replies of player " + std::to_string(2 - r.player) +
                " at the refuting equilibrium:" + replies);
  }

  static const PayoffTable zero =
      PayoffTable::Make(Catalog("zero_sum_3x3"), kFiniteGrid);
  keep->emplace_back(zero);
  const Solver& z = keep->back();
  Profile bb = {zero.grid().Resolve(0, "b"), zero.grid().Resolve(1, "b")};
  ClusteringProfile nonneg = {Clustering::AtLeast(0), Clustering::AtLeast(0)};
  ConceptVerdict zv = z.Check(Concept::kStrong, nonneg, bb);
  log->Add(z, zv);
  if (!zv.holds) result.Fail("zero_sum (b, b): " + RefutationText(zero, zv));
  parts.push_back(std::string("zero_sum (b,b) ") + (zv.holds ? "holds" : "fails"));

  static const PayoffTable bos =
      PayoffTable::Make(Catalog("battle_of_sexes"), kFiniteGrid);
  keep->emplace_back(bos);
  const Solver& b = keep->back();
  int survivors = 0;
  int strong = 0;
  for (int cell = 0; cell < bos.num_cells(); ++cell) {
    Profile s = bos.profile(cell);
    bool dominates = true;
    for (const Profile& e : b.nash_equilibria()) {
      for (int p = 0; p < 2; ++p) {
        if (bos.payoff(p, s) < bos.payoff(p, e) - kPayoffSlack) dominates = false;
      }
    }
    if (!dominates) continue;
    ++survivors;
    ConceptVerdict v = b.IsOutcome(Concept::kStrong, s);
    log->Add(b, v);
    if (v.holds) {
      ++strong;
      result.Fail("battle_of_sexes " + Text(bos, s) + " is a strong CUE outcome");
    }
  }
  parts.push_back("battle_of_sexes " + std::to_string(survivors) +
                  " dominance survivors, " + std::to_string(strong) + " strong");
  for (const std::string& part : parts) {
    result.summary += (result.summary.empty() ? "" : "; ") + part;
  }
  return result;
}

Result ConstantSum(VerdictLog* log, std::deque<Solver>* keep) {
  Result result;
  static const PayoffTable table =
      PayoffTable::Make(Catalog("zero_sum_3x3"), kConstantSumGrid);
  keep->emplace_back(table);
  const Solver& solver = keep->back();
  int outcomes = 0;
  for (int cell = 0; cell < table.num_cells(); ++cell) {
    Profile s = table.profile(cell);
    ConceptVerdict v = solver.IsOutcome(Concept::kWeak, s);
    log->Add(solver, v);
    if (!v.holds) continue;
    ++outcomes;
    for (int p = 0; p < 2; ++p) {
      if (std::fabs(table.payoff(p, s)) > kConstantSumTol) {
        result.Fail("weak CUE outcome " + Text(table, s) + " pays player " +
                    std::to_string(p + 1) + " " +
                    FormatNumber(table.payoff(p, s)));
      }
    }
  }
  result.summary = "mixed grid m=" + std::to_string(kConstantSumGrid) + ", " +
                   std::to_string(table.num_cells()) + " profiles, " +
                   std::to_string(outcomes) + " weak CUE outcomes";
  return result;
}

Result CommonInterest() {
  Result result;
  std::mt19937 rng(8);
  int equal_cue = 0;
  int equal_strong = 0;
  auto start = std::chrono::steady_clock::now();
  for (int g = 0; g < kCommonInterestGames; ++g) {
    Game game = testing::RandomCommonInterestGame(rng, 3);
    PayoffTable table = PayoffTable::Make(game, kCommonInterestGrid);
    Solver solver(table);
    Region region =
        EnumerateOutcomes(solver, {Concept::kCue, Concept::kStrong}, 1);
    std::vector<char> ne(table.num_cells(), 0);
    for (const Profile& e : solver.nash_equilibria()) ne[table.cell(e)] = 1;
    double top = -1e300;
    for (int cell = 0; cell < table.num_cells(); ++cell) {
      top = std::max(top, table.payoff(0, table.profile(cell)));
    }
    std::vector<char> dominant(table.num_cells(), 0);
    for (int cell = 0; cell < table.num_cells(); ++cell) {
      dominant[cell] = ne[cell] &&
                       table.payoff(0, table.profile(cell)) >= top - kPayoffSlack;
    }
    bool cue_ok = region.flags[static_cast<int>(Concept::kCue)] == ne;
    bool strong_ok = region.flags[static_cast<int>(Concept::kStrong)] == dominant;
    equal_cue += cue_ok;
    equal_strong += strong_ok;
    if (!cue_ok) result.Fail("game " + std::to_string(g) + ": CUE set != NE set");
    if (!strong_ok) {
      result.Fail("game " + std::to_string(g) +
                  ": strong set != Pareto-dominant NE set");
    }
  }
  result.summary = std::to_string(equal_cue) + "/" +
                   std::to_string(kCommonInterestGames) + " CUE = NE, " +
                   std::to_string(equal_strong) + "/" +
                   std::to_string(kCommonInterestGames) +
                   " strong = Pareto-dominant NE (m=" +
                   std::to_string(kCommonInterestGrid) + ", " +
                   Fixed(Seconds(start), 1) + "s)";
  return result;
}

Result PropertySuites(VerdictLog* log, std::deque<Solver>* keep,
                      std::deque<PayoffTable>* tables) {
  Result result;
  std::mt19937 rng(9);
  int ne_checks = 0;
  int ne_failures = 0;
  int robust_checks = 0;
  int robust_failures = 0;
  int strict = 0;
  int strict_failures = 0;
  int weak_outcomes = 0;
  int weak_failures = 0;
  auto start = std::chrono::steady_clock::now();
  for (int g = 0; g < kPropertyGames; ++g) {
    Game game = testing::RandomFiniteGame(rng, 3, 3);
    tables->push_back(PayoffTable::Make(game, kPropertyGrid));
    const PayoffTable& table = tables->back();
    keep->emplace_back(table);
    const Solver& solver = keep->back();
    const std::vector<Profile>& ne = solver.nash_equilibria();
    for (int k = 0; k < kProfilesPerGame; ++k) {
      ClusteringProfile f = testing::RandomProfile(rng, table);
      CoarseGame coarse(table, f);
      for (const Profile& s : ne) {
        ++ne_checks;
        if (!coarse.IsNe(s)) {
          ++ne_failures;
          result.Fail("game " + std::to_string(g) + ": NE " + Text(table, s) +
                      " not an equilibrium under " + f[0].ToString() + " | " +
                      f[1].ToString());
        }
        ++robust_checks;
        ConceptVerdict v = solver.Check(Concept::kCue, f, s);
        log->Add(solver, v);
        if (!v.holds) {
          ++robust_failures;
          result.Fail("game " + std::to_string(g) + ": NE " + Text(table, s) +
                      " fails CUE: " + RefutationText(table, v));
        }
      }
    }
    // One grid step moves probability 1/m between two actions.
    double lo = 1e300;
    double hi = -1e300;
    for (int cell = 0; cell < table.num_cells(); ++cell) {
      for (int p = 0; p < 2; ++p) {
        lo = std::min(lo, table.payoff(p, table.profile(cell)));
        hi = std::max(hi, table.payoff(p, table.profile(cell)));
      }
    }
    double slack = (hi - lo) / kPropertyGrid;
    for (int cell = 0; cell < table.num_cells(); ++cell) {
      Profile s = table.profile(cell);
      FolkReport report = FolkCheck(solver, s, slack);
      log->Add(solver, report.weak_outcome);
      if (report.rationality == Rationality::kStrict) {
        ++strict;
        if (!report.weak_outcome.holds) {
          ++strict_failures;
          result.Fail("game " + std::to_string(g) + ": strictly rational " +
                      Text(table, s) + " is not a weak CUE outcome");
        }
      }
      if (report.weak_outcome.holds) {
        ++weak_outcomes;
        if (report.rationality == Rationality::kNot) {
          ++weak_failures;
          result.Fail("game " + std::to_string(g) + ": weak CUE outcome " +
                      Text(table, s) + " is not weakly rational");
        }
      }
    }
  }
  result.summary =
      "NE kept " + std::to_string(ne_checks - ne_failures) + "/" +
      std::to_string(ne_checks) + ", NE pass CUE " +
      std::to_string(robust_checks - robust_failures) + "/" +
      std::to_string(robust_checks) + ", strictly rational -> weak outcome " +
      std::to_string(strict - strict_failures) + "/" + std::to_string(strict) +
      ", weak outcome -> weakly rational " +
      std::to_string(weak_outcomes - weak_failures) + "/" +
      std::to_string(weak_outcomes) + " (m=" + std::to_string(kPropertyGrid) +
      ", " + Fixed(Seconds(start), 1) + "s)";
  return result;
}

Result TheoremConsistency(const PayoffTable& cournot, const Solver& csolver,
                          const PayoffTable& hotelling,
                          const Region& hotelling_region) {
  Result result;
  StructureReport cs = DetectStructure(cournot.game(), cournot.grid());
  Region cregion = EnumerateOutcomes(csolver, {Concept::kCue}, 1);
  int thm1 = 0;
  int thm1_pass = 0;
  int thm3 = 0;
  int thm3_pass = 0;
  for (const Profile& s : cregion.Members(Concept::kCue)) {
    if (!IsInterior(cournot, s)) continue;
    bool b0 = IsBestReplying(cournot, 0, s);
    bool b1 = IsBestReplying(cournot, 1, s);
    if (!b0 && !b1) {
      ++thm1;
      Thm1Report r = Thm1Check(cournot, cs, s);
      if (r.holds()) {
        ++thm1_pass;
        continue;
      }
      std::string why;
      for (int p = 0; p < 2; ++p) {
        if (!r.cond1[p]) why += " cond1[" + std::to_string(p + 1) + "]";
        if (!r.cond2[p]) {
          why += " cond2[" + std::to_string(p + 1) + "]";
          if (r.cond2_witness[p]) {
            why += " witness " + Text(cournot, *r.cond2_witness[p]);
          }
        }
      }
      result.Fail("cournot " + Text(cournot, s) + " fails thm1:" + why);
    } else if (b0 != b1) {
      int i = b0 ? 1 : 0;
      double si = cournot.grid().value(i, s[i]);
      if (si < 1.0 / 3 - kStep41 - kGridSlack || si > 0.5 + kStep41 + kGridSlack) {
        continue;
      }
      ++thm3;
      Thm3Report r = Thm3Check(cournot, cs, s);
      if (r.part1) {
        ++thm3_pass;
      } else {
        result.Fail("cournot " + Text(cournot, s) + " fails thm3 part 1");
      }
    }
  }

  StructureReport hs = DetectStructure(hotelling.game(), hotelling.grid());
  Region thm2 = Thm2Region(hotelling, hs, /*interior_only=*/false);
  int thm2_total = 0;
  int thm2_pass = 0;
  for (const Profile& s : hotelling_region.Members(Concept::kCue)) {
    ++thm2_total;
    if (thm2.label(Concept::kCue, s)) {
      ++thm2_pass;
    } else {
      result.Fail("hotelling " + Text(hotelling, s) + " outside the thm2 region");
    }
  }
  result.summary = "cournot thm1 " + std::to_string(thm1_pass) + "/" +
                   std::to_string(thm1) + ", cournot thm3 part 1 " +
                   std::to_string(thm3_pass) + "/" + std::to_string(thm3) +
                   ", hotelling thm2 " + std::to_string(thm2_pass) + "/" +
                   std::to_string(thm2_total);
  return result;
}

Result Replay(const VerdictLog& log) {
  Result result;
  int refutations = 0;
  int refutations_ok = 0;
  int supports = 0;
  int supports_ok = 0;
  for (const auto& entry : log.entries) {
    std::string problem = ReplayVerdict(*entry.solver, entry.verdict);
    bool ok = problem.empty();
    if (entry.verdict.holds) {
      ++supports;
      supports_ok += ok;
    } else {
      ++refutations;
      refutations_ok += ok;
    }
    if (!ok && result.details.size() < 10) result.Fail(problem);
    if (!ok) result.pass = false;
  }
  result.summary = "refutations " + std::to_string(refutations_ok) + "/" +
                   std::to_string(refutations) + ", supporting verdicts " +
                   std::to_string(supports_ok) + "/" + std::to_string(supports);
  return result;
}

Result Determinism() {
  Result result;
  struct Run {
    std::string command;
    std::string game;
    int grid;
    std::vector<Concept> concepts;
    std::string profile;
  };
  std::vector<Run> runs = {
      {"enumerate", "cournot", 41,
       {Concept::kWeak, Concept::kCue, Concept::kStrong}, ""},
      {"enumerate", "hotelling", 61, {Concept::kCue}, ""},
      {"enumerate", "battle_of_sexes", 20,
       {Concept::kWeak, Concept::kCue, Concept::kStrong}, ""},
      {"check", "cournot", 121, {Concept::kCue}, "0.2,0.2"},
      {"characterize", "cournot", 41, {Concept::kCue}, ""},
      {"bounds", "zero_sum_3x3", 60, {Concept::kCue}, ""},
  };
  int identical = 0;
  for (const Run& run : runs) {
    std::string bytes[2];
    for (int k = 0; k < 2; ++k) {
      cli::RunConfig config;
      config.command = run.command;
      config.game = run.game;
      config.grid = run.grid;
      config.concepts = run.concepts;
      config.profile = run.profile;
      config.workers = k == 0 ? 1 : 4;
      std::string base = std::string(CUE_ACCEPTANCE_TMP_DIR) + "/det_" +
                         run.game + "_" + std::to_string(k);
      if (run.command == "enumerate") {
        config.csv_path = base + ".csv";
        config.svg_path = base + ".svg";
      }
      std::ostringstream out;
      std::ostringstream err;
      cli::Run(config, out, err);
      bytes[k] = out.str() + err.str();
      if (run.command == "enumerate") {
        for (const std::string& path : {config.csv_path, config.svg_path}) {
          std::FILE* file = std::fopen(path.c_str(), "rb");
          if (!file) {
            result.Fail("missing output " + path);
            continue;
          }
          char buffer[4096];
          size_t n;
          while ((n = std::fread(buffer, 1, sizeof(buffer), file)) > 0) {
            bytes[k].append(buffer, n);
          }
          std::fclose(file);
        }
      }
    }
    if (bytes[0] == bytes[1]) {
      ++identical;
    } else {
      result.Fail(run.command + " " + run.game + " differs between 1 and 4 "
                  "workers");
    }
  }
  result.summary = std::to_string(identical) + "/" +
                   std::to_string(runs.size()) +
                   " commands byte-identical across 1 and 4 workers";
  return result;
}

void Print(int index, const std::string& name, const Result& result) {
  std::cout << (result.pass ? "PASS" : "FAIL") << " " << index << " " << name
            << ": " << result.summary << "\n";
  for (const std::string& line : result.details) {
    std::cout << "    " << line << "\n";
  }
  std::cout.flush();
}

// With arguments, only the listed criteria run; 8 needs 1 and 2, and 9
// replays the verdicts of whichever criteria ran.
int Main(const std::vector<int>& only) {
  auto wanted = [&](int index) {
    return only.empty() ||
           std::find(only.begin(), only.end(), index) != only.end();
  };
  VerdictLog log;
  std::deque<Solver> keep;
  std::deque<PayoffTable> tables;
  int failures = 0;
  auto report = [&](int index, const std::string& name,
                    const std::function<Result()>& run) {
    if (!wanted(index)) return;
    Result r = run();
    Print(index, name, r);
    failures += !r.pass;
  };

  PayoffTable cournot = PayoffTable::Make(Catalog("cournot"), kCournotGrid);
  Solver csolver(cournot);
  if (wanted(1) || wanted(8)) {
    report(1, "cournot region", [&] { return CournotRegion(csolver, &log); });
  }

  PayoffTable hotelling =
      PayoffTable::Make(Catalog("hotelling"), kHotellingGrid);
  Solver hsolver(hotelling);
  Region hregion;
  if (wanted(2) || wanted(8)) {
    Result r = HotellingRegion(hsolver, &hregion);
    report(2, "hotelling region", [&] { return r; });
  }

  report(3, "stackelberg", [&] { return StackelbergCriterion(&log, &keep); });
  report(4, "strong CUE instances",
         [&] { return StrongInstances(&log, &keep); });
  report(5, "constant-sum", [&] { return ConstantSum(&log, &keep); });
  report(6, "common interest", [&] { return CommonInterest(); });
  report(7, "property suites",
         [&] { return PropertySuites(&log, &keep, &tables); });
  report(8, "theorem consistency", [&] {
    return TheoremConsistency(cournot, csolver, hotelling, hregion);
  });
  report(9, "certificate replay", [&] { return Replay(log); });
  report(10, "determinism", [&] { return Determinism(); });
  std::cout << (failures == 0 ? "all criteria pass"
                              : std::to_string(failures) + " criteria fail")
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace cue

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int k = 1; k < argc; ++k) only.push_back(std::atoi(argv[k]));
  return cue::Main(only);
}
