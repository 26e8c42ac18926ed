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

#include "commands.h"

#include <fstream>
#include <string>
#include <vector>

#include "cue/catalog.h"
#include "cue/characterization.h"
#include "cue/errors.h"
#include "cue/expression.h"
#include "cue/payoff_table.h"
#include "emit.h"

namespace cue::cli {
namespace {

std::string ProfileText(const PayoffTable& table, const Profile& s) {
  return "(" + table.grid().Label(0, s[0]) + ", " +
         table.grid().Label(1, s[1]) + ")";
}

std::string PathText(const PayoffTable& table, const ImprovementPath& path) {
  std::string text = ProfileText(table, path.steps.front());
  for (size_t k = 0; k < path.movers.size(); ++k) {
    int mover = path.movers[k];
    text += " -> " + ProfileText(table, path.steps[k + 1]) + " [" +
            (mover == kBothMove ? std::string("both")
                                : "player " + std::to_string(mover + 1)) +
            "]";
  }
  return text;
}

Profile ParseProfile(const PayoffTable& table, const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw ValidationError("profile '" + text + "' is not of the form x,y");
  }
  return {table.grid().Resolve(0, text.substr(0, comma)),
          table.grid().Resolve(1, text.substr(comma + 1))};
}

void PrintVerdict(const PayoffTable& table, const ConceptVerdict& verdict,
                  bool outcome_search, std::ostream& out) {
  const Profile& s = verdict.profile;
  const Certificate& cert = verdict.certificate;
  out << "concept: " << ToString(verdict.kind);
  if (verdict.kind == Concept::kCue) {
    out << " (quantifier " << ToString(verdict.quantifier) << ", mode "
        << ToString(verdict.mode) << ")";
  }
  out << "\nprofile: " << ProfileText(table, s) << " payoffs "
      << FormatNumber(table.payoff(0, s)) << ", "
      << FormatNumber(table.payoff(1, s)) << "\n";
  out << (outcome_search ? "supporting clusterings: " : "clusterings: ")
      << cert.supporting[0].ToString() << " | "
      << cert.supporting[1].ToString() << "\n";
  out << "deviation family: " << verdict.family << "\n";
  out << "deviations checked: " << cert.deviations_checked
      << ", vacuous: " << cert.vacuous_deviations << "\n";
  out << "verdict: " << (verdict.holds ? "holds" : "fails") << "\n";
  if (!cert.refutation) return;
  const Refutation& r = *cert.refutation;
  std::string who = "player " + std::to_string(r.player + 1);
  if (r.kind == Refutation::Kind::kNotEquilibrium) {
    out << "refutation: not a clustered equilibrium; " << who
        << " moves to " << table.grid().Label(r.player, r.better_strategy)
        << " for a higher class (payoff " << FormatNumber(r.equilibrium_payoff)
        << " vs " << FormatNumber(r.anchor_payoff) << ")\n";
    return;
  }
  out << "refutation: " << who << " deviates to " << r.deviation.ToString()
      << "; equilibrium " << ProfileText(table, r.equilibrium) << " pays "
      << FormatNumber(r.equilibrium_payoff) << " > "
      << FormatNumber(r.anchor_payoff) << "\n";
  if (!r.path.steps.empty()) {
    out << "path: " << PathText(table, r.path) << "\n";
  }
}

void WriteFile(const std::string& path, const std::string& what,
               const std::function<void(std::ostream&)>& write) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + what + " to '" + path + "'");
  write(file);
  file.close();
  if (!file) throw Error("cannot write " + what + " to '" + path + "'");
}

void PrintMembers(const PayoffTable& table, const std::string& name,
                  const std::vector<Profile>& members, std::ostream& out) {
  out << name << ": " << members.size() << " profile"
      << (members.size() == 1 ? "" : "s") << "\n";
  for (const Profile& s : members) out << "  " << ProfileText(table, s) << "\n";
}

}  // namespace

int RunCheck(const RunConfig& config, std::ostream& out) {
  Game game = ResolveGame(config.game, config.params);
  PayoffTable table = PayoffTable::Make(game, config.Resolution(game));
  Profile s = ParseProfile(table, config.profile);
  if (config.clustering[0].has_value() != config.clustering[1].has_value()) {
    throw ValidationError("give both clusterings or neither");
  }
  Solver solver(table, config.Solver());
  out << config.Header(game);
  bool search = !config.clustering[0].has_value();
  ConceptVerdict verdict;
  if (search) {
    verdict = solver.IsOutcome(config.concept_kind, s);
  } else {
    ClusteringProfile f = {ParseClustering(*config.clustering[0]),
                           ParseClustering(*config.clustering[1])};
    verdict = solver.Check(config.concept_kind, f, s);
  }
  PrintVerdict(table, verdict, search, out);
  return verdict.holds ? kExitHolds : kExitFails;
}

int RunEnumerate(const RunConfig& config, std::ostream& out) {
  Game game = ResolveGame(config.game, config.params);
  PayoffTable table = PayoffTable::Make(game, config.Resolution(game));
  Solver solver(table, config.Solver());
  Region region = EnumerateOutcomes(solver, config.concepts, config.workers);
  if (!config.csv_path.empty()) {
    WriteFile(config.csv_path, "CSV", [&](std::ostream& file) {
      WriteRegionCsv(region, config.ne_layer, config.concepts, file);
    });
  }
  if (!config.svg_path.empty()) {
    std::string title = game.name() + ", grid " +
                        std::to_string(table.grid().resolution());
    WriteFile(config.svg_path, "SVG", [&](std::ostream& file) {
      WriteRegionSvg(region, config.ne_layer, config.concepts, title, file);
    });
  }
  out << config.Header(game);
  out << "profiles: " << table.num_cells() << "\n";
  if (config.ne_layer) {
    PrintMembers(table, "ne", solver.nash_equilibria(), out);
  }
  for (Concept kind : config.concepts) {
    PrintMembers(table, ToString(kind), region.Members(kind), out);
  }
  return kExitHolds;
}

int RunCharacterize(const RunConfig& config, std::ostream& out) {
  Game game = ResolveGame(config.game, config.params);
  PayoffTable table = PayoffTable::Make(game, config.Resolution(game));
  Solver solver(table, config.Solver());
  out << config.Header(game);
  PrintMembers(table, "ne", solver.nash_equilibria(), out);
  if (game.is_finite()) {
    out << "structure: unsupported for finite games; the interval-game "
           "checkers do not apply\n";
    return kExitHolds;
  }
  StructureReport structure = DetectStructure(game, table.grid());
  out << "structure: externalities " << ToString(structure.externalities)
      << ", strategic " << ToString(structure.strategic)
      << ", concave in own strategy " << (structure.concavity_ok[0] ? "yes" : "no")
      << "/" << (structure.concavity_ok[1] ? "yes" : "no") << "\n";
  for (int leader = 0; leader < 2; ++leader) {
    StackelbergResult best = Stackelberg(table, leader);
    StackelbergResult safe = Stackelberg(table, leader, /*pessimistic=*/true);
    out << "stackelberg leader " << leader + 1 << ": "
        << ProfileText(table, best.profile) << " value "
        << FormatNumber(best.leader_value) << " (adverse ties: "
        << ProfileText(table, safe.profile) << " value "
        << FormatNumber(safe.leader_value) << ")\n";
  }
  try {
    Profile worst = WorstNe(table, structure);
    out << "worst ne: " << ProfileText(table, worst) << "\n";
  } catch (const ApplicabilityError& e) {
    out << "worst ne: not applicable (" << e.what() << ")\n";
  }

  Region brute = EnumerateOutcomes(solver, {Concept::kCue}, config.workers);
  std::vector<Profile> members = brute.Members(Concept::kCue);
  PrintMembers(table, "cue", members, out);

  try {
    Region thm2 = Thm2Region(table, structure, /*interior_only=*/false);
    const auto& a = thm2.flags[static_cast<int>(Concept::kCue)];
    const auto& b = brute.flags[static_cast<int>(Concept::kCue)];
    out << "thm2 region: " << thm2.Members(Concept::kCue).size()
        << " profiles, jaccard with cue " << FormatNumber(Jaccard(a, b))
        << "\n";
  } catch (const ApplicabilityError& e) {
    out << "thm2 region: not applicable (" << e.what() << ")\n";
  }

  int thm1_total = 0;
  int thm1_pass = 0;
  int thm3_total = 0;
  int thm3_pass = 0;
  std::vector<std::string> failures;
  for (const Profile& s : members) {
    if (!IsInterior(table, s)) continue;
    bool b0 = IsBestReplying(table, 0, s);
    bool b1 = IsBestReplying(table, 1, s);
    try {
      if (!b0 && !b1) {
        Thm1Report report = Thm1Check(table, structure, s);
        ++thm1_total;
        if (report.holds()) {
          ++thm1_pass;
        } else {
          failures.push_back("thm1 fails at " + ProfileText(table, s));
        }
      } else if (b0 != b1 && structure.strategic == Strategic::kSubstitutes) {
        Thm3Report report = Thm3Check(table, structure, s);
        ++thm3_total;
        if (report.part1) {
          ++thm3_pass;
        } else {
          failures.push_back("thm3 part 1 fails at " + ProfileText(table, s));
        }
      }
    } catch (const ApplicabilityError&) {
      // Reported through the totals: the profile is simply not counted.
    }
  }
  out << "thm1 on interior cue outcomes without best replies: " << thm1_pass
      << "/" << thm1_total << " pass\n";
  out << "thm3 part 1 on interior cue outcomes with one best reply: "
      << thm3_pass << "/" << thm3_total << " pass\n";
  for (const std::string& line : failures) out << "  " << line << "\n";
  return kExitHolds;
}

int RunBounds(const RunConfig& config, std::ostream& out) {
  Game game = ResolveGame(config.game, config.params);
  PayoffTable table = PayoffTable::Make(game, config.Resolution(game));
  MinimaxValues values = ComputeMinimax(table);
  out << config.Header(game);
  for (int p = 0; p < 2; ++p) {
    out << "player " << p + 1 << ": M_under " << FormatNumber(values.under[p])
        << ", M_over " << FormatNumber(values.over[p]) << "\n";
  }
  std::optional<double> sum = ConstantSum(table);
  if (sum) {
    out << "constant-sum: yes, pi1 + pi2 = " << FormatNumber(*sum) << "\n";
  } else {
    out << "constant-sum: no\n";
  }
  return kExitHolds;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "check") return RunCheck(config, out);
    if (config.command == "enumerate") return RunEnumerate(config, out);
    if (config.command == "characterize") return RunCharacterize(config, out);
    if (config.command == "bounds") return RunBounds(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return kExitError;
  } catch (const ApplicabilityError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace cue::cli
