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

#include <algorithm>
#include <cmath>
#include <vector>

#include "cue/catalog.h"
#include "cue/characterization.h"
#include "cue/errors.h"
#include "doctest.h"
#include "support/oracles.h"

namespace cue {
namespace {

Profile At(const PayoffTable& table, double x, double y) {
  return {table.grid().Nearest(0, x), table.grid().Nearest(1, y)};
}

bool Contains(const std::vector<int>& set, int x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

StructureReport Structure(const PayoffTable& table) {
  return DetectStructure(table.game(), table.grid());
}

// Single complements game whose grid best reply is always 0.4.
Game AnchoredGame() {
  return ParseGame(
      "type interval\n"
      "bounds 0 1 ; 0 1\n"
      "payoff1 -(s1 - 0.4)^2 + 0.01*s1*s2\n"
      "payoff2 -(s2 - 0.4)^2 + 0.01*s1*s2\n");
}

TEST_CASE("interiority and best replies") {
  PayoffTable table = PayoffTable::Make(Catalog("cournot"), 41);
  CHECK(IsInterior(table, At(table, 0.3, 0.3)));
  CHECK(!IsInterior(table, At(table, 0, 0.3)));
  CHECK(!IsInterior(table, At(table, 0.3, 1)));
  CHECK(IsBestReplying(table, 1, At(table, 0.5, 0.25)));
  CHECK(!IsBestReplying(table, 0, At(table, 0.5, 0.25)));
}

TEST_CASE("no-best-reply conditions in Cournot") {
  PayoffTable table = PayoffTable::Make(Catalog("cournot"), 41);
  StructureReport structure = Structure(table);
  Thm1Report below = Thm1Check(table, structure, At(table, 0.2, 0.2));
  CHECK(below.cond1[0]);
  CHECK(below.cond1[1]);
  CHECK(!below.cond2[0]);
  REQUIRE(below.cond2_witness[0]);
  Profile w = *below.cond2_witness[0];
  CHECK(table.payoff(0, w) > table.payoff(0, At(table, 0.2, 0.2)));

  // At the efficient end the only witnesses use a half-step best-reply tie
  // of the opponent.
  Thm1Report end = Thm1Check(table, structure, At(table, 0.25, 0.25));
  CHECK(end.cond1[0]);
  CHECK(end.cond1[1]);
  REQUIRE(end.cond2_witness[0]);
  Profile tie = *end.cond2_witness[0];
  std::vector<int> br = BestReply(table, 1, tie[0]);
  CHECK(br.size() == 2);
  CHECK(Contains(br, tie[1]));

  CHECK_THROWS_AS(Thm1Check(table, structure, At(table, 0.5, 0.25)),
                  ApplicabilityError);
  CHECK_THROWS_AS(Thm1Check(table, structure, At(table, 0, 0.25)),
                  ApplicabilityError);
  PayoffTable flat = PayoffTable::Make(
      ParseGame("type interval\nbounds 0 1 ; 0 1\npayoff1 0\npayoff2 0\n"), 11);
  CHECK_THROWS_AS(Thm1Check(flat, Structure(flat), At(flat, 0.5, 0.5)),
                  ApplicabilityError);
}

TEST_CASE("one-best-reply conditions in Cournot") {
  PayoffTable table = PayoffTable::Make(Catalog("cournot"), 121);
  StructureReport structure = Structure(table);
  Thm3Report leg = Thm3Check(table, structure, At(table, 0.4, 0.3));
  CHECK(leg.player == 0);
  CHECK(leg.part1);
  CHECK(leg.part2_applicable);
  CHECK(leg.part2);
  REQUIRE(leg.equilibrium);
  Profile e = *leg.equilibrium;
  CHECK(IsBestReplying(table, 0, e));
  CHECK(IsBestReplying(table, 1, e));
  double step = table.grid().step(0);
  CHECK(std::fabs(table.grid().value(0, e[0]) - 1.0 / 3) <= step + 1e-9);
  CHECK(std::fabs(table.grid().value(1, e[1]) - 1.0 / 3) <= step + 1e-9);

  // Quantities below the best reply are better for the opponent.
  Thm3Report small = Thm3Check(table, structure, At(table, 0.2, 0.4));
  CHECK(!small.part1);
  CHECK_THROWS_AS(Thm3Check(table, structure, At(table, 0.3, 0.3)),
                  ApplicabilityError);
}

TEST_CASE("complements region matches the closed form for Hotelling") {
  PayoffTable table = PayoffTable::Make(Catalog("hotelling"), 61);
  StructureReport structure = Structure(table);
  Region region = Thm2Region(table, structure, /*interior_only=*/false);
  std::vector<char> analytic(table.num_cells());
  for (int cell = 0; cell < table.num_cells(); ++cell) {
    analytic[cell] = testing::HotellingAnalytic(table, table.profile(cell));
  }
  const auto& layer = region.flags[static_cast<int>(Concept::kCue)];
  double jaccard = Jaccard(layer, analytic);
  CHECK(jaccard == doctest::Approx(testing::JaccardOf(layer, analytic)));
  // Frozen at n = 61; the grid region differs from the closed form only
  // along its boundary.
  CHECK(jaccard == doctest::Approx(0.949074).epsilon(1e-6));
  // Every grid equilibrium lies in the region.
  for (int cell = 0; cell < table.num_cells(); ++cell) {
    Profile s = table.profile(cell);
    if (IsBestReplying(table, 0, s) && IsBestReplying(table, 1, s)) {
      CHECK(region.label(Concept::kCue, s));
    }
  }
  Region interior = Thm2Region(table, structure);
  for (int k = 0; k < table.size(0); ++k) {
    CHECK(!interior.label(Concept::kCue, {0, k}));
  }
  PayoffTable cournot = PayoffTable::Make(Catalog("cournot"), 21);
  CHECK_THROWS_AS(Thm2Region(cournot, Structure(cournot)), ApplicabilityError);
}

TEST_CASE("worst equilibrium") {
  PayoffTable table = PayoffTable::Make(Catalog("hotelling"), 61);
  StructureReport structure = Structure(table);
  Profile worst = WorstNe(table, structure);
  CHECK(IsBestReplying(table, 0, worst));
  CHECK(IsBestReplying(table, 1, worst));
  double step = table.grid().step(0);
  CHECK(std::fabs(table.grid().value(0, worst[0]) - 1.0) <= step + 1e-9);
  CHECK(std::fabs(table.grid().value(1, worst[1]) - 1.0) <= step + 1e-9);

  PayoffTable unique = PayoffTable::Make(AnchoredGame(), 11);
  CHECK(WorstNe(unique, Structure(unique)) == At(unique, 0.4, 0.4));
  PayoffTable cournot = PayoffTable::Make(Catalog("cournot"), 21);
  CHECK_THROWS_AS(WorstNe(cournot, Structure(cournot)), ApplicabilityError);
}

TEST_CASE("Stackelberg benchmarks") {
  PayoffTable coarse = PayoffTable::Make(Catalog("cournot"), 41);
  StackelbergResult safe = Stackelberg(coarse, 0, /*pessimistic=*/true);
  CHECK(safe.profile == At(coarse, 0.5, 0.25));
  CHECK(safe.leader_value == doctest::Approx(0.125));
  // Optimistic tie-breaking gains a quarter step on a uniform grid.
  StackelbergResult best = Stackelberg(coarse, 0);
  CHECK(best.leader_value == doctest::Approx(0.125 + 0.025 / 4));
  StackelbergResult second = Stackelberg(coarse, 1);
  CHECK(second.profile == Profile{best.profile[1], best.profile[0]});

  PayoffTable fine = PayoffTable::Make(Catalog("cournot"), 401);
  StackelbergResult fine_best = Stackelberg(fine, 0);
  CHECK(fine_best.leader_value == doctest::Approx(0.125).epsilon(1e-3));
  CHECK(std::fabs(fine.grid().value(0, fine_best.profile[0]) - 0.5) <= 0.01);
  CHECK(std::fabs(fine.grid().value(1, fine_best.profile[1]) - 0.25) <= 0.01);

  PayoffTable hotelling = PayoffTable::Make(Catalog("hotelling"), 61);
  StackelbergResult h = Stackelberg(hotelling, 0, /*pessimistic=*/true);
  CHECK(h.profile == At(hotelling, 1.5, 1.25));
  CHECK(h.leader_value == doctest::Approx(9.0 / 16));
}

TEST_CASE("Stackelberg profiles are CUE outcomes") {
  PayoffTable cournot = PayoffTable::Make(Catalog("cournot"), 41);
  Solver solver(cournot);
  for (bool pessimistic : {false, true}) {
    for (int leader = 0; leader < 2; ++leader) {
      ConceptVerdict verdict = StackelbergIsCue(solver, leader, pessimistic);
      CHECK(verdict.holds);
      CHECK(ReplayVerdict(solver, verdict).empty());
    }
  }
  PayoffTable hotelling = PayoffTable::Make(Catalog("hotelling"), 31);
  Solver h(hotelling);
  CHECK(StackelbergIsCue(h, 0, /*pessimistic=*/true).holds);
  PayoffTable flat = PayoffTable::Make(
      ParseGame("type interval\nbounds 0 1 ; 0 1\npayoff1 1\npayoff2 1\n"), 5);
  CHECK(StackelbergIsCue(Solver(flat), 0).holds);
}

TEST_CASE("efficient strong support preconditions") {
  PayoffTable cournot = PayoffTable::Make(Catalog("cournot"), 41);
  Solver solver(cournot);
  // Below the leader value.
  CHECK_THROWS_AS(Prop5StrongSupport(solver, At(cournot, 0.3, 0.3)),
                  ApplicabilityError);
  // Not efficient.
  CHECK_THROWS_AS(Prop5StrongSupport(solver, At(cournot, 0.2, 0.2)),
                  ApplicabilityError);
  // The grid leader value 0.13125 exceeds 0.125.
  CHECK_THROWS_AS(Prop5StrongSupport(solver, At(cournot, 0.25, 0.25)),
                  ApplicabilityError);

  PayoffTable bos = PayoffTable::Make(Catalog("battle_of_sexes"), 1);
  Profile a = {bos.grid().Resolve(0, "a1"), bos.grid().Resolve(1, "a2")};
  CHECK_THROWS_AS(Prop5StrongSupport(Solver(bos), a), ApplicabilityError);

  // A common-interest game with a Pareto-dominant equilibrium passes.
  PayoffTable shared = PayoffTable::Make(
      CommonInterestGame({{3, 0}, {0, 1}}), 1);
  ConceptVerdict verdict = Prop5StrongSupport(Solver(shared), {1, 1});
  CHECK(verdict.holds);
}

TEST_CASE("jaccard index") {
  CHECK(Jaccard({1, 0, 1}, {1, 1, 0}) == doctest::Approx(1.0 / 3));
  CHECK(Jaccard({0, 0}, {0, 0}) == 1.0);
  CHECK(Jaccard({1, 1}, {1, 1}) == 1.0);
}

}  // namespace
}  // namespace cue
