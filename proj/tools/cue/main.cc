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

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"
#include "cue/errors.h"
#include "cue/expression.h"
#include "run_config.h"

namespace {

struct RawOptions {
  std::string game;
  std::optional<int> grid;
  std::vector<std::string> params;
  int K = cue::cli::kDefaultK;
  std::string quantifier = "forall";
  std::string mode = "unilateral";
  int workers = 1;
  std::string profile;
  std::string clustering1;
  std::string clustering2;
  std::string concept_name = "cue";
  std::string concepts = "ne,cue";
  std::string out;
  std::string svg;
};

void AddCommon(CLI::App* app, RawOptions* raw) {
  app->add_option("game", raw->game,
                  "Catalog name (cournot, hotelling, ...) or game file")
      ->required();
  app->add_option("--grid", raw->grid,
                  "Grid size: points per player, or mixture denominator")
      ->check(CLI::PositiveNumber);
  app->add_option("--param", raw->params, "Parameter override name=value");
  app->add_option("--K", raw->K, "Payoff levels sampled by the deviation family")
      ->check(CLI::PositiveNumber);
  app->add_option("--quantifier", raw->quantifier, "forall or exists");
  app->add_option("--mode", raw->mode, "unilateral or simultaneous");
  app->add_option("--workers", raw->workers, "Worker threads")
      ->envname("CUE_WORKERS")
      ->check(CLI::PositiveNumber);
}

cue::cli::RunConfig Resolve(const std::string& command, const RawOptions& raw) {
  cue::cli::RunConfig config;
  config.command = command;
  config.game = raw.game;
  config.grid = raw.grid;
  for (const std::string& item : raw.params) {
    size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw cue::ValidationError("parameter '" + item +
                                 "' is not of the form name=value");
    }
    config.params[item.substr(0, eq)] = cue::ParseNumber(item.substr(eq + 1));
  }
  config.K = raw.K;
  config.quantifier = cue::cli::ParseQuantifier(raw.quantifier);
  config.mode = cue::cli::ParseMode(raw.mode);
  config.workers = raw.workers;
  config.profile = raw.profile;
  if (!raw.clustering1.empty()) config.clustering[0] = raw.clustering1;
  if (!raw.clustering2.empty()) config.clustering[1] = raw.clustering2;
  config.concept_kind = cue::cli::ParseConcept(raw.concept_name);
  config.concepts = cue::cli::ParseConcepts(raw.concepts, &config.ne_layer);
  config.csv_path = raw.out;
  config.svg_path = raw.svg;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered equilibrium solver for two-player games"};
  app.require_subcommand(1);
  RawOptions raw;

  CLI::App* check = app.add_subcommand("check", "Decide a concept at a profile");
  AddCommon(check, &raw);
  check->add_option("--profile", raw.profile, "Strategy pair x,y")->required();
  check->add_option("--clustering1", raw.clustering1,
                    "Clustering of player 1 (all, none, >=c, intervals)");
  check->add_option("--clustering2", raw.clustering2,
                    "Clustering of player 2");
  check->add_option("--concept", raw.concept_name, "weak, cue or strong");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Label every grid profile");
  AddCommon(enumerate, &raw);
  enumerate->add_option("--concepts", raw.concepts,
                        "Comma-separated subset of ne,weak,cue,strong");
  enumerate->add_option("--out", raw.out, "CSV output path");
  enumerate->add_option("--svg", raw.svg, "SVG output path");

  CLI::App* characterize = app.add_subcommand(
      "characterize", "Structure, benchmarks and closed-form cross-checks");
  AddCommon(characterize, &raw);

  CLI::App* bounds =
      app.add_subcommand("bounds", "Punishment and guarantee values");
  AddCommon(bounds, &raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cue::cli::kExitHolds : cue::cli::kExitError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  cue::cli::RunConfig config;
  try {
    config = Resolve(command, raw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cue::cli::kExitError;
  }
  return cue::cli::Run(config, std::cout, std::cerr);
}
