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

#include "cue/catalog.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "cue/errors.h"

namespace cue {
namespace {

constexpr char kCournot[] = R"(# Quantity competition with linear inverse demand 1 - s1 - s2.
name cournot
type interval
bounds 0 1 ; 0 1
payoff1 s1*(1 - s1 - s2)
payoff2 s2*(1 - s1 - s2)
)";

constexpr char kHotelling[] = R"(# Price competition between sellers at the two ends of a line of
# consumers with travel cost t; prices in [0, M].
name hotelling
type interval
param t 1
param M 3
bounds 0 M ; 0 M
payoff1 s1*min(1, max(0, (s2 - s1 + t)/(2*t)))
payoff2 s2*min(1, max(0, (s1 - s2 + t)/(2*t)))
)";

constexpr char kBattleOfSexes[] = R"(name battle_of_sexes
type finite
actions a1 b1 ; a2 b2
payoffs1
2 0
0 1
payoffs2
1 0
0 2
)";

constexpr char kZeroSum[] = R"(name zero_sum_3x3
type finite
actions a b c ; a b c
payoffs1
0 0 0
0 0 -1
0 1 0
payoffs2
0 0 0
0 0 1
0 -1 0
)";

const std::set<std::string>& Keywords() {
  static const auto* keywords = new std::set<std::string>{
      "name",    "type",    "param",    "bounds",  "payoff1",
      "payoff2", "actions", "payoffs1", "payoffs2"};
  return *keywords;
}

struct Line {
  int number;
  std::string text;
  size_t indent;  // column offset of text in the source line
};

std::vector<std::string> Split(const std::string& text) {
  std::istringstream stream(text);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::string Trim(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void Fail(const Line& line, const std::string& message) {
  throw ParseError(message, line.number, static_cast<int>(line.indent) + 1);
}

double ParseValue(const Line& line, const std::string& token,
                  const std::map<std::string, double>& params) {
  auto it = params.find(token);
  if (it != params.end()) return it->second;
  try {
    return ParseNumber(token);
  } catch (const ParseError&) {
    Fail(line, "bad number '" + token + "'");
  }
}

// Splits "x y ; z w" into the two sides.
std::pair<std::vector<std::string>, std::vector<std::string>> SplitSides(
    const Line& line, const std::string& rest) {
  size_t semicolon = rest.find(';');
  if (semicolon == std::string::npos ||
      rest.find(';', semicolon + 1) != std::string::npos) {
    Fail(line, "expected exactly one ';' separating the two players");
  }
  return {Split(rest.substr(0, semicolon)), Split(rest.substr(semicolon + 1))};
}

Game Parse(std::string_view text,
           const std::map<std::string, double>& overrides) {
  std::vector<Line> lines;
  {
    std::istringstream stream{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
      ++number;
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      size_t begin = raw.find_first_not_of(" \t\r");
      if (begin == std::string::npos) continue;
      lines.push_back({number, Trim(raw), begin});
    }
  }

  std::optional<std::string> type;
  std::string name;
  std::map<std::string, double> params;
  std::set<std::string> seen;
  std::optional<Line> bounds_line;
  std::array<std::optional<Line>, 2> payoff_lines;
  std::optional<Line> actions_line;
  std::array<std::vector<Line>, 2> matrix_lines;
  std::array<std::optional<Line>, 2> matrix_heads;

  for (size_t k = 0; k < lines.size(); ++k) {
    const Line& line = lines[k];
    std::vector<std::string> tokens = Split(line.text);
    const std::string& keyword = tokens[0];
    if (!Keywords().count(keyword)) {
      Fail(line, "unknown entry '" + keyword + "'");
    }
    if (keyword != "param" && !seen.insert(keyword).second) {
      Fail(line, "duplicate '" + keyword + "' entry");
    }
    std::string rest = Trim(line.text.substr(keyword.size()));
    if (keyword == "name") {
      name = rest;
    } else if (keyword == "type") {
      if (rest != "interval" && rest != "finite") {
        Fail(line, "type must be 'interval' or 'finite'");
      }
      type = rest;
    } else if (keyword == "param") {
      if (tokens.size() != 3) Fail(line, "expected 'param <name> <value>'");
      const std::string& key = tokens[1];
      bool identifier = std::isalpha(static_cast<unsigned char>(key[0])) ||
                        key[0] == '_';
      for (char c : key) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
          identifier = false;
        }
      }
      if (!identifier || key == "s1" || key == "s2" || key == "min" ||
          key == "max") {
        Fail(line, "bad parameter name '" + key + "'");
      }
      if (params.count(key)) Fail(line, "duplicate parameter '" + key + "'");
      params[key] = ParseValue(line, tokens[2], {});
    } else if (keyword == "bounds") {
      bounds_line = line;
    } else if (keyword == "payoff1" || keyword == "payoff2") {
      payoff_lines[keyword == "payoff1" ? 0 : 1] = line;
    } else if (keyword == "actions") {
      actions_line = line;
    } else {
      int p = keyword == "payoffs1" ? 0 : 1;
      if (!rest.empty()) Fail(line, "matrix rows start on the next line");
      matrix_heads[p] = line;
      while (k + 1 < lines.size() &&
             !Keywords().count(Split(lines[k + 1].text)[0])) {
        matrix_lines[p].push_back(lines[++k]);
      }
    }
  }

  Line first = lines.empty() ? Line{1, "", 0} : lines.front();
  if (!type) Fail(first, "missing 'type' entry");
  for (const auto& [key, value] : overrides) {
    if (!params.count(key)) {
      throw ValidationError("game has no parameter '" + key + "'");
    }
    params[key] = value;
  }

  if (*type == "interval") {
    if (actions_line) Fail(*actions_line, "'actions' needs type finite");
    for (int p = 0; p < 2; ++p) {
      if (matrix_heads[p]) Fail(*matrix_heads[p], "matrices need type finite");
    }
    if (!bounds_line) Fail(first, "missing 'bounds' entry");
    IntervalGame game;
    auto [left, right] =
        SplitSides(*bounds_line, bounds_line->text.substr(6));
    if (left.size() != 2 || right.size() != 2) {
      Fail(*bounds_line, "expected 'bounds lo hi ; lo hi'");
    }
    game.lo = {ParseValue(*bounds_line, left[0], params),
               ParseValue(*bounds_line, right[0], params)};
    game.hi = {ParseValue(*bounds_line, left[1], params),
               ParseValue(*bounds_line, right[1], params)};
    for (int p = 0; p < 2; ++p) {
      if (!(game.lo[p] < game.hi[p])) {
        Fail(*bounds_line, "bounds of player " + std::to_string(p + 1) +
                               " need lo < hi");
      }
    }
    for (int p = 0; p < 2; ++p) {
      if (!payoff_lines[p]) {
        Fail(first, "missing 'payoff" + std::to_string(p + 1) + "' entry");
      }
      const Line& line = *payoff_lines[p];
      size_t offset = line.text.find_first_not_of(" \t", 7);
      if (offset == std::string::npos) Fail(line, "empty payoff expression");
      try {
        game.payoff[p] = Expression::Parse(line.text.substr(offset), params);
      } catch (const ParseError& error) {
        std::string message = error.what();
        message = message.substr(message.find(": ") + 2);
        throw ParseError(message, line.number,
                         static_cast<int>(line.indent + offset) +
                             error.column());
      }
    }
    Game result(std::move(game), name);
    result.set_params(params);
    return result;
  }

  if (bounds_line) Fail(*bounds_line, "'bounds' needs type interval");
  for (int p = 0; p < 2; ++p) {
    if (payoff_lines[p]) Fail(*payoff_lines[p], "expressions need type interval");
  }
  if (!actions_line) Fail(first, "missing 'actions' entry");
  FiniteGame game;
  auto [left, right] = SplitSides(*actions_line, actions_line->text.substr(7));
  game.actions = {left, right};
  for (int p = 0; p < 2; ++p) {
    if (game.actions[p].empty()) Fail(*actions_line, "player without actions");
  }
  for (int p = 0; p < 2; ++p) {
    if (!matrix_heads[p]) {
      Fail(first, "missing 'payoffs" + std::to_string(p + 1) + "' matrix");
    }
    if (matrix_lines[p].size() != game.actions[0].size()) {
      Fail(*matrix_heads[p], "matrix needs " +
                                 std::to_string(game.actions[0].size()) +
                                 " rows, found " +
                                 std::to_string(matrix_lines[p].size()));
    }
    for (const Line& row_line : matrix_lines[p]) {
      std::vector<double> row;
      for (const std::string& token : Split(row_line.text)) {
        row.push_back(ParseValue(row_line, token, params));
      }
      if (row.size() != game.actions[1].size()) {
        Fail(row_line, "row needs " + std::to_string(game.actions[1].size()) +
                           " entries, found " + std::to_string(row.size()));
      }
      game.payoffs[p].push_back(std::move(row));
    }
  }
  Game result(std::move(game), name);
  result.set_params(params);
  return result;
}

std::string Join(const std::vector<std::string>& items) {
  std::string text;
  for (const std::string& item : items) {
    if (!text.empty()) text += ' ';
    text += item;
  }
  return text;
}

}  // namespace

Game ParseGame(std::string_view text) { return Parse(text, {}); }

Game LoadGame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read game document '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

std::string SerializeGame(const Game& game) {
  std::ostringstream out;
  if (!game.name().empty()) out << "name " << game.name() << "\n";
  if (!game.is_finite()) {
    const IntervalGame& g = game.interval();
    out << "type interval\n";
    for (const auto& [key, value] : game.params()) {
      out << "param " << key << " " << FormatNumber(value) << "\n";
    }
    out << "bounds " << FormatNumber(g.lo[0]) << " " << FormatNumber(g.hi[0])
        << " ; " << FormatNumber(g.lo[1]) << " " << FormatNumber(g.hi[1])
        << "\n";
    out << "payoff1 " << g.payoff[0].ToString() << "\n";
    out << "payoff2 " << g.payoff[1].ToString() << "\n";
    return out.str();
  }
  const FiniteGame& g = game.finite();
  out << "type finite\n";
  for (const auto& [key, value] : game.params()) {
    out << "param " << key << " " << FormatNumber(value) << "\n";
  }
  out << "actions " << Join(g.actions[0]) << " ; " << Join(g.actions[1])
      << "\n";
  for (int p = 0; p < 2; ++p) {
    out << "payoffs" << p + 1 << "\n";
    for (const auto& row : g.payoffs[p]) {
      std::vector<std::string> cells;
      for (double v : row) cells.push_back(FormatNumber(v));
      out << Join(cells) << "\n";
    }
  }
  return out.str();
}

std::vector<std::string> CatalogNames() {
  return {"cournot", "hotelling", "battle_of_sexes", "zero_sum_3x3",
          "common_interest"};
}

Game CommonInterestGame(const std::vector<std::vector<double>>& matrix) {
  FiniteGame game;
  if (matrix.empty() || matrix[0].empty()) {
    throw ValidationError("common-interest matrix is empty");
  }
  for (size_t a = 0; a < matrix.size(); ++a) {
    game.actions[0].push_back("r" + std::to_string(a + 1));
  }
  for (size_t b = 0; b < matrix[0].size(); ++b) {
    game.actions[1].push_back("c" + std::to_string(b + 1));
  }
  game.payoffs = {matrix, matrix};
  return Game(std::move(game), "common_interest");
}

std::string CatalogDocument(const std::string& name) {
  if (name == "cournot") return kCournot;
  if (name == "hotelling") return kHotelling;
  if (name == "battle_of_sexes") return kBattleOfSexes;
  if (name == "zero_sum_3x3") return kZeroSum;
  throw ValidationError("no document for catalog game '" + name + "'");
}

Game Catalog(const std::string& name,
             const std::map<std::string, double>& params) {
  if (name == "cournot") return Parse(kCournot, params);
  if (name == "hotelling") {
    Game game = Parse(kHotelling, params);
    double t = game.params().at("t");
    double m = game.params().at("M");
    if (!(t > 0.0 && t < m)) {
      throw ValidationError("hotelling needs 0 < t < M");
    }
    return game;
  }
  if (name == "battle_of_sexes") return Parse(kBattleOfSexes, params);
  if (name == "zero_sum_3x3") return Parse(kZeroSum, params);
  if (name == "common_interest") {
    std::map<std::pair<int, int>, double> entries;
    int rows = 0;
    int cols = 0;
    for (const auto& [key, value] : params) {
      if (key.size() != 3 || key[0] != 'u' || !std::isdigit(key[1]) ||
          !std::isdigit(key[2]) || key[1] == '0' || key[2] == '0') {
        throw ValidationError("common_interest takes parameters uRC, got '" +
                              key + "'");
      }
      int r = key[1] - '0';
      int c = key[2] - '0';
      entries[{r, c}] = value;
      rows = std::max(rows, r);
      cols = std::max(cols, c);
    }
    if (entries.empty() ||
        entries.size() != static_cast<size_t>(rows * cols)) {
      throw ValidationError("common_interest needs a full matrix of uRC "
                            "parameters");
    }
    std::vector<std::vector<double>> matrix(rows, std::vector<double>(cols));
    for (const auto& [rc, value] : entries) {
      matrix[rc.first - 1][rc.second - 1] = value;
    }
    return CommonInterestGame(matrix);
  }
  throw ValidationError("unknown catalog game '" + name + "'");
}

Game ResolveGame(const std::string& source,
                 const std::map<std::string, double>& params) {
  std::vector<std::string> names = CatalogNames();
  if (std::find(names.begin(), names.end(), source) != names.end()) {
    return Catalog(source, params);
  }
  std::ifstream in(source);
  if (!in) {
    throw Error("'" + source + "' is neither a catalog game nor a readable "
                "document");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), params);
}

}  // namespace cue
