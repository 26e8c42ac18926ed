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

#include "cue/clustering.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>

#include "cue/errors.h"

namespace cue {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text[0]))) {
    text.remove_prefix(1);
  }
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

double ParseBound(std::string_view text, int column) {
  try {
    return ParseNumber(Trim(text));
  } catch (const ParseError&) {
    throw ParseError("bad number '" + std::string(Trim(text)) + "'", 1,
                     column);
  }
}

}  // namespace

Clustering Clustering::All() { return Union({{-kInf, kInf}}); }

Clustering Clustering::AtLeast(double c) { return Union({{c, kInf}}); }

Clustering Clustering::AtMost(double c) { return Union({{-kInf, c}}); }

Clustering Clustering::Between(double a, double b) {
  if (!(a < b)) {
    throw ValidationError("interval clustering needs a < b, got [" +
                          FormatNumber(a) + ", " + FormatNumber(b) + "]");
  }
  return Union({{a, b}});
}

Clustering Clustering::Union(std::vector<Interval> intervals) {
  Clustering f;
  for (const Interval& interval : intervals) {
    if (std::isnan(interval.lo) || std::isnan(interval.hi) ||
        interval.lo > interval.hi) {
      throw ValidationError("malformed cluster interval [" +
                            FormatNumber(interval.lo) + ", " +
                            FormatNumber(interval.hi) + "]");
    }
    if (interval.lo < interval.hi) f.intervals_.push_back(interval);
  }
  std::sort(f.intervals_.begin(), f.intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (size_t k = 1; k < f.intervals_.size(); ++k) {
    if (f.intervals_[k].lo <= f.intervals_[k - 1].hi) {
      throw ValidationError("cluster intervals overlap: " + f.ToString());
    }
  }
  return f;
}

int Clustering::Find(double x) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const Interval& interval) { return v < interval.lo; });
  if (it == intervals_.begin()) return -1;
  --it;
  if (x <= it->hi) return static_cast<int>(it - intervals_.begin());
  return -1;
}

std::string Clustering::ToString() const {
  if (intervals_.empty()) return "none";
  std::string text;
  for (const Interval& interval : intervals_) {
    if (!text.empty()) text += ';';
    if (interval.lo == -kInf && interval.hi == kInf) {
      text += "all";
    } else if (interval.hi == kInf) {
      text += ">=" + FormatNumber(interval.lo);
    } else if (interval.lo == -kInf) {
      text += "<=" + FormatNumber(interval.hi);
    } else {
      text += "[" + FormatNumber(interval.lo) + "," +
              FormatNumber(interval.hi) + "]";
    }
  }
  return text;
}

Comparison CompareClustered(const Clustering& f, double x, double y) {
  if (x == y) return Comparison::kEqual;
  int cx = f.Find(x);
  if (cx >= 0 && cx == f.Find(y)) return Comparison::kEqual;
  return x < y ? Comparison::kLess : Comparison::kGreater;
}

bool Equivalent(const Clustering& f, const Clustering& g,
                const std::vector<double>& probes) {
  if (probes.empty()) throw ValidationError("probe set must be nonempty");
  for (double x : probes) {
    for (double y : probes) {
      if (CompareClustered(f, x, y) != CompareClustered(g, x, y)) return false;
    }
  }
  return true;
}

Clustering ParseClustering(std::string_view text) {
  std::vector<Interval> intervals;
  size_t start = 0;
  while (true) {
    size_t end = text.find(';', start);
    std::string_view part =
        text.substr(start, end == std::string_view::npos ? end : end - start);
    int column = static_cast<int>(start) + 1;
    std::string_view item = Trim(part);
    if (item == "none") {
      // contributes nothing
    } else if (item == "all") {
      intervals.push_back({-kInf, kInf});
    } else if (item.substr(0, 2) == ">=") {
      intervals.push_back({ParseBound(item.substr(2), column), kInf});
    } else if (item.substr(0, 2) == "<=") {
      intervals.push_back({-kInf, ParseBound(item.substr(2), column)});
    } else if (!item.empty() && item.front() == '[' && item.back() == ']') {
      std::string_view body = item.substr(1, item.size() - 2);
      size_t comma = body.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("expected '[a,b]'", 1, column);
      }
      double a = ParseBound(body.substr(0, comma), column);
      double b = ParseBound(body.substr(comma + 1), column);
      if (!(a < b)) {
        throw ValidationError("interval clustering needs a < b in '" +
                              std::string(item) + "'");
      }
      intervals.push_back({a, b});
    } else {
      throw ParseError("unknown clustering '" + std::string(item) +
                           "'; expected none, all, >=c, <=c or [a,b]",
                       1, column);
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Clustering::Union(std::move(intervals));
}

LevelClustering::LevelClustering(const Clustering& f,
                                 const std::vector<double>& levels,
                                 double tol) {
  for (const Interval& interval : f.intervals()) {
    auto lo = std::lower_bound(levels.begin(), levels.end(),
                               interval.lo - tol);
    auto hi = std::upper_bound(levels.begin(), levels.end(),
                               interval.hi + tol);
    int first = static_cast<int>(lo - levels.begin());
    int last = static_cast<int>(hi - levels.begin()) - 1;
    if (last > first) AddRange(first, last);
  }
}

void LevelClustering::AddRange(int lo, int hi) {
  // Intervals arrive sorted; tolerance can make neighbours share a level.
  if (!ranges_.empty() && lo <= ranges_.back().second) {
    ranges_.back().second = std::max(ranges_.back().second, hi);
    return;
  }
  ranges_.emplace_back(lo, hi);
}

LevelClustering LevelClustering::All(int num_levels) {
  return AtLeast(0, num_levels);
}

LevelClustering LevelClustering::AtLeast(int level, int num_levels) {
  LevelClustering f;
  if (num_levels - 1 > level) f.ranges_.emplace_back(level, num_levels - 1);
  return f;
}

std::vector<DeviationClustering> DeviationFamily(const PayoffTable& table,
                                                 int player, int K) {
  if (K < 2) throw ValidationError("deviation family needs K >= 2");
  const std::vector<double>& levels = table.levels(player);
  const int count = static_cast<int>(levels.size());
  std::vector<double> sample;
  for (int j = 0; j < K; ++j) {
    int rank = static_cast<int>(static_cast<long long>(j) * (count - 1) /
                                (K - 1));
    if (sample.empty() || sample.back() != levels[rank]) {
      sample.push_back(levels[rank]);
    }
  }
  std::vector<Clustering> candidates = {Clustering::None(), Clustering::All()};
  for (double c : sample) candidates.push_back(Clustering::AtLeast(c));
  for (double c : sample) candidates.push_back(Clustering::AtMost(c));
  for (size_t a = 0; a < sample.size(); ++a) {
    for (size_t b = a + 1; b < sample.size(); ++b) {
      candidates.push_back(Clustering::Between(sample[a], sample[b]));
    }
  }
  std::vector<DeviationClustering> family;
  std::set<LevelClustering> seen;
  for (Clustering& f : candidates) {
    LevelClustering level_form(f, levels, table.tol());
    if (!seen.insert(level_form).second) continue;
    family.push_back({std::move(f), std::move(level_form)});
  }
  return family;
}

}  // namespace cue
