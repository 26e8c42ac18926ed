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

#ifndef CUE_CLUSTERING_H_
#define CUE_CLUSTERING_H_

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cue/payoff_table.h"

namespace cue {

// Closed payoff interval; lo may be -inf and hi may be +inf.
struct Interval {
  double lo;
  double hi;
  bool operator==(const Interval& other) const {
    return lo == other.lo && hi == other.hi;
  }
};

// Weakly increasing coarsening of payoffs, kept as sorted disjoint intervals.
// Payoffs inside one interval are equivalent; all others stay distinct.
class Clustering {
 public:
  // Identity: no two distinct payoffs are equivalent.
  Clustering() = default;

  static Clustering None() { return Clustering(); }
  static Clustering All();
  static Clustering AtLeast(double c);
  static Clustering AtMost(double c);
  // Requires a < b.
  static Clustering Between(double a, double b);
  // Drops degenerate intervals; throws ValidationError if two intersect.
  static Clustering Union(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }

  // Index of the interval containing x, or -1.
  int Find(double x) const;

  // Text form accepted by ParseClustering.
  std::string ToString() const;

  bool operator==(const Clustering& other) const {
    return intervals_ == other.intervals_;
  }

 private:
  std::vector<Interval> intervals_;
};

using ClusteringProfile = std::array<Clustering, 2>;

enum class Comparison { kLess, kEqual, kGreater };

Comparison CompareClustered(const Clustering& f, double x, double y);

// Whether f and g order every pair of probe values the same way.
bool Equivalent(const Clustering& f, const Clustering& g,
                const std::vector<double>& probes);

// `none` | `all` | `>=c` | `<=c` | `[a,b]`, or a ';'-joined union of
// these. Throws ParseError or ValidationError.
Clustering ParseClustering(std::string_view text);

// A clustering restricted to one player's payoff levels in a PayoffTable.
// Stored as sorted disjoint level ranges [lo, hi] with lo < hi; each range
// collapses into one class. Class indices are order-preserving, so two
// LevelClusterings are equivalent on the grid iff they are equal.
class LevelClustering {
 public:
  LevelClustering() = default;
  // Levels whose value lies within tol of an interval join its class.
  LevelClustering(const Clustering& f, const std::vector<double>& levels,
                  double tol);

  static LevelClustering All(int num_levels);
  // Collapses levels >= level.
  static LevelClustering AtLeast(int level, int num_levels);

  int Class(int level) const {
    int shift = 0;
    for (const auto& [lo, hi] : ranges_) {
      if (level < lo) break;
      if (level <= hi) return lo - shift;
      shift += hi - lo;
    }
    return level - shift;
  }

  const std::vector<std::pair<int, int>>& ranges() const { return ranges_; }
  bool operator==(const LevelClustering& other) const {
    return ranges_ == other.ranges_;
  }
  bool operator<(const LevelClustering& other) const {
    return ranges_ < other.ranges_;
  }

 private:
  void AddRange(int lo, int hi);

  std::vector<std::pair<int, int>> ranges_;
};

struct DeviationClustering {
  Clustering clustering;
  LevelClustering levels;
};

// {none, all} followed by at_least(c), at_most(c) and interval(a, b) over a
// subsample of at most K of the player's achievable payoff levels (ranks
// floor(j (|P| - 1) / (K - 1))), deduplicated on the achievable payoffs and
// in that deterministic order. Requires K >= 2.
std::vector<DeviationClustering> DeviationFamily(const PayoffTable& table,
                                                 int player, int K);

}  // namespace cue

#endif  // CUE_CLUSTERING_H_
