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

#ifndef CUE_TESTS_SUPPORT_ORACLES_H_
#define CUE_TESTS_SUPPORT_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "cue/payoff_table.h"

namespace cue::testing {

// Closed-form CUE region of the Hotelling game with t = 1: each location
// lies between the opponent's best reply and the point where the opponent
// is priced out, and nobody located at 1.5 or beyond earns less than the
// leader value 9/16. Boundaries are inclusive with slack 1e-9.
inline bool HotellingAnalytic(const PayoffTable& table, const Profile& s) {
  const double eps = 1e-9;
  double a = table.grid().value(0, s[0]);
  double b = table.grid().value(1, s[1]);
  bool band = a >= (b + 1) / 2 - eps && a <= 2 * b - 1 + eps &&
              b >= (a + 1) / 2 - eps && b <= 2 * a - 1 + eps;
  if (a >= 1.5 - eps && table.payoff(0, s) < 9.0 / 16 - eps) return false;
  if (b >= 1.5 - eps && table.payoff(1, s) < 9.0 / 16 - eps) return false;
  return band;
}

// Points of the closed-form Cournot CUE set: the symmetric segment from
// 1/4 to 1/3 and the two best-reply legs from 1/3 to 1/2, sampled densely.
inline std::vector<std::array<double, 2>> CournotExpectedPoints() {
  std::vector<std::array<double, 2>> points;
  const int samples = 2000;
  for (int k = 0; k <= samples; ++k) {
    double u = static_cast<double>(k) / samples;
    double x = 0.25 + u * (1.0 / 3 - 0.25);
    points.push_back({x, x});
    double y = 1.0 / 3 + u * (0.5 - 1.0 / 3);
    points.push_back({y, (1 - y) / 2});
    points.push_back({(1 - y) / 2, y});
  }
  return points;
}

// Largest coordinate difference between p and the nearest expected point.
inline double DistanceToCournotSet(
    const std::vector<std::array<double, 2>>& expected, double x, double y) {
  double best = 1e300;
  for (const auto& e : expected) {
    best = std::min(best, std::max(std::fabs(e[0] - x), std::fabs(e[1] - y)));
  }
  return best;
}

// |a & b| / |a | b|, computed independently of the library helper.
inline double JaccardOf(const std::vector<char>& a, const std::vector<char>& b) {
  int both = 0;
  int any = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    both += a[k] && b[k];
    any += a[k] || b[k];
  }
  return any == 0 ? 1.0 : static_cast<double>(both) / any;
}

}  // namespace cue::testing

#endif  // CUE_TESTS_SUPPORT_ORACLES_H_
