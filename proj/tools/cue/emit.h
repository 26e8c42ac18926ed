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

#ifndef CUE_TOOLS_EMIT_H_
#define CUE_TOOLS_EMIT_H_

#include <ostream>
#include <string>
#include <vector>

#include "cue/solver.h"

namespace cue::cli {

// Version tag of the SVG palette and geometry below; bump on any change.
inline constexpr char kSvgStyleVersion[] = "cue-region-style/1";

// Columns s1,s2,pi1,pi2 followed by is_ne (when `ne`) and is_<concept> for
// each concept in `concepts`. One row per profile in row-major order.
void WriteRegionCsv(const Region& region, bool ne,
                    const std::vector<Concept>& concepts, std::ostream& out);

// Colored cell plot with s1 horizontal and s2 vertical. Each cell takes the
// color of the strongest concept it belongs to; equilibria get a dot.
void WriteRegionSvg(const Region& region, bool ne,
                    const std::vector<Concept>& concepts,
                    const std::string& title, std::ostream& out);

}  // namespace cue::cli

#endif  // CUE_TOOLS_EMIT_H_
