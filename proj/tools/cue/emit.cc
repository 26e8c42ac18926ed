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

#include "emit.h"

#include <algorithm>

#include "cue/expression.h"

namespace cue::cli {
namespace {

struct Style {
  const char* background;
  const char* weak;
  const char* cue;
  const char* strong;
  const char* ne;
  const char* grid_line;
  const char* text;
  int plot_size;
  int min_cell;
  int margin;
  int legend_width;
  int font_size;
};

constexpr Style kStyle = {"#ffffff", "#c6dbef", "#6baed6", "#08519c",
                          "#cb181d", "#d9d9d9", "#252525", 480,
                          3,         64,        150,       12};

const char* ConceptColor(Concept kind) {
  switch (kind) {
    case Concept::kWeak:
      return kStyle.weak;
    case Concept::kCue:
      return kStyle.cue;
    default:
      return kStyle.strong;
  }
}

const char* ConceptName(Concept kind) {
  switch (kind) {
    case Concept::kWeak:
      return "weak CUE";
    case Concept::kCue:
      return "CUE";
    default:
      return "strong CUE";
  }
}

std::string Escape(const std::string& text) {
  std::string escaped;
  for (char c : text) {
    switch (c) {
      case '&':
        escaped += "&amp;";
        break;
      case '<':
        escaped += "&lt;";
        break;
      case '>':
        escaped += "&gt;";
        break;
      case '"':
        escaped += "&quot;";
        break;
      default:
        escaped += c;
    }
  }
  return escaped;
}

}  // namespace

void WriteRegionCsv(const Region& region, bool ne,
                    const std::vector<Concept>& concepts, std::ostream& out) {
  out << "s1,s2,pi1,pi2";
  if (ne) out << ",is_ne";
  for (Concept kind : concepts) out << ",is_" << ToString(kind);
  out << '\n';
  for (int i = 0; i < region.size[0]; ++i) {
    for (int j = 0; j < region.size[1]; ++j) {
      Profile s = {i, j};
      int c = region.cell(s);
      out << region.grid.Label(0, i) << ',' << region.grid.Label(1, j) << ','
          << FormatNumber(region.payoff[0][c]) << ','
          << FormatNumber(region.payoff[1][c]);
      if (ne) out << ',' << (region.is_ne[c] ? 1 : 0);
      for (Concept kind : concepts) {
        out << ',' << (region.label(kind, s) ? 1 : 0);
      }
      out << '\n';
    }
  }
}

void WriteRegionSvg(const Region& region, bool ne,
                    const std::vector<Concept>& concepts,
                    const std::string& title, std::ostream& out) {
  const int n1 = region.size[0];
  const int n2 = region.size[1];
  const int cell =
      std::max(kStyle.min_cell, kStyle.plot_size / std::max({n1, n2, 1}));
  const int m = kStyle.margin;
  const int plot_w = n1 * cell;
  const int plot_h = n2 * cell;
  const int width = m + plot_w + 24 + kStyle.legend_width;
  const int height = m + plot_h + m;
  const int fs = kStyle.font_size;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\" font-family=\"sans-serif\" font-size=\"" << fs
      << "\">\n";
  out << "<!-- " << kSvgStyleVersion << " -->\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"" << kStyle.background << "\"/>\n";
  out << "<text x=\"" << m << "\" y=\"" << m / 2 << "\" fill=\""
      << kStyle.text << "\" font-size=\"" << fs + 2 << "\">" << Escape(title)
      << "</text>\n";

  // Cells, drawn row by row from the top (highest s2).
  out << "<g shape-rendering=\"crispEdges\">\n";
  out << "<rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\""
      << kStyle.grid_line << "\"/>\n";
  for (int j = n2 - 1; j >= 0; --j) {
    for (int i = 0; i < n1; ++i) {
      const char* color = nullptr;
      for (Concept kind : concepts) {
        if (region.label(kind, {i, j})) color = ConceptColor(kind);
      }
      if (color == nullptr) continue;
      out << "<rect x=\"" << m + i * cell << "\" y=\""
          << m + (n2 - 1 - j) * cell << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"" << color << "\"/>\n";
    }
  }
  out << "</g>\n";
  if (ne) {
    const int r = std::max(1, cell / 3);
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n2; ++j) {
        if (!region.is_ne[region.cell({i, j})]) continue;
        out << "<circle cx=\"" << m + i * cell + cell / 2 << "\" cy=\""
            << m + (n2 - 1 - j) * cell + cell / 2 << "\" r=\"" << r
            << "\" fill=\"" << kStyle.ne << "\"/>\n";
      }
    }
  }

  // Axes with ticks at both ends and the middle.
  auto ticks = [](int n) {
    std::vector<int> at = {0};
    if (n > 2) at.push_back((n - 1) / 2);
    if (n > 1) at.push_back(n - 1);
    return at;
  };
  for (int i : ticks(n1)) {
    out << "<text x=\"" << m + i * cell + cell / 2 << "\" y=\""
        << m + plot_h + fs + 4 << "\" text-anchor=\"middle\" fill=\""
        << kStyle.text << "\">" << Escape(region.grid.Label(0, i))
        << "</text>\n";
  }
  for (int j : ticks(n2)) {
    out << "<text x=\"" << m - 6 << "\" y=\""
        << m + (n2 - 1 - j) * cell + cell / 2 + fs / 3
        << "\" text-anchor=\"end\" fill=\"" << kStyle.text << "\">"
        << Escape(region.grid.Label(1, j)) << "</text>\n";
  }
  out << "<text x=\"" << m + plot_w / 2 << "\" y=\"" << m + plot_h + 2 * fs + 10
      << "\" text-anchor=\"middle\" fill=\"" << kStyle.text
      << "\">s1 (player 1)</text>\n";
  out << "<text x=\"" << fs << "\" y=\"" << m + plot_h / 2
      << "\" text-anchor=\"middle\" fill=\"" << kStyle.text
      << "\" transform=\"rotate(-90 " << fs << ' ' << m + plot_h / 2
      << ")\">s2 (player 2)</text>\n";

  // Legend.
  int lx = m + plot_w + 24;
  int ly = m;
  for (Concept kind : concepts) {
    out << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"" << fs
        << "\" height=\"" << fs << "\" fill=\"" << ConceptColor(kind)
        << "\"/>\n";
    out << "<text x=\"" << lx + fs + 6 << "\" y=\"" << ly + fs - 2
        << "\" fill=\"" << kStyle.text << "\">" << ConceptName(kind)
        << "</text>\n";
    ly += fs + 8;
  }
  if (ne) {
    out << "<circle cx=\"" << lx + fs / 2 << "\" cy=\"" << ly + fs / 2
        << "\" r=\"" << fs / 3 << "\" fill=\"" << kStyle.ne << "\"/>\n";
    out << "<text x=\"" << lx + fs + 6 << "\" y=\"" << ly + fs - 2
        << "\" fill=\"" << kStyle.text << "\">Nash equilibrium</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace cue::cli
