#include "growth/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace growth {

RenderMode parse_render_mode(const std::string& text) {
  if (text == "ascii") return RenderMode::ascii;
  if (text == "svg") return RenderMode::svg;
  throw std::invalid_argument("unsupported render mode '" + text +
                              "' (expected ascii or svg)");
}

namespace {

std::string pad_left(const std::string& s, size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

// One panel's geometry, shared by the ascii and svg emitters. Visual rows run
// top to bottom; column/row index -1 means the generic class band.
struct PanelGrid {
  std::vector<std::string> col_labels;  // left to right, generic last
  std::vector<std::string> row_labels;  // top to bottom, generic first
  std::vector<std::vector<bool>> cells;  // [visual row][visual col]
  int cols() const { return static_cast<int>(col_labels.size()); }
  int rows() const { return static_cast<int>(row_labels.size()); }
  bool has_band = true;  // generic band present (last col, first row)
};

PanelGrid grid_of_extended(const ExtendedState& st) {
  PanelGrid g;
  const auto& cols = st.real_cols();
  const auto& rows = st.real_rows();
  for (int x : cols) g.col_labels.push_back(std::to_string(x));
  g.col_labels.push_back("g");
  g.row_labels.push_back("g");
  for (int k = static_cast<int>(rows.size()) - 1; k >= 0; --k) {
    g.row_labels.push_back(std::to_string(rows[k]));
  }
  const int nc = st.col_classes();
  const int nr = st.row_classes();
  g.cells.assign(static_cast<size_t>(nr), std::vector<bool>(static_cast<size_t>(nc)));
  for (int v = 0; v < nr; ++v) {
    const int rj = (v == 0) ? nr - 1 : nr - 1 - v;  // generic first, then descending
    for (int u = 0; u < nc; ++u) {
      const int ci = (u == nc - 1) ? nc - 1 : u;
      g.cells[static_cast<size_t>(v)][static_cast<size_t>(u)] = st.occ(ci, rj);
    }
  }
  return g;
}

PanelGrid grid_of_enhanced(const EnhancedState& st) {
  PanelGrid g;
  const int nc = st.col_classes();
  const int nr = st.row_classes();
  for (int i = 0; i + 1 < nc; ++i) g.col_labels.push_back(std::to_string(i));
  g.col_labels.push_back("g");
  g.row_labels.push_back("g");
  for (int j = nr - 2; j >= 0; --j) g.row_labels.push_back(std::to_string(j));
  g.cells.assign(static_cast<size_t>(nr), std::vector<bool>(static_cast<size_t>(nc)));
  for (int v = 0; v < nr; ++v) {
    const int rj = (v == 0) ? nr - 1 : nr - 1 - v;
    for (int u = 0; u < nc; ++u) {
      g.cells[static_cast<size_t>(v)][static_cast<size_t>(u)] = st.occ(u, rj);
    }
  }
  return g;
}

void ascii_panel(std::ostringstream& out, const PanelGrid& g) {
  size_t cw = 1, rw = 1;
  for (const auto& s : g.col_labels) cw = std::max(cw, s.size());
  for (const auto& s : g.row_labels) rw = std::max(rw, s.size());
  const int nc = g.cols();
  const int band_col = g.has_band ? nc - 1 : nc;  // visual index of the band column
  auto emit_row = [&](const std::string& label, const std::vector<bool>* cells,
                      const std::vector<std::string>* labels) {
    out << pad_left(label, rw) << " |";
    for (int u = 0; u < nc; ++u) {
      if (u == band_col && u > 0) out << " |";
      std::string field;
      if (cells) {
        field = (*cells)[static_cast<size_t>(u)] ? "#" : ".";
      } else {
        field = (*labels)[static_cast<size_t>(u)];
      }
      out << ' ' << pad_left(field, cw);
    }
    out << '\n';
  };
  auto emit_rule = [&] {
    out << std::string(rw, ' ') << " +";
    for (int u = 0; u < nc; ++u) {
      if (u == band_col && u > 0) out << "-+";
      out << std::string(cw + 1, '-');
    }
    out << '\n';
  };
  for (int v = 0; v < g.rows(); ++v) {
    emit_row(g.row_labels[static_cast<size_t>(v)], &g.cells[static_cast<size_t>(v)], nullptr);
    if (g.has_band && v == 0) emit_rule();
  }
  emit_rule();
  emit_row("", nullptr, &g.col_labels);
}

// SVG geometry: S-pixel cells, G-pixel band gap, labels in a monospace font.
constexpr int kCell = 18;
constexpr int kGap = 6;
constexpr int kMarginLeft = 40;
constexpr int kTitleH = 18;
constexpr int kFooterH = 22;

int panel_width(const PanelGrid& g) {
  return kMarginLeft + g.cols() * kCell + (g.has_band ? kGap : 0) + 10;
}

int panel_height(const PanelGrid& g) {
  return kTitleH + g.rows() * kCell + (g.has_band ? kGap : 0) + kFooterH;
}

void svg_panel(std::ostringstream& out, const PanelGrid& g, const std::string& title,
               int y0) {
  const int nc = g.cols();
  const int nr = g.rows();
  auto cell_x = [&](int u) {
    return kMarginLeft + u * kCell + (g.has_band && u == nc - 1 ? kGap : 0);
  };
  auto cell_y = [&](int v) {
    return y0 + kTitleH + v * kCell + (g.has_band && v >= 1 ? kGap : 0);
  };
  out << "<text class=\"t\" x=\"2\" y=\"" << y0 + kTitleH - 6 << "\">" << title
      << "</text>\n";
  for (int v = 0; v < nr; ++v) {
    for (int u = 0; u < nc; ++u) {
      out << "<rect class=\"" << (g.cells[static_cast<size_t>(v)][static_cast<size_t>(u)] ? 'o' : 'e')
          << "\" x=\"" << cell_x(u) << "\" y=\"" << cell_y(v) << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\"/>\n";
    }
  }
  for (int v = 0; v < nr; ++v) {
    out << "<text class=\"t\" text-anchor=\"end\" x=\"" << kMarginLeft - 5 << "\" y=\""
        << cell_y(v) + kCell - 5 << "\">" << g.row_labels[static_cast<size_t>(v)]
        << "</text>\n";
  }
  const int footer_y = cell_y(nr - 1) + kCell + 14;
  for (int u = 0; u < nc; ++u) {
    out << "<text class=\"t\" text-anchor=\"middle\" x=\"" << cell_x(u) + kCell / 2
        << "\" y=\"" << footer_y << "\">" << g.col_labels[static_cast<size_t>(u)]
        << "</text>\n";
  }
}

std::string svg_document(const std::vector<PanelGrid>& grids,
                         const std::vector<std::string>& titles,
                         const std::vector<std::string>& trailer) {
  int width = 120;
  int height = 6;
  for (const PanelGrid& g : grids) {
    width = std::max(width, panel_width(g));
    height += panel_height(g);
  }
  height += static_cast<int>(trailer.size()) * kTitleH + 6;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<style>.o{fill:#355070;stroke:#1d2d3f;stroke-width:1}"
         ".e{fill:#f4f4f4;stroke:#c0c0c0;stroke-width:1}"
         ".t{font:12px monospace;fill:#222}</style>\n";
  int y = 6;
  for (size_t k = 0; k < grids.size(); ++k) {
    svg_panel(out, grids[k], titles[k], y);
    y += panel_height(grids[k]);
  }
  for (const std::string& line : trailer) {
    y += kTitleH;
    out << "<text class=\"t\" x=\"2\" y=\"" << y - 6 << "\">" << line << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

int covered_lines(const ExtendedState& st) {
  int covered = 0;
  for (int rj = 0; rj < st.row_classes(); ++rj) covered += st.row_covered(rj) ? 1 : 0;
  for (int ci = 0; ci < st.col_classes(); ++ci) covered += st.col_covered(ci) ? 1 : 0;
  return covered;
}

std::vector<std::string> trace_trailer(bool spans, const std::optional<int>& tau,
                                       int verdict_time, const std::optional<int>& tau_line) {
  std::vector<std::string> lines;
  if (spans) {
    lines.push_back("verdict = spans");
    lines.push_back("tau = " + std::to_string(*tau));
  } else {
    lines.push_back("verdict = does-not-span");
    lines.push_back("fixation_time = " + std::to_string(verdict_time));
  }
  if (tau_line) lines.push_back("tau_line = " + std::to_string(*tau_line));
  return lines;
}

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::ostringstream out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out << ' ';
    out << v[k];
  }
  return out.str();
}

}  // namespace

std::string render_trace(const GrowthTrace& trace, RenderMode mode) {
  if (trace.states.empty()) throw std::invalid_argument("cannot render an empty trace");
  std::vector<PanelGrid> grids;
  std::vector<std::string> titles;
  for (size_t t = 0; t < trace.states.size(); ++t) {
    const ExtendedState& st = trace.states[t];
    grids.push_back(grid_of_extended(st));
    titles.push_back("step " + std::to_string(t) + "  occupied=" +
                     std::to_string(st.occupied_cells()) + "  lines_covered=" +
                     std::to_string(covered_lines(st)));
  }
  const auto trailer =
      trace_trailer(trace.spans, trace.tau, trace.verdict_time, trace.tau_line);
  if (mode == RenderMode::svg) return svg_document(grids, titles, trailer);
  std::ostringstream out;
  for (size_t k = 0; k < grids.size(); ++k) {
    out << titles[k] << '\n';
    ascii_panel(out, grids[k]);
    out << '\n';
  }
  for (const std::string& line : trailer) out << line << '\n';
  return out.str();
}

std::string render_enhanced_trace(const EnhancedTrace& trace, const EnhancementPair& e,
                                  RenderMode mode) {
  if (trace.states.empty()) throw std::invalid_argument("cannot render an empty trace");
  std::vector<PanelGrid> grids;
  std::vector<std::string> titles;
  for (size_t t = 0; t < trace.states.size(); ++t) {
    const EnhancedState& st = trace.states[t];
    grids.push_back(grid_of_enhanced(st));
    titles.push_back("step " + std::to_string(t) + "  occupied=" +
                     std::to_string(st.occupied_cells()));
  }
  std::vector<std::string> trailer;
  trailer.push_back("r = " + join_ints(e.r));
  trailer.push_back("c = " + join_ints(e.c));
  for (auto& line : trace_trailer(trace.spans, trace.tau, trace.verdict_time, std::nullopt)) {
    trailer.push_back(std::move(line));
  }
  if (mode == RenderMode::svg) return svg_document(grids, titles, trailer);
  std::ostringstream out;
  out << "r = " << join_ints(e.r) << '\n';
  out << "c = " << join_ints(e.c) << '\n' << '\n';
  for (size_t k = 0; k < grids.size(); ++k) {
    out << titles[k] << '\n';
    ascii_panel(out, grids[k]);
    out << '\n';
  }
  for (const std::string& line :
       trace_trailer(trace.spans, trace.tau, trace.verdict_time, std::nullopt)) {
    out << line << '\n';
  }
  return out.str();
}

std::string render_sites(const SiteSet& a) {
  std::ostringstream out;
  if (a.empty()) {
    out << "(empty site set)\n";
    return out.str();
  }
  int max_i = 0, max_j = 0;
  for (const Site& s : a.sites) {
    max_i = std::max(max_i, s.i);
    max_j = std::max(max_j, s.j);
  }
  PanelGrid g;
  g.has_band = false;
  for (int i = 0; i <= max_i; ++i) g.col_labels.push_back(std::to_string(i));
  for (int j = max_j; j >= 0; --j) g.row_labels.push_back(std::to_string(j));
  g.cells.assign(static_cast<size_t>(max_j) + 1,
                 std::vector<bool>(static_cast<size_t>(max_i) + 1));
  for (const Site& s : a.sites) {
    g.cells[static_cast<size_t>(max_j - s.j)][static_cast<size_t>(s.i)] = true;
  }
  ascii_panel(out, g);
  return out.str();
}

std::string render_diagram_ascii(const YoungDiagram& z) {
  if (z.empty()) return "(empty)\n";
  std::ostringstream out;
  for (int j = z.height() - 1; j >= 0; --j) {
    out << std::string(static_cast<size_t>(z.row_length(j)), '#') << '\n';
  }
  return out.str();
}

}  // namespace growth
