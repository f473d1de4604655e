#pragma once

// Static rendering of traces: one panel per step with occupied classes marked
// and the generic row/column drawn as a separated, labeled border band.
// Output is plain text (ascii) or a single self-contained SVG document (svg);
// bytes are deterministic for a fixed input.

#include <string>

#include "growth/enhanced.hpp"
#include "growth/regular.hpp"
#include "growth/young.hpp"

namespace growth {

enum class RenderMode { ascii, svg };

// "ascii" or "svg"; anything else -> invalid_argument (unsupported mode).
RenderMode parse_render_mode(const std::string& text);

// Panels for T^0(A), T^1(A), ... with real line coordinates as labels and the
// generic classes as a 'g' band (top row, right column), plus a verdict line.
std::string render_trace(const GrowthTrace& trace, RenderMode mode);

// Same for an enhanced run from the empty set; labels are class indices and
// the enhancement vectors are shown once in the heading.
std::string render_enhanced_trace(const EnhancedTrace& trace, const EnhancementPair& e,
                                  RenderMode mode);

// Single ascii panel of a finite site set on its bounding window.
std::string render_sites(const SiteSet& a);

// Ascii picture of a Young diagram, row 0 at the bottom.
std::string render_diagram_ascii(const YoungDiagram& z);

}  // namespace growth
