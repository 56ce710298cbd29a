#pragma once

#include <optional>
#include <string>

#include "fibword/turtle.hpp"

namespace fibword {

struct RenderStyle {
  double stroke_width = 1.5;
  double scale = 24.0;   // pixels per unit
  double margin = 16.0;  // pixels
  std::string path_color = "#1f4e9c";
  std::string fill_color = "#8e6bc8";    // excursion regions
  std::string axis_color = "#d22d2d";    // zero deviation line
  std::string mirror_color = "#888888";  // symmetry mirror
  std::string bbox_color = "#e8872a";    // bounding rectangle
};

struct PathOverlays {
  bool bounding_box = false;
  bool entrance_exit_diagonal = false;
  std::optional<Vec2> center_mark;  // half-turn centre cross
};

// SVG 1.1 document with the path polyline and optional overlays.
// Rendering is byte-deterministic for identical inputs.
std::string render_path_svg(const Path& p, const RenderStyle& style = {},
                            const PathOverlays& overlays = {});

// Deviation-from-zero diagram: zigzag polyline, filled excursion regions
// against the zero axis, control-point tallies, optional mirror line at
// the fold of the central b.
std::string render_deviation_svg(const Word& w, const RenderStyle& style = {},
                                 bool fill_excursions = true, bool mirror_line = false);

// One deviation diagram per growth-chart node, stacked into a sheet.
std::string render_growth_svg(const GrowthChart& chart, const RenderStyle& style = {});

}  // namespace fibword
