#pragma once

// Deterministic SVG drawing of an edge set on the convex n-gon: vertex 0 at
// the top, labels running clockwise, a light boundary polygon, and the set's
// edges drawn bold as <line class="blocker">.

#include <filesystem>
#include <string>

#include "blockerlab/geometry.hpp"

namespace blockerlab {

struct SvgStyle {
  double size = 480.0;
  double margin = 40.0;
};

/// Byte-identical for identical input.
std::string render_svg(const EdgeSet& s, const SvgStyle& style = {});

/// Writes render_svg(s) to path; throws std::runtime_error on I/O failure.
void write_svg(const EdgeSet& s, const std::filesystem::path& path, const SvgStyle& style = {});

}  // namespace blockerlab
