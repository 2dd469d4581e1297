#pragma once

// Level maps of two-dimensional step resolutions.

#include "lexspec/charpoints.hpp"

#include <string>

namespace lexspec {

/// The drawn window: finite breakpoints padded by 1 on each side.
struct Viewport {
  Rational x_lo, x_hi, y_lo, y_hi;
};

Viewport viewport_of(const StepResolution& f);

/// 60x24 character map; each character shows the level at the centre of
/// its sample rectangle, '*' marks characteristic points. Throws unless n = 2.
std::string render_ascii(const StepResolution& f, const BlockReport& report, bool color = false);

/// SVG 1.1 drawing: one fill per level, lines between blocks, dots at the
/// characteristic points. Throws unless n = 2.
std::string render_svg(const StepResolution& f, const BlockReport& report);

}  // namespace lexspec
