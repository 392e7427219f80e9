#pragma once

#include <string>

#include "jck/curves.hpp"

namespace jck {

// One self-contained SVG document, one closed path per curve.  The viewBox
// fits the given bounds (normally the initial frame of an animation, so it
// stays put across frames); coordinates are printed with 9 significant
// digits, which makes the output reproducible byte for byte.
struct SvgBounds {
    double xmin = 0, ymin = 0, xmax = 1, ymax = 1;
};

SvgBounds svg_bounds(const JordanConfiguration& j, double pad_fraction = 0.05);
std::string render_svg(const JordanConfiguration& j, const SvgBounds& bounds);

}  // namespace jck
