#pragma once
// Deterministic SVG output on a fixed 1000x1000 viewport.

#include <string>
#include <vector>

#include "strebel/ribbon.hpp"
#include "strebel/trajectory.hpp"

namespace strebel {

struct SvgScene {
    std::vector<std::vector<cd>> polylines;  // trajectories
    std::vector<cd> dots;                    // zeros and other critical points
    std::vector<cd> circles;                 // poles
};
std::string render_svg(const SvgScene& scene);

// catalog graph drawn with cubic edges leaving each vertex at its stored angle
std::string render_drawing(const Drawing& d);

}  // namespace strebel
