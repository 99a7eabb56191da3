#pragma once

#include <filesystem>
#include <string>

#include "simpson/decomposition.hpp"

namespace simpson {

/// Two-panel SVG (800 x 400 user units) of one elementary split: the treated
/// arm on the left, the control arm on the right. Each panel draws the
/// parent ray (labelled with theta0/eta0), the inner child ray from the
/// origin, and the outer child from the inner tip to the parent tip, with
/// arcs for the two chosen child angles. Output depends only on `q`.
std::string render_decomposition_svg(const Quadruple& q);

/// Validates and decomposes before touching `out`, so a rejected quadruple
/// never leaves a file behind.
void render_decomposition(const Quadruple& q, const std::filesystem::path& out);

}  // namespace simpson
