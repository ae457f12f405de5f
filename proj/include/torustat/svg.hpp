#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>

namespace torustat {

/// Rose diagram: one filled sector per bin over [0, 2 pi), petal radius
/// proportional to sqrt(count) so area tracks frequency. Static markup,
/// no scripting.
std::string rose_svg(std::span<const std::size_t> counts, double size_px = 420.0);

/// QQ scatter with the identity line; pairs are (observed, predicted) in a
/// common unit, axes run from 0 to axis_max.
std::string qq_svg(std::span<const std::pair<double, double>> pairs, double axis_max,
                   double size_px = 420.0);

}  // namespace torustat
