#pragma once

#include <string>

#include "homotone/statistics.hpp"
#include "homotone/transfer.hpp"

namespace homotone {

// "level,count" header then one line per bin. LF endings throughout.
std::string histogram_csv(const Histogram& h);

// "x,g" header then `samples` rows uniformly spaced on [x1, x2] inclusive,
// reals at 17 significant digits. Requires samples >= 2.
std::string curve_csv(const TransferFunction& t, int samples);

// Standalone 512x512 SVG: a 256-sample polyline of the curve over the unit
// square (origin bottom-left) and a circle marker on each of the four
// interpolation nodes.
std::string curve_svg(const TransferFunction& t);

// Standalone 512x512 SVG bar chart; the tallest bin spans the full height.
// Only nonzero bins emit a bar.
std::string histogram_svg(const Histogram& h);

} // namespace homotone
