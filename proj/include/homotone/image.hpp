#pragma once

#include <cstdint>
#include <vector>

namespace homotone {

// Gray-level raster. Samples are raw integers in [0, maxval], row-major;
// computations happen on the unit view sample/maxval in [0,1].
// Immutable by convention once filled in.
struct GrayImage {
    int width = 0;
    int height = 0;
    int maxval = 0;
    std::vector<std::uint16_t> samples;

    std::size_t pixel_count() const noexcept { return samples.size(); }

    // Throws std::invalid_argument when an invariant is broken:
    // width,height >= 1, maxval in [1,65535], samples.size() == width*height,
    // every sample <= maxval.
    void validate() const;
};

// sample/maxval, the one correctly rounded binary division.
double to_unit(int sample, int maxval);

// round(value*maxval) to nearest, ties away from zero, clamped to [0, maxval].
int from_unit(double value, int maxval);

} // namespace homotone
