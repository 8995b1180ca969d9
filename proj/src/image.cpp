#include "homotone/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace homotone {

void GrayImage::validate() const {
    if (width < 1 || height < 1)
        throw std::invalid_argument("GrayImage: dimensions must be at least 1x1, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    if (maxval < 1 || maxval > 65535)
        throw std::invalid_argument("GrayImage: maxval " + std::to_string(maxval) +
                                    " outside [1,65535]");
    const std::size_t expected =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (samples.size() != expected)
        throw std::invalid_argument("GrayImage: " + std::to_string(samples.size()) +
                                    " samples for " + std::to_string(expected) + " pixels");
    for (std::uint16_t s : samples)
        if (s > maxval)
            throw std::invalid_argument("GrayImage: sample " + std::to_string(s) +
                                        " exceeds maxval " + std::to_string(maxval));
}

double to_unit(int sample, int maxval) {
    return static_cast<double>(sample) / static_cast<double>(maxval);
}

int from_unit(double value, int maxval) {
    const double r = std::round(value * static_cast<double>(maxval));
    if (r <= 0.0) return 0;
    if (r >= static_cast<double>(maxval)) return maxval;
    return static_cast<int>(r);
}

} // namespace homotone
