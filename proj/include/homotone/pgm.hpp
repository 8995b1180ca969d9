#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homotone/image.hpp"

namespace homotone {

enum class PgmFormat { P2, P5 };

// Peeks at the magic without a full parse. Throws BadMagic.
PgmFormat detect_pgm_format(std::span<const std::uint8_t> bytes);

// Parses P2 (ASCII) or P5 (binary) graymaps. Header comments ('#' to end of
// line) are skipped anywhere before the sample data; P5 samples with
// maxval > 255 are big-endian 16-bit. Throws BadMagic, HeaderParse,
// MaxvalOutOfRange, SampleOutOfRange, Truncated.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Serializes bit-exactly: header "Pn\n<w> <h>\n<maxval>\n", then samples.
// P2 lines stay within 70 characters; P5 uses big-endian 16-bit words when
// maxval > 255. read_pgm(write_pgm(img, f)) reproduces img exactly.
std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmFormat format);

} // namespace homotone
