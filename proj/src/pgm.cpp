#include "homotone/pgm.hpp"

#include <cstdio>
#include <optional>
#include <string>

#include "homotone/errors.hpp"

namespace homotone {

namespace {

bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Cursor over the byte stream that skips whitespace and '#' comments while
// scanning for decimal tokens.
class TokenScanner {
public:
    explicit TokenScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Next unsigned decimal token, or nullopt at end of input / on a stray
    // non-digit byte.
    std::optional<std::uint64_t> next_number() {
        skip_separators();
        if (pos_ >= bytes_.size() || bytes_[pos_] < '0' || bytes_[pos_] > '9')
            return std::nullopt;
        std::uint64_t value = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 0xFFFFFFFFull) return std::nullopt; // absurd header field
            ++pos_;
        }
        return value;
    }

    // Consumes the single whitespace byte that ends the header before a P5
    // payload.
    bool consume_one_whitespace() {
        if (pos_ < bytes_.size() && is_space(bytes_[pos_])) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

private:
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

} // namespace

PgmFormat detect_pgm_format(std::span<const std::uint8_t> bytes) {
    if (bytes.size() >= 2 && bytes[0] == 'P') {
        if (bytes[1] == '2') return PgmFormat::P2;
        if (bytes[1] == '5') return PgmFormat::P5;
    }
    throw BadMagic("expected P2 or P5 graymap");
}

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    const PgmFormat format = detect_pgm_format(bytes);

    TokenScanner scan(bytes.subspan(2));
    const auto width = scan.next_number();
    const auto height = scan.next_number();
    const auto maxval = scan.next_number();
    if (!width || !height || !maxval)
        throw HeaderParse("missing or non-numeric width/height/maxval");
    if (*width < 1 || *height < 1 || *width > 1000000 || *height > 1000000)
        throw HeaderParse("bad dimensions " + std::to_string(*width) + "x" +
                          std::to_string(*height));
    if (*maxval < 1 || *maxval > 65535)
        throw MaxvalOutOfRange("maxval " + std::to_string(*maxval) + " outside [1,65535]");

    GrayImage img;
    img.width = static_cast<int>(*width);
    img.height = static_cast<int>(*height);
    img.maxval = static_cast<int>(*maxval);
    const std::uint64_t n = *width * *height;
    // Every sample costs at least one byte in either format, so a payload
    // shorter than n pixels can be rejected before allocating.
    if (n > bytes.size())
        throw Truncated("input holds " + std::to_string(bytes.size()) + " bytes for " +
                        std::to_string(n) + " pixels");
    img.samples.reserve(n);

    if (format == PgmFormat::P2) {
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto s = scan.next_number();
            if (!s)
                throw Truncated("sample " + std::to_string(i) + " of " + std::to_string(n) +
                                " missing");
            if (*s > *maxval)
                throw SampleOutOfRange("sample " + std::to_string(*s) + " exceeds maxval " +
                                       std::to_string(*maxval));
            img.samples.push_back(static_cast<std::uint16_t>(*s));
        }
    } else {
        if (!scan.consume_one_whitespace())
            throw HeaderParse("missing whitespace between header and P5 payload");
        const auto payload = scan.rest();
        const bool wide = *maxval > 255;
        const std::uint64_t need = n * (wide ? 2 : 1);
        if (payload.size() < need)
            throw Truncated("P5 payload holds " + std::to_string(payload.size()) +
                            " bytes, need " + std::to_string(need));
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::uint32_t s =
                wide ? (static_cast<std::uint32_t>(payload[2 * i]) << 8) | payload[2 * i + 1]
                     : payload[i];
            if (s > *maxval)
                throw SampleOutOfRange("sample " + std::to_string(s) + " exceeds maxval " +
                                       std::to_string(*maxval));
            img.samples.push_back(static_cast<std::uint16_t>(s));
        }
    }
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmFormat format) {
    img.validate();

    std::string out = format == PgmFormat::P2 ? "P2\n" : "P5\n";
    out += std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
    out += std::to_string(img.maxval) + "\n";

    if (format == PgmFormat::P2) {
        std::size_t line_len = 0;
        for (std::uint16_t s : img.samples) {
            const std::string tok = std::to_string(s);
            if (line_len == 0) {
                out += tok;
                line_len = tok.size();
            } else if (line_len + 1 + tok.size() <= 70) {
                out += ' ';
                out += tok;
                line_len += 1 + tok.size();
            } else {
                out += '\n';
                out += tok;
                line_len = tok.size();
            }
        }
        out += '\n';
        return {out.begin(), out.end()};
    }

    std::vector<std::uint8_t> bytes(out.begin(), out.end());
    const bool wide = img.maxval > 255;
    bytes.reserve(bytes.size() + img.samples.size() * (wide ? 2 : 1));
    for (std::uint16_t s : img.samples) {
        if (wide) bytes.push_back(static_cast<std::uint8_t>(s >> 8));
        bytes.push_back(static_cast<std::uint8_t>(s & 0xFF));
    }
    return bytes;
}

} // namespace homotone
