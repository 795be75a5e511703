#include "stmdf/pgm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "stmdf/csv.hpp"

namespace stmdf {

namespace {

// Cursor over the header bytes; comments run from '#' to end of line.
struct HeaderScanner {
    std::string_view bytes;
    std::size_t pos = 0;

    void skip_space_and_comments() {
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    long next_int() {
        skip_space_and_comments();
        if (pos >= bytes.size()) {
            throw FormatError("corrupt-file: header ended before all fields were read");
        }
        if (!std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            throw FormatError("corrupt-file: non-numeric header token");
        }
        long value = 0;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            value = value * 10 + (bytes[pos] - '0');
            if (value > 1L << 30) throw FormatError("corrupt-file: header value out of range");
            ++pos;
        }
        return value;
    }
};

} // namespace

Image read_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        throw FormatError("unsupported-format: expected PGM magic P5 or P2");
    }
    const bool binary = bytes[1] == '5';
    HeaderScanner scan{bytes, 2};
    const long width = scan.next_int();
    const long height = scan.next_int();
    const long maxval = scan.next_int();
    if (width < 1 || height < 1) {
        throw FormatError("corrupt-file: non-positive image dimensions");
    }
    if (maxval != 255) {
        throw FormatError("unsupported-depth: maxval must be 255, got " + std::to_string(maxval));
    }

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<double> pixels(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        if (scan.pos >= bytes.size() ||
            !std::isspace(static_cast<unsigned char>(bytes[scan.pos]))) {
            throw FormatError("corrupt-file: missing raster separator");
        }
        ++scan.pos;
        if (bytes.size() - scan.pos < count) {
            throw FormatError("corrupt-file: truncated raster");
        }
        for (std::size_t i = 0; i < count; ++i) {
            pixels[i] = static_cast<double>(static_cast<std::uint8_t>(bytes[scan.pos + i]));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            long v;
            try {
                v = scan.next_int();
            } catch (const FormatError&) {
                throw FormatError("corrupt-file: truncated or non-numeric raster");
            }
            if (v > maxval) throw FormatError("corrupt-file: sample exceeds maxval");
            pixels[i] = static_cast<double>(v);
        }
    }
    return Image(static_cast<std::size_t>(width), static_cast<std::size_t>(height),
                 std::move(pixels));
}

std::string write_pgm(const Image& img) {
    std::string out = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) +
                      "\n255\n";
    out.reserve(out.size() + img.size());
    for (double v : img.pixels()) {
        const double r = std::round(v); // half away from zero
        const double c = r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r);
        out.push_back(static_cast<char>(static_cast<std::uint8_t>(c)));
    }
    return out;
}

Image read_pgm_file(const std::string& path) {
    return read_pgm(read_file(path));
}

void write_pgm_file(const Image& img, const std::string& path) {
    write_file(path, write_pgm(img));
}

} // namespace stmdf
