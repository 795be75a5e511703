#include "stmdf/noise.hpp"

#include <cctype>
#include <cmath>
#include <random>

#include "stmdf/csv.hpp"

namespace stmdf {

namespace {

// 53-bit uniform in [0, 1). mt19937_64's stream is pinned by the standard,
// so the (noisy, mask) pair is identical on every platform.
inline double next_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

InjectionResult inject_salt_pepper(const Image& img, const NoiseSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
        throw InvalidParameter("density out of range [0,1]: " + format_number(spec.density));
    }
    std::mt19937_64 gen(spec.seed);
    std::vector<double> noisy = img.pixels();
    NoiseMask mask{img.width(), img.height(), std::vector<std::uint8_t>(img.size(), 0)};
    const double half = spec.density / 2.0;
    for (std::size_t i = 0; i < noisy.size(); ++i) {
        const double u = next_uniform(gen);
        if (u < half) {
            noisy[i] = kPepperValue;
            mask.flags[i] = 1;
        } else if (u < spec.density) {
            noisy[i] = kSaltValue;
            mask.flags[i] = 1;
        }
    }
    return {Image(img.width(), img.height(), std::move(noisy)), std::move(mask)};
}

std::string write_mask(const NoiseMask& mask) {
    if (mask.width < 1 || mask.height < 1 || mask.flags.size() != mask.width * mask.height) {
        throw InvalidParameter("mask dimensions do not match its flag buffer");
    }
    std::string out = "MASK " + std::to_string(mask.width) + " " + std::to_string(mask.height) +
                      "\n";
    const std::size_t n = mask.flags.size();
    out.reserve(out.size() + (n + 7) / 8);
    std::uint8_t acc = 0;
    int filled = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc = static_cast<std::uint8_t>((acc << 1) | (mask.flags[i] ? 1 : 0));
        if (++filled == 8) {
            out.push_back(static_cast<char>(acc));
            acc = 0;
            filled = 0;
        }
    }
    if (filled > 0) {
        acc = static_cast<std::uint8_t>(acc << (8 - filled));
        out.push_back(static_cast<char>(acc));
    }
    return out;
}

NoiseMask read_mask(std::string_view bytes) {
    constexpr std::string_view magic = "MASK ";
    if (bytes.substr(0, magic.size()) != magic) {
        throw FormatError("unsupported-format: expected MASK header");
    }
    std::size_t pos = magic.size();
    auto read_int = [&]() -> std::size_t {
        if (pos >= bytes.size() || !std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            throw FormatError("corrupt-file: bad mask header");
        }
        std::size_t v = 0;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            v = v * 10 + static_cast<std::size_t>(bytes[pos] - '0');
            if (v > (1u << 30)) throw FormatError("corrupt-file: mask dimension out of range");
            ++pos;
        }
        return v;
    };
    const std::size_t width = read_int();
    if (pos >= bytes.size() || bytes[pos] != ' ') throw FormatError("corrupt-file: bad mask header");
    ++pos;
    const std::size_t height = read_int();
    if (pos >= bytes.size() || bytes[pos] != '\n') throw FormatError("corrupt-file: bad mask header");
    ++pos;
    if (width < 1 || height < 1) throw FormatError("corrupt-file: non-positive mask dimensions");

    const std::size_t n = width * height;
    const std::size_t payload = (n + 7) / 8;
    if (bytes.size() - pos < payload) throw FormatError("corrupt-file: truncated mask payload");
    if (bytes.size() - pos > payload) throw FormatError("corrupt-file: trailing bytes after mask");

    NoiseMask mask{width, height, std::vector<std::uint8_t>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        const auto octet = static_cast<std::uint8_t>(bytes[pos + i / 8]);
        mask.flags[i] = (octet >> (7 - i % 8)) & 1u;
    }
    return mask;
}

NoiseMask read_mask_file(const std::string& path) {
    return read_mask(read_file(path));
}

void write_mask_file(const NoiseMask& mask, const std::string& path) {
    write_file(path, write_mask(mask));
}

std::uint64_t sweep_seed(std::uint64_t base, double density) {
    return base + static_cast<std::uint64_t>(std::llround(1000.0 * density));
}

} // namespace stmdf
