#include "carousel/cli_config.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "carousel/scalar_kernel.hpp"
#include "carousel/scan.hpp"

namespace carousel {

namespace {

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != text.size()) {
        throw std::invalid_argument("trailing characters in number: '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() == 1) {
        const double v = parse_double(parts[0]);
        return {v, v, 1};
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("grid must be lo:hi:count or a single value, got '" + text +
                                    "'");
    }
    GridSpec spec;
    spec.lo = parse_double(parts[0]);
    spec.hi = parse_double(parts[1]);
    const double count = parse_double(parts[2]);
    spec.count = static_cast<int>(count);
    if (spec.count < 1 || spec.count != count) {
        throw std::invalid_argument("grid count must be a positive integer, got '" + parts[2] +
                                    "'");
    }
    if (!(spec.lo <= spec.hi)) {
        throw std::invalid_argument("grid needs lo <= hi, got '" + text + "'");
    }
    return spec;
}

std::vector<double> parse_levels(const std::string& text) {
    std::vector<double> levels;
    for (const std::string& part : split(text, ',')) {
        levels.push_back(parse_double(part));
    }
    if (levels.empty()) {
        throw std::invalid_argument("empty level list");
    }
    return levels;
}

ClampedGrid clamped_energy_grid(const GridSpec& spec) {
    constexpr double kMargin = 1e-8;
    ClampedGrid out;
    double lo = spec.lo;
    double hi = spec.hi;
    const double floor = kOrbitEnergyMin + kMargin;
    const double ceil = kOrbitEnergyMax - kMargin;
    if (lo < floor) {
        lo = floor;
        out.clamped = true;
    }
    if (hi > ceil) {
        hi = ceil;
        out.clamped = true;
    }
    if (lo > hi) {
        lo = hi = std::clamp(0.5 * (spec.lo + spec.hi), floor, ceil);
        out.clamped = true;
    }
    out.values = scan::energy_grid(lo, hi, spec.count);
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string fmt_fixed(double v, int prec) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

}  // namespace carousel
