#pragma once

#include <string>
#include <vector>

namespace carousel {

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
};

// "lo:hi:count" or a single "v" (one-point grid). Throws std::invalid_argument.
GridSpec parse_grid(const std::string& text);

// Comma-separated doubles, e.g. "2.45,2.5,2.55".
std::vector<double> parse_levels(const std::string& text);

struct ClampedGrid {
    std::vector<double> values;
    bool clamped = false;
};

// Clamps the grid into the open energy window (margin 1e-8) and reports
// whether clamping happened so callers can warn.
ClampedGrid clamped_energy_grid(const GridSpec& spec);

// Fixed numeric formats shared by the CSV/JSON emitters.
std::string fmt(double v);                  // %.15g
std::string fmt_fixed(double v, int prec);  // %.*f

}  // namespace carousel
