#include "carousel/rigidity_auditor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace carousel {

PerimeterBounds perimeter_bounds() {
    return {12.0, 2.0 * kPi * (1.0 + std::sqrt(2.0))};
}

namespace {

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

SymmetryData make_symmetry_data(int k, int m, double perimeter) {
    if (k < 1 || m < 1 || !(perimeter > 0.0)) {
        throw std::invalid_argument("make_symmetry_data: need k, m >= 1 and perimeter > 0");
    }
    SymmetryData data;
    data.k = k;
    data.m = m;
    data.sigma = kPi / k;
    data.eta = perimeter / (2.0 * k);
    data.perimeter = perimeter;
    return data;
}

std::vector<FeasibilityRow> feasibility_scan(int k_max, int m_max, PeriodBounds bounds) {
    if (k_max < 1 || m_max < 1) {
        throw std::invalid_argument("feasibility_scan: need k_max, m_max >= 1");
    }
    const PerimeterBounds p = perimeter_bounds();
    std::vector<FeasibilityRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max) * m_max);
    for (int k = 1; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            FeasibilityRow row;
            row.k = k;
            row.m = m;
            const double quantum = 2.0 * k * m;
            row.required_low = p.low / quantum;
            row.required_high = p.high / quantum;
            row.allowed_low = bounds.low;
            row.allowed_high = bounds.high;
            // Closed required interval vs open allowed window.
            row.feasible =
                row.required_low < row.allowed_high && row.required_high > row.allowed_low;
            if (row.feasible) {
                row.reason = "required interval [" + fixed6(row.required_low) + ", " +
                             fixed6(row.required_high) + "] overlaps the period window";
            } else if (row.required_low >= row.allowed_high) {
                row.reason = "required T >= " + fixed6(row.required_low) +
                             " exceeds allowed T < " + fixed6(row.allowed_high);
            } else {
                row.reason = "required T <= " + fixed6(row.required_high) +
                             " below allowed T > " + fixed6(row.allowed_low);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::optional<QuantizationMatch> period_quantization_check(double t, double p, int k_max,
                                                           int m_max) {
    if (!(t > 0.0) || !(p > 0.0)) {
        throw std::invalid_argument("period_quantization_check: need T > 0 and P > 0");
    }
    double best = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            best = std::min(best, std::abs(2.0 * k * m * t - p));
        }
    }
    if (!(best <= 1e-6 * p)) {
        return std::nullopt;
    }
    QuantizationMatch match;
    match.residual = best;
    for (int k = 1; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            if (std::abs(2.0 * k * m * t - p) <= best + 1e-12 * p) {
                match.ties.emplace_back(k, m);
            }
        }
    }
    // Prefer the finer rotation symmetry among ties.
    for (const auto& [k, m] : match.ties) {
        if (k > match.k || (k == match.k && m > match.m)) {
            match.k = k;
            match.m = m;
        }
    }
    return match;
}

std::vector<MonotonicityRow> monotonicity_scan(std::span<const double> h_grid) {
    std::vector<MonotonicityRow> rows;
    rows.reserve(h_grid.size());
    double prev_t = 0.0;
    for (std::size_t i = 0; i < h_grid.size(); ++i) {
        if (i > 0 && !(h_grid[i] > h_grid[i - 1])) {
            throw std::invalid_argument("monotonicity_scan: grid must be strictly increasing");
        }
        const double t = period(h_grid[i]).t;
        MonotonicityRow row;
        row.h = h_grid[i];
        row.t = t;
        if (i > 0) {
            row.dt_sign = t > prev_t ? 1 : (t < prev_t ? -1 : 0);
        }
        prev_t = t;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace carousel
