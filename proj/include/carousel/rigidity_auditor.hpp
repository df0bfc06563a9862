#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "carousel/period_engine.hpp"

namespace carousel {

struct PerimeterBounds {
    double low = 0.0;  // inscribed hexagon perimeter 12
    double high = 0.0; // circumference of the enclosing disk, 2 pi (1 + sqrt2)
};

PerimeterBounds perimeter_bounds();

struct PeriodBounds {
    double low = kPeriodLowerBound;
    double high = kPeriodUpperBound;
};

// Rotation-symmetry record of a hypothetical closed noncircular body: the
// rotation group has even order 2k (central symmetry), basic angle pi/k, and
// the rotation is realized by the boundary shift eta = P/(2k), itself an
// integer multiple m of the radius period.
struct SymmetryData {
    int k = 1;
    int m = 1;
    double sigma = 0.0;     // basic rotation angle, pi / k
    double eta = 0.0;       // arc-length shift realizing it, P / (2k)
    double perimeter = 0.0;

    double implied_period() const { return eta / m; }  // T with eta = m T
};

SymmetryData make_symmetry_data(int k, int m, double perimeter);

// One (k, m) candidate: 2k is the rotation-group order, m the multiple of the
// orbit period in the rotation shift P/(2k).
struct FeasibilityRow {
    int k = 0;
    int m = 0;
    double required_low = 0.0;  // P/(2km) over the perimeter interval
    double required_high = 0.0;
    double allowed_low = 0.0;   // the open period window
    double allowed_high = 0.0;
    bool feasible = false;
    std::string reason;
};

// Interval check of T = P/(2km) against the period window for every candidate
// pair; a closed noncircular body would need at least one feasible row.
std::vector<FeasibilityRow> feasibility_scan(int k_max, int m_max, PeriodBounds bounds = {});

struct QuantizationMatch {
    int k = 0;
    int m = 0;
    double residual = 0.0; // |2 k m T - P|
    // Every pair achieving the minimal residual; the reported (k, m) is the
    // tie with the largest k.
    std::vector<std::pair<int, int>> ties;
};

// Best integer pair with 2 k m T close to P, within 1e-6 * P; nullopt if none.
std::optional<QuantizationMatch> period_quantization_check(double t, double p, int k_max,
                                                           int m_max);

struct MonotonicityRow {
    EnergyLevel h = 0.0;
    double t = 0.0;
    int dt_sign = 0; // sign of T_i - T_{i-1}; 0 on the first row
};

// Observational table of successive period differences; never an assertion.
std::vector<MonotonicityRow> monotonicity_scan(std::span<const double> h_grid);

}  // namespace carousel
