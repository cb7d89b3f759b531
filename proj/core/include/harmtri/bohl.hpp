#pragma once

#include <optional>

#include "harmtri/triangle.hpp"

namespace harmtri {

enum class Regime { CDominant, ADominant, BDominant, Triangle, DegenerateBoundary };

const char* regime_name(Regime r);

// Dominance classification of the side lengths at radius v, with a
// relative boundary band around the equality cases.
Regime regime(const HarmonicTrinomial& h, double v, const Tolerances& tol = {});

// Exact count for the three dominance regimes (0, n+3m, m); nullopt when
// v lies in the triangle region or on a boundary. Note the ADominant value
// n+3m is the maximal case; see count_roots_below for the computed count.
std::optional<int> regime_count(const HarmonicTrinomial& h, double v,
                                const Tolerances& tol = {});

// P* = ((n+m)(beta-gamma-pi) + m(alpha-gamma-pi)) / (2 pi), args in [0, 2pi).
double pivot(const HarmonicTrinomial& h);

// Continuous angle function: ((n+m) w1 - m w2) / (2 pi) inside the triangle
// region, with plateaus 0 / -m/2 / (n+m)/2 in the C / B / A dominance zones.
double w_star(const HarmonicTrinomial& h, double v);

struct Interval {
    double lo = 0;
    double hi = 0;
};

// inf and sup of w_star over u in (0, v).
Interval w_star_range(const HarmonicTrinomial& h, double v, const Tolerances& tol = {});

struct PivotData {
    double p_star = 0;
    double w_star_at_v = 0;
    Interval w_range;
};

PivotData pivot_data(const HarmonicTrinomial& h, double v, const Tolerances& tol = {});

// Number of distinct roots with modulus < v. Counts every integer level
// crossing of w_star against the families P* - k and k - P* inside the
// triangle windows, plus the breakpoint roots at c_radius / b_j / a_radius
// when their congruence fires. Throws OnBoundaryError when v sits within
// the boundary band of a b_j breakpoint or of a root modulus.
int count_roots_below(const HarmonicTrinomial& h, double v, const Tolerances& tol = {});

}  // namespace harmtri
