#include "harmtri/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace harmtri {

SideLengths side_lengths(const HarmonicTrinomial& h, double v) {
    if (!(v > 0)) throw ValidationError("radius v must be positive");
    SideLengths s;
    s.sA = std::abs(h.a) * std::pow(v, h.n + h.m);
    s.sB = std::abs(h.b) * std::pow(v, h.m);
    s.sC = std::abs(h.c);
    return s;
}

RadialValues radial_polynomials(const HarmonicTrinomial& h, double v) {
    SideLengths s = side_lengths(h, v);
    return {s.sA - s.sB - s.sC, -s.sA + s.sB - s.sC, -s.sA - s.sB + s.sC};
}

namespace {

// Bisection to relative width 1e-14 on [lo, hi]; f(lo) and f(hi) must have
// opposite signs (f(lo) taken as reference). Returns the midpoint.
template <class F>
double bisect(F f, double lo, double hi, double rel = 1e-14) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel * mid) return mid;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0) == (fm < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TriangleProfile triangle_profile(const HarmonicTrinomial& h, const Tolerances& tol) {
    if (h.b == Complex{0, 0} || h.c == Complex{0, 0})
        throw DegenerateCoefficientError("triangle_profile needs b != 0 and c != 0");

    const double aa = std::abs(h.a), ab = std::abs(h.b), ac = std::abs(h.c);
    const int n = h.n, m = h.m;

    auto Af = [&](double v) { return aa * std::pow(v, n + m) - ab * std::pow(v, m) - ac; };
    auto Cf = [&](double v) { return -aa * std::pow(v, n + m) - ab * std::pow(v, m) + ac; };
    auto Bf = [&](double v) { return -aa * std::pow(v, n + m) + ab * std::pow(v, m) - ac; };

    TriangleProfile p;

    // C decreases from |c| at 0+ to -inf; unique positive root.
    {
        double hi = 1.0;
        while (Cf(hi) > 0) hi *= 2;
        double lo = hi;
        while (Cf(lo) <= 0) lo *= 0.5;
        p.c_radius = bisect(Cf, lo, hi);
    }

    // A goes from -|c| at 0+ to +inf; unique positive root.
    {
        double lo = 1.0;
        while (Af(lo) > 0) lo *= 0.5;
        double hi = lo;
        while (Af(hi) <= 0) hi *= 2;
        p.a_radius = bisect(Af, lo, hi);
    }

    // B is unimodal with peak at b_peak.
    p.b_peak = std::pow(double(m) * ab / ((n + m) * aa), 1.0 / n);
    double Bpk = Bf(p.b_peak);
    double sA_pk = aa * std::pow(p.b_peak, n + m);
    if (std::abs(Bpk) <= tol.residual * std::max(1.0, sA_pk)) {
        p.kind = BRadiiKind::double_root;
        p.b1 = p.b2 = p.b_peak;
    } else if (Bpk < 0) {
        p.kind = BRadiiKind::none;
    } else {
        p.kind = BRadiiKind::pair;
        // B < 0 at both c_radius and a_radius: B(cr) = -2 sA(cr), B(ar) = -2 sC.
        p.b1 = bisect(Bf, p.c_radius, p.b_peak);
        p.b2 = bisect(Bf, p.b_peak, p.a_radius);
    }
    return p;
}

std::pair<double, double> angles_from_sides(double sA, double sB, double sC,
                                            const Tolerances& tol) {
    const double scale = sA + sB + sC;
    const double band = tol.boundary_band * scale;
    const double dA = sA - sB - sC;
    const double dB = -sA + sB - sC;
    const double dC = -sA - sB + sC;
    if (dA > band || dB > band || dC > band)
        throw NotATriangleError("side lengths violate a triangle inequality");
    if (std::abs(dA) <= band || std::abs(dB) <= band || std::abs(dC) <= band)
        throw DegenerateTriangleError("side lengths form a degenerate triangle");

    auto clamped_acos = [](double x) { return std::acos(std::clamp(x, -1.0, 1.0)); };
    double w1 = clamped_acos((sB * sB + sC * sC - sA * sA) / (2 * sB * sC));
    double w2 = clamped_acos((sA * sA + sC * sC - sB * sB) / (2 * sA * sC));
    return {w1, w2};
}

std::pair<double, double> triangle_angles(const HarmonicTrinomial& h, double v,
                                          const Tolerances& tol) {
    SideLengths s = side_lengths(h, v);
    return angles_from_sides(s.sA, s.sB, s.sC, tol);
}

}  // namespace harmtri
