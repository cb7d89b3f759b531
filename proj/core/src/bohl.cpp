#include "harmtri/bohl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace harmtri {

namespace {

double dist_to_int(double x) { return std::abs(x - std::round(x)); }

bool near_int(double x, double eps = 1e-12) { return dist_to_int(x) <= eps; }

double frac(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;
    return f;
}

struct Window {
    double lo = 0, hi = 0;
    double val_lo = 0, val_hi = 0;  // exact w_star values at the breakpoints
};

std::vector<Window> triangle_windows(const TriangleProfile& p, int n, int m) {
    const double top = 0.5 * (n + m);
    const double mid = -0.5 * m;
    std::vector<Window> w;
    switch (p.kind) {
        case BRadiiKind::none:
            w.push_back({p.c_radius, p.a_radius, 0.0, top});
            break;
        case BRadiiKind::double_root:
            w.push_back({p.c_radius, p.b1, 0.0, mid});
            w.push_back({p.b1, p.a_radius, mid, top});
            break;
        case BRadiiKind::pair:
            w.push_back({p.c_radius, p.b1, 0.0, mid});
            w.push_back({p.b2, p.a_radius, mid, top});
            break;
    }
    return w;
}

// Integer levels k + phi strictly between y0 and y1. Levels within eps of
// either endpoint are excluded; breakpoint roots are added separately.
long levels_between(double y0, double y1, double phi, double eps = 1e-12) {
    double lo = std::min(y0, y1) - phi;
    double hi = std::max(y0, y1) - phi;
    double kmin = std::ceil(lo + eps);
    double kmax = std::floor(hi - eps);
    if (kmax < kmin) return 0;
    return static_cast<long>(kmax - kmin) + 1;
}

struct Family {
    double phi = 0;  // levels are {k + phi : k integer}
    int weight = 1;  // 2 when the two congruence families coincide
};

std::vector<Family> level_families(double p_star) {
    if (near_int(2 * p_star)) return {{frac(p_star), 2}};
    return {{frac(p_star), 1}, {frac(-p_star), 1}};
}

template <class F>
long polyline_crossings(F&& f, double lo, double hi, double v0, double v1,
                        const std::vector<Family>& fams, int samples) {
    long total = 0;
    double prev = v0;
    for (int i = 0; i < samples; ++i) {
        double u = lo + (hi - lo) * (i + 0.5) / samples;
        double y = f(u);
        for (const Family& fam : fams) total += fam.weight * levels_between(prev, y, fam.phi);
        prev = y;
    }
    for (const Family& fam : fams) total += fam.weight * levels_between(prev, v1, fam.phi);
    return total;
}

template <class F>
double golden_min(F&& f, double a, double b) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-12 * std::max(1.0, std::abs(b))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2);
        }
    }
    return f(0.5 * (a + b));
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::CDominant: return "c_dominant";
        case Regime::ADominant: return "a_dominant";
        case Regime::BDominant: return "b_dominant";
        case Regime::Triangle: return "triangle";
        case Regime::DegenerateBoundary: return "degenerate_boundary";
    }
    return "?";
}

Regime regime(const HarmonicTrinomial& h, double v, const Tolerances& tol) {
    SideLengths s = side_lengths(h, v);
    const double band = tol.boundary_band * (s.sA + s.sB + s.sC);
    const double dA = s.sA - s.sB - s.sC;
    const double dB = -s.sA + s.sB - s.sC;
    const double dC = -s.sA - s.sB + s.sC;
    if (std::abs(dA) <= band || std::abs(dB) <= band || std::abs(dC) <= band)
        return Regime::DegenerateBoundary;
    if (dC > 0) return Regime::CDominant;
    if (dA > 0) return Regime::ADominant;
    if (dB > 0) return Regime::BDominant;
    return Regime::Triangle;
}

std::optional<int> regime_count(const HarmonicTrinomial& h, double v, const Tolerances& tol) {
    switch (regime(h, v, tol)) {
        case Regime::CDominant: return 0;
        case Regime::ADominant: return h.n + 3 * h.m;
        case Regime::BDominant: return h.m;
        default: return std::nullopt;
    }
}

double pivot(const HarmonicTrinomial& h) {
    if (h.b == Complex{0, 0} || h.c == Complex{0, 0})
        throw DegenerateCoefficientError("pivot needs nonzero a, b and c");
    const double alpha = arg_2pi(h.a), beta = arg_2pi(h.b), gamma = arg_2pi(h.c);
    // grouped so that the all-real-positive case divides out exactly
    return ((h.n + h.m) * (beta - gamma) + h.m * (alpha - gamma) - (h.n + 2 * h.m) * kPi) /
           kTwoPi;
}

double w_star(const HarmonicTrinomial& h, double v) {
    if (h.b == Complex{0, 0} || h.c == Complex{0, 0})
        throw DegenerateCoefficientError("w_star needs nonzero b and c");
    SideLengths s = side_lengths(h, v);
    const double dA = s.sA - s.sB - s.sC;
    const double dB = -s.sA + s.sB - s.sC;
    const double dC = -s.sA - s.sB + s.sC;
    if (dC >= 0) return 0.0;
    if (dA >= 0) return 0.5 * (h.n + h.m);
    if (dB >= 0) return -0.5 * h.m;
    auto cacos = [](double x) { return std::acos(std::clamp(x, -1.0, 1.0)); };
    double w1 = cacos((s.sB * s.sB + s.sC * s.sC - s.sA * s.sA) / (2 * s.sB * s.sC));
    double w2 = cacos((s.sA * s.sA + s.sC * s.sC - s.sB * s.sB) / (2 * s.sA * s.sC));
    return ((h.n + h.m) * w1 - h.m * w2) / kTwoPi;
}

Interval w_star_range(const HarmonicTrinomial& h, double v, const Tolerances& tol) {
    if (!(v > 0)) throw ValidationError("radius v must be positive");
    if (h.b == Complex{0, 0} || h.c == Complex{0, 0})
        throw DegenerateCoefficientError("w_star_range needs nonzero b and c");

    TriangleProfile p = triangle_profile(h, tol);
    auto f = [&](double u) { return w_star(h, u); };

    Interval r{0.0, 0.0};  // w_star == 0 on (0, c_radius], always swept
    auto consider = [&r](double y) {
        r.lo = std::min(r.lo, y);
        r.hi = std::max(r.hi, y);
    };

    const int N = 4096;
    for (const Window& w : triangle_windows(p, h.n, h.m)) {
        if (v <= w.lo) continue;
        double hi = std::min(w.hi, v);
        consider(w.val_lo);
        consider(v >= w.hi ? w.val_hi : f(v));
        std::vector<double> us(N), ys(N);
        for (int i = 0; i < N; ++i) {
            us[i] = w.lo + (hi - w.lo) * (i + 0.5) / N;
            ys[i] = f(us[i]);
            consider(ys[i]);
        }
        // refine strict interior extrema
        for (int i = 1; i + 1 < N; ++i) {
            if (ys[i] < ys[i - 1] && ys[i] < ys[i + 1])
                consider(golden_min(f, us[i - 1], us[i + 1]));
            else if (ys[i] > ys[i - 1] && ys[i] > ys[i + 1])
                consider(-golden_min([&](double u) { return -f(u); }, us[i - 1], us[i + 1]));
        }
    }
    return r;
}

PivotData pivot_data(const HarmonicTrinomial& h, double v, const Tolerances& tol) {
    return {pivot(h), w_star(h, v), w_star_range(h, v, tol)};
}

int count_roots_below(const HarmonicTrinomial& h, double v, const Tolerances& tol) {
    validate(h);
    if (!(v > 0)) throw ValidationError("radius v must be positive");
    if (h.b == Complex{0, 0} || h.c == Complex{0, 0})
        throw DegenerateCoefficientError("count_roots_below needs b != 0 and c != 0");

    const int n = h.n, m = h.m;
    const double band = tol.boundary_band;
    const TriangleProfile p = triangle_profile(h, tol);

    const double P = pivot(h);
    const bool c_cong = near_int(P);
    const bool b_cong = near_int(P + 0.5 * m);
    const bool a_cong = near_int(P + 0.5 * (n + m));

    auto boundary = [&](const char* what, double center) -> OnBoundaryError {
        double off = 10 * band * center;
        return OnBoundaryError(what, v, center - off, center + off);
    };

    if (p.kind != BRadiiKind::none) {
        if (std::abs(v - p.b1) <= band * p.b1)
            throw boundary("v lies in the exclusion band around breakpoint b1", p.b1);
        if (std::abs(v - p.b2) <= band * p.b2)
            throw boundary("v lies in the exclusion band around breakpoint b2", p.b2);
    }
    if (c_cong && std::abs(v - p.c_radius) <= band * p.c_radius)
        throw boundary("v lies in the band around the root circle at c_radius", p.c_radius);
    if (a_cong && std::abs(v - p.a_radius) <= band * p.a_radius)
        throw boundary("v lies in the band around the root circle at a_radius", p.a_radius);

    if (v <= p.c_radius) return 0;
    if (p.kind == BRadiiKind::pair && v > p.b1 && v < p.b2) return m;

    auto f = [&](double u) { return w_star(h, u); };
    const std::vector<Family> fams = level_families(P);
    const std::vector<Window> wins = triangle_windows(p, n, m);

    auto crossings_at = [&](int N) {
        long total = 0;
        for (const Window& w : wins) {
            if (v <= w.lo) continue;
            double hi = std::min(w.hi, v);
            double v1 = (v >= w.hi) ? w.val_hi : f(v);
            total += polyline_crossings(f, w.lo, hi, w.val_lo, v1, fams, N);
        }
        return total;
    };

    long cross = crossings_at(4096);
    for (int N = 8192; N <= 32768; N *= 2) {
        long again = crossings_at(N);
        if (again == cross) break;
        cross = again;
        if (N == 32768)
            throw NoConvergenceError("level crossing count did not stabilize under refinement");
    }

    // refuse a v that sits within the band of an interior root modulus
    for (const Window& w : wins) {
        if (v <= w.lo || v >= w.hi) continue;
        double u0 = std::max(w.lo, v * (1 - 2 * band));
        double u1 = std::min(w.hi, v * (1 + 2 * band));
        double y0 = f(u0), ym = f(v), y1 = f(u1);
        double ylo = std::min({y0, ym, y1}) - 1e-12;
        double yhi = std::max({y0, ym, y1}) + 1e-12;
        for (const Family& fam : fams) {
            if (std::floor(yhi - fam.phi) >= std::ceil(ylo - fam.phi))
                throw boundary("v lies in the band around a root modulus", v);
        }
    }

    long total = cross;
    if (c_cong && p.c_radius < v) total += 1;
    if (b_cong) {
        if (p.kind == BRadiiKind::pair) {
            if (p.b1 < v) total += 1;
            if (p.b2 < v) total += 1;
        } else if (p.kind == BRadiiKind::double_root && p.b1 < v) {
            total += 1;  // one point: the breakpoint root is a single double root
        }
    }
    if (a_cong && p.a_radius < v) total += 1;
    return static_cast<int>(total);
}

}  // namespace harmtri
