#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "harmtri/errors.hpp"

namespace harmtri {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// h(z) = a z^(n+m) + b conj(z)^m + c with n, m >= 1 coprime and a != 0.
struct HarmonicTrinomial {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    int n = 1;
    int m = 1;
};

struct Tolerances {
    double residual = 1e-10;       // max |h(z)| accepted at a root (scaled)
    double modulus_group = 1e-7;   // moduli closer than this are one group
    double angular = 1e-9;         // radians, ray membership
    double boundary_band = 1e-8;   // relative exclusion band around breakpoints
};

inline bool finite_complex(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Argument in [0, 2*pi).
inline double arg_2pi(Complex z) {
    double t = std::arg(z);
    if (t < 0) t += kTwoPi;
    if (t >= kTwoPi) t = 0;  // guard against -0 rounding up
    return t;
}

// Integer power by repeated multiplication; exact for the small exponents
// used here and avoids pow() branch cuts.
inline Complex cpow_int(Complex z, int k) {
    Complex r{1.0, 0.0};
    Complex base = z;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

inline void validate(const HarmonicTrinomial& h) {
    if (!finite_complex(h.a) || !finite_complex(h.b) || !finite_complex(h.c))
        throw ValidationError("coefficients must be finite");
    if (h.n < 1 || h.m < 1)
        throw ValidationError("exponents n and m must be >= 1");
    if (std::gcd(h.n, h.m) != 1)
        throw ValidationError("exponents n and m must be coprime (gcd(n,m) = 1)");
    if (h.a == Complex{0.0, 0.0})
        throw ValidationError("leading coefficient a must be nonzero");
}

inline HarmonicTrinomial make_trinomial(Complex a, Complex b, Complex c, int n, int m) {
    HarmonicTrinomial h{a, b, c, n, m};
    validate(h);
    return h;
}

inline Complex eval(const HarmonicTrinomial& h, Complex z) {
    return h.a * cpow_int(z, h.n + h.m) + h.b * cpow_int(std::conj(z), h.m) + h.c;
}

}  // namespace harmtri
