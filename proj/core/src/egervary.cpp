#include "harmtri/egervary.hpp"

#include <cmath>

#include "harmtri/errors.hpp"

namespace harmtri {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// distance from x to the nearest multiple of 2pi
double mod_2pi_defect(double x) { return std::abs(std::remainder(x, kTwoPi)); }

}  // namespace

EquivalenceWitness is_equivalent(const HarmonicTrinomial& h1, const HarmonicTrinomial& h2,
                                 const Tolerances& tol) {
    validate(h1);
    validate(h2);
    if (h1.n != h2.n || h1.m != h2.m)
        throw ExponentMismatchError("equivalence needs matching exponents (n, m)");
    if (h1.b == Complex{0, 0} || h1.c == Complex{0, 0})
        throw DegenerateCoefficientError("equivalence needs all six coefficients nonzero");
    if (h2.b == Complex{0, 0} || h2.c == Complex{0, 0})
        throw DegenerateCoefficientError("equivalence needs all six coefficients nonzero");

    const double ra = std::abs(h1.a) / std::abs(h2.a);
    const double rb = std::abs(h1.b) / std::abs(h2.b);
    const double rc = std::abs(h1.c) / std::abs(h2.c);
    const double rhi = std::max({ra, rb, rc});
    const double rlo = std::min({ra, rb, rc});
    const bool ratio_ok = (rhi - rlo) <= 1e-9 * rhi;

    const double nm = static_cast<double>(h1.n + h1.m);
    const double mm = static_cast<double>(h1.m);
    const double n2m = static_cast<double>(h1.n + 2 * h1.m);

    const double a1 = std::arg(h1.a), b1 = std::arg(h1.b), c1 = std::arg(h1.c);
    const double a2 = std::arg(h2.a), b2 = std::arg(h2.b), c2 = std::arg(h2.c);

    const double direct_defect =
        mod_2pi_defect(mm * (a1 - a2) + nm * (b1 - b2) - n2m * (c1 - c2));
    const double conj_defect =
        mod_2pi_defect(mm * (a1 + a2) + nm * (b1 + b2) - n2m * (c1 + c2));

    EquivalenceWitness w;
    w.ratio = ra;
    w.congruence_defect = std::min(direct_defect, conj_defect);
    const bool angular_ok = w.congruence_defect <= tol.angular;
    w.equivalent = ratio_ok && angular_ok;
    if (w.equivalent)
        w.branch = (direct_defect <= conj_defect) ? EquivalenceBranch::direct
                                                  : EquivalenceBranch::conjugate;
    return w;
}

std::pair<HarmonicTrinomial, double> rescale_to_unit_c(const HarmonicTrinomial& h) {
    validate(h);
    if (h.c == Complex{0, 0})
        throw DegenerateCoefficientError("rescaling needs c != 0");

    const Complex bn = h.b / h.a;
    const Complex cn = h.c / h.a;
    const double ac = std::abs(cn);
    const double nm = static_cast<double>(h.n + h.m);
    const double scale = std::pow(ac, 1.0 / nm);

    HarmonicTrinomial g;
    g.a = Complex{1, 0};
    g.b = bn / std::pow(ac, static_cast<double>(h.n) / nm);
    g.c = cn / ac;
    g.n = h.n;
    g.m = h.m;
    validate(g);
    return {g, scale};
}

HarmonicTrinomial negate_variable(const HarmonicTrinomial& h) {
    validate(h);
    HarmonicTrinomial g = h;
    if ((h.n + h.m) % 2 != 0) g.a = -g.a;
    if (h.m % 2 != 0) g.b = -g.b;
    return g;
}

}  // namespace harmtri
