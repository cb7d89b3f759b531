#include "harmtri/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "harmtri/errors.hpp"
#include "harmtri/roots.hpp"
#include "harmtri/triangle.hpp"

namespace harmtri {

namespace {

double wrap_2pi(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0) y += kTwoPi;
    return y;
}

void check_exponents(int n, int m) {
    if (n < 1 || m < 1 || std::gcd(n, m) != 1)
        throw ValidationError("exponents must be positive coprime integers");
}

void check_radius(double v) {
    if (!(v > 0) || !std::isfinite(v))
        throw ValidationError("radius must be positive and finite");
}

// sorted moduli with a double root occupying two slots
std::vector<double> expanded_moduli(const RootList& rl) {
    std::vector<double> mods;
    mods.reserve(rl.roots.size() + 2);
    for (const auto& r : rl.roots) {
        mods.push_back(r.modulus);
        if (r.multiplicity_class == MultiplicityClass::multiple) mods.push_back(r.modulus);
    }
    std::sort(mods.begin(), mods.end());
    return mods;
}

}  // namespace

TrochoidParams b_locus_params(int n, int m, Complex c, double v) {
    check_exponents(n, m);
    check_radius(v);
    if (c == Complex{0, 0}) throw DegenerateCoefficientError("b locus parameters need c != 0");
    const double vn = std::pow(v, n);
    TrochoidParams p;
    p.R = vn / (2.0 * m) * (n + 2.0 * m);
    p.r = vn / (2.0 * m) * n;
    p.d = std::abs(c) / std::pow(v, m);
    p.phase = std::arg(c);
    p.kind = LocusKind::b_locus;
    return p;
}

std::vector<Complex> b_locus_curve(int n, int m, Complex c, double v, int samples) {
    check_exponents(n, m);
    check_radius(v);
    if (samples < 16) throw ValidationError("locus sampling needs at least 16 points");
    const double gamma = std::arg(c);
    const double vn = std::pow(v, n);
    const double d = std::abs(c) / std::pow(v, m);
    std::vector<Complex> out;
    out.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double th = kTwoPi * j / samples;
        out.push_back(-(vn * std::polar(1.0, (n + 2.0 * m) * th) +
                        d * std::polar(1.0, gamma + m * th)));
    }
    return out;
}

TrochoidParams c_locus_params(int n, int m, Complex b, double v) {
    check_exponents(n, m);
    check_radius(v);
    if (b == Complex{0, 0}) throw DegenerateCoefficientError("c locus parameters need b != 0");
    if (n <= m)
        throw InvalidGeometryError("c locus parameters need n > m (otherwise R <= r)");
    const double vm = std::pow(v, m);
    TrochoidParams p;
    p.R = vm * std::abs(b) * n / (n + m);
    p.r = vm * std::abs(b) * m / (n + m);
    p.d = std::pow(v, n + m);
    p.phase = std::arg(b);
    p.kind = LocusKind::c_locus;
    return p;
}

std::vector<Complex> c_locus_curve(int n, int m, Complex b, double v, int samples) {
    check_exponents(n, m);
    check_radius(v);
    if (samples < 16) throw ValidationError("locus sampling needs at least 16 points");
    const double beta = std::arg(b);
    const double vnm = std::pow(v, n + m);
    const double bm = std::abs(b) * std::pow(v, m);
    std::vector<Complex> out;
    out.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double th = kTwoPi * j / samples;
        out.push_back(-(vnm * std::polar(1.0, (n + m) * th) +
                        bm * std::polar(1.0, beta - m * th)));
    }
    return out;
}

RaySet ray_set(int n, int m, Complex c) {
    check_exponents(n, m);
    if (c == Complex{0, 0}) throw DegenerateCoefficientError("ray set needs c != 0");
    RaySet rs;
    rs.n = n;
    rs.m = m;
    rs.gamma = std::arg(c);
    rs.rays.reserve(2 * (n + m));
    for (int k = 0; k < 2 * (n + m); ++k) {
        Ray r;
        r.angle = wrap_2pi(((n + 2.0 * m) * rs.gamma + k * kPi) / (n + m));
        r.k = k;
        r.even = (k % 2 == 0);
        rs.rays.push_back(r);
    }
    return rs;
}

RayHit on_ray(Complex b, const RaySet& rays, const Tolerances& tol) {
    if (b == Complex{0, 0}) throw DegenerateCoefficientError("ray test needs b != 0");
    const double beta = std::arg(b);
    const double nm = rays.n + rays.m;
    const double n2m = rays.n + 2.0 * rays.m;
    RayHit hit;
    hit.integer_value = (nm * beta - n2m * rays.gamma) / kPi;
    hit.integer_distance = std::abs(hit.integer_value - std::round(hit.integer_value));
    double best = 1e300;
    const Ray* pick = nullptr;
    for (const auto& r : rays.rays) {
        const double d = std::abs(std::remainder(beta - r.angle, kTwoPi));
        if (d < best) {
            best = d;
            pick = &r;
        }
    }
    if (pick != nullptr && best <= tol.angular) hit.ray = *pick;
    return hit;
}

UjClassification classify_uj(const HarmonicTrinomial& h, const Tolerances& tol) {
    validate(h);
    if (h.c == Complex{0, 0})
        throw DegenerateCoefficientError("modulus-gap classification needs c != 0");
    const auto mods = expanded_moduli(find_all_roots(h, tol));
    const int k = static_cast<int>(mods.size());

    UjClassification out;
    out.total = k;
    if (k < 2) return out;
    out.membership.reserve(k - 1);
    for (int j = 1; j <= k - 1; ++j)
        out.membership.push_back(mods[j] - mods[j - 1] >
                                 tol.modulus_group * std::max(1.0, mods[j - 1]));

    if (h.b == Complex{0, 0}) {
        // all moduli coincide; the ray rule needs arg(b)
        out.predicted.assign(k - 1, std::nullopt);
        return out;
    }

    // the rule is stated for the monic family, so divide a out first
    const Complex bn = h.b / h.a;
    const Complex cn = h.c / h.a;
    const RaySet rays = ray_set(h.n, h.m, cn);
    const RayHit hit = on_ray(bn, rays, tol);
    const bool on_even = hit.ray.has_value() && hit.ray->even;
    const bool on_odd = hit.ray.has_value() && !hit.ray->even;

    const TriangleProfile prof = triangle_profile(h, tol);

    out.predicted.reserve(k - 1);
    for (int j = 1; j <= k - 1; ++j) {
        bool predicted = (((h.n + j) % 2) == 0) ? !on_even : !on_odd;
        if (j == h.m && !predicted) {
            // the gap at j = m also opens when the b-dominant band cuts into it
            const bool escape = prof.kind == BRadiiKind::pair && mods[j - 1] < mods[j] &&
                                prof.b1 < mods[j] && prof.b2 > mods[j - 1];
            predicted = escape;
        }
        out.predicted.push_back(predicted);
    }
    return out;
}

std::vector<Complex> cusp_candidates(int n, int m, Complex c, double v) {
    check_exponents(n, m);
    check_radius(v);
    if (c == Complex{0, 0}) throw DegenerateCoefficientError("cusp search needs c != 0");
    const double gamma = std::arg(c);
    // substituting the cusp value of b into the modulus-v root condition leaves
    // E(phi) = M1 e^{i(n+2m)phi} + M2 e^{i(gamma + m phi)} = 0
    const double M1 = (n + 2.0 * m) / m * std::pow(v, n);
    const double M2 = std::abs(c) * std::pow(v, -m);
    auto residual = [&](double phi) {
        return std::abs(M1 * std::polar(1.0, (n + 2.0 * m) * phi) +
                        M2 * std::polar(1.0, gamma + m * phi));
    };
    // the angular part of E = 0 is s(phi) = 0 with slope n+m; scan for sign
    // changes, bisect each, then let the modulus part decide acceptance
    auto s = [&](double phi) { return std::remainder((n + m) * phi - gamma - kPi, kTwoPi); };

    const int grid = 64 * (n + m);
    std::vector<double> zeros;
    double prev_phi = 0, prev_s = s(0.0);
    if (prev_s == 0) zeros.push_back(0.0);
    for (int j = 1; j <= grid; ++j) {
        const double phi = kTwoPi * j / grid;
        const double sj = s(phi);
        if (sj == 0) {
            zeros.push_back(phi);
        } else if (prev_s != 0 && ((prev_s < 0) != (sj < 0)) && std::abs(sj - prev_s) < kPi) {
            double lo = prev_phi, hi = phi, slo = prev_s;
            for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double smid = s(mid);
                if (smid == 0) {
                    lo = hi = mid;
                    break;
                }
                if ((smid < 0) == (slo < 0)) {
                    lo = mid;
                    slo = smid;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev_phi = phi;
        prev_s = sj;
    }

    const double accept = 1e-7 * (M1 + M2);
    const double bmag = (n + m) / static_cast<double>(m) * std::pow(v, n);
    std::vector<Complex> out;
    for (double phi : zeros) {
        if (residual(phi) > accept) continue;
        const Complex b = bmag * std::polar(1.0, (n + 2.0 * m) * phi);
        bool dup = false;
        for (const auto& prev : out)
            if (std::abs(prev - b) <= 1e-10 * std::max(1.0, bmag)) dup = true;
        if (!dup) out.push_back(b);
    }
    return out;
}

double double_root_angle(int n, int m, Complex c) {
    check_exponents(n, m);
    if (c == Complex{0, 0}) throw DegenerateCoefficientError("double-root angle needs c != 0");
    return wrap_2pi(std::arg(c) / (n + m));
}

double singular_disk_radius(int n, int m, double c_mod) {
    check_exponents(n, m);
    if (!(c_mod > 0) || !std::isfinite(c_mod))
        throw ValidationError("singular disk radius needs |c| > 0");
    const double nm = n + m;
    const double n2m = n + 2.0 * m;
    return std::pow(c_mod, n / nm) *
           (std::pow(m / n2m, n / nm) + (n / n2m) * std::pow(n2m / m, m / nm));
}

double band_tangency_radius(int n, int m, double c_mod) {
    check_exponents(n, m);
    if (!(c_mod > 0) || !std::isfinite(c_mod))
        throw ValidationError("band tangency radius needs |c| > 0");
    const double nm = n + m;
    return nm / m * std::pow(c_mod * m / n, n / nm);
}

double critical_circle_radius(const HarmonicTrinomial& h) {
    validate(h);
    if (h.b == Complex{0, 0})
        throw DegenerateCoefficientError("critical circle needs b != 0");
    return std::pow(h.m * std::abs(h.b) / ((h.n + h.m) * std::abs(h.a)), 1.0 / h.n);
}

Complex discriminant_analytic(int n, int m, Complex b, Complex c) {
    check_exponents(n, m);
    const int nm = n + m;
    const double sign = (static_cast<long long>(nm) * (nm - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    const double par = (nm % 2 == 0) ? 1.0 : -1.0;
    return sign * cpow_int(c, m - 1) *
           (cpow_int(c, n) * std::pow(static_cast<double>(nm), nm) -
            par * cpow_int(b, nm) * std::pow(static_cast<double>(n), n) *
                std::pow(static_cast<double>(m), m));
}

std::vector<DoublePoint> locus_self_intersections(int n, int m, Complex c, double v,
                                                  int samples) {
    check_exponents(n, m);
    check_radius(v);
    if (samples < 16) throw ValidationError("locus sampling needs at least 16 points");
    const double gamma = std::arg(c);
    const double vn = std::pow(v, n);
    const double d = std::abs(c) / std::pow(v, m);
    const double scale = vn + d;
    auto T = [&](double th) {
        return -(vn * std::polar(1.0, (n + 2.0 * m) * th) +
                 d * std::polar(1.0, gamma + m * th));
    };
    auto Tp = [&](double th) {
        return -(vn * Complex{0, n + 2.0 * m} * std::polar(1.0, (n + 2.0 * m) * th) +
                 d * Complex{0, static_cast<double>(m)} * std::polar(1.0, gamma + m * th));
    };

    const int N = samples;
    std::vector<double> ths(N + 1);
    std::vector<Complex> pts(N + 1);
    for (int j = 0; j <= N; ++j) {
        ths[j] = kTwoPi * j / N;
        pts[j] = T(ths[j]);
    }

    const double snap = 1e-9;
    std::vector<DoublePoint> out;
    for (int i = 0; i < N; ++i) {
        for (int j = i + 2; j < N; ++j) {
            if (i == 0 && j == N - 1) continue;  // wrap-adjacent segments share a point
            const Complex p1 = pts[i], q1 = pts[j];
            const Complex rvec = pts[i + 1] - p1;
            const Complex svec = pts[j + 1] - q1;
            const double denom = rvec.real() * svec.imag() - rvec.imag() * svec.real();
            if (std::abs(denom) < 1e-30) continue;
            const Complex w = q1 - p1;
            const double t = (w.real() * svec.imag() - w.imag() * svec.real()) / denom;
            const double u = (w.real() * rvec.imag() - w.imag() * rvec.real()) / denom;
            if (t < -snap || t > 1 + snap || u < -snap || u > 1 + snap) continue;

            double th1 = ths[i] + t * (ths[i + 1] - ths[i]);
            double th2 = ths[j] + u * (ths[j + 1] - ths[j]);
            bool converged = false;
            for (int it = 0; it < 60; ++it) {
                const Complex F = T(th1) - T(th2);
                if (std::abs(F) <= 1e-12 * scale) {
                    converged = true;
                    break;
                }
                const Complex d1 = Tp(th1);
                const Complex d2 = -Tp(th2);
                const double det = d1.real() * d2.imag() - d1.imag() * d2.real();
                if (std::abs(det) <= 1e-30 * scale * scale) break;
                th1 += (-F.real() * d2.imag() + d2.real() * F.imag()) / det;
                th2 += (-d1.real() * F.imag() + d1.imag() * F.real()) / det;
            }
            if (!converged) continue;

            th1 = wrap_2pi(th1);
            th2 = wrap_2pi(th2);
            if (th1 > th2) std::swap(th1, th2);
            const double sep = std::min(th2 - th1, kTwoPi - (th2 - th1));
            if (sep <= 1e-6) continue;  // the trivial coincidence theta1 == theta2

            const Complex bb = T(th1);
            bool dup = false;
            for (const auto& dp : out)
                if (std::abs(std::remainder(dp.theta1 - th1, kTwoPi)) <= 1e-6 &&
                    std::abs(std::remainder(dp.theta2 - th2, kTwoPi)) <= 1e-6)
                    dup = true;
            if (!dup) out.push_back({bb, th1, th2});
        }
    }
    std::sort(out.begin(), out.end(), [](const DoublePoint& x, const DoublePoint& y) {
        if (x.theta1 != y.theta1) return x.theta1 < y.theta1;
        return x.theta2 < y.theta2;
    });
    return out;
}

double empirical_disk_radius(int n, int m, Complex c, const Tolerances& tol) {
    check_exponents(n, m);
    if (c == Complex{0, 0}) throw DegenerateCoefficientError("disk sweep needs c != 0");

    const double rho = singular_disk_radius(n, m, std::abs(c));
    const RaySet rs = ray_set(n, m, c);
    const bool want_even = ((n + m) % 2 == 0);
    double angle = 0;
    for (const auto& r : rs.rays)
        if (r.even == want_even) {
            angle = r.angle;
            break;
        }

    auto pair_equal = [&](double mag) {
        HarmonicTrinomial h;
        h.a = Complex{1, 0};
        h.b = std::polar(mag, angle);
        h.c = c;
        h.n = n;
        h.m = m;
        try {
            const auto mods = expanded_moduli(find_all_roots(h, tol));
            if (static_cast<int>(mods.size()) <= m) return false;
            return mods[m] - mods[m - 1] <= tol.modulus_group * std::max(1.0, mods[m - 1]);
        } catch (const Error&) {
            return false;
        }
    };

    const int sweep = 64;
    const double lo = rho / 8, hi = rho * 8;
    std::vector<char> eq(sweep);
    std::vector<double> mag(sweep);
    for (int k = 0; k < sweep; ++k) {
        mag[k] = lo * std::pow(hi / lo, static_cast<double>(k) / (sweep - 1));
        eq[k] = pair_equal(mag[k]) ? 1 : 0;
    }
    int at = -1;
    for (int k = 0; k + 1 < sweep; ++k)
        if (eq[k] && !eq[k + 1]) at = k;
    if (at < 0)
        throw NoConvergenceError("no equal-pair transition inside the sweep range");

    double blo = mag[at], bhi = mag[at + 1];
    for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (blo + bhi);
        if (pair_equal(mid))
            blo = mid;
        else
            bhi = mid;
    }
    return 0.5 * (blo + bhi);
}

}  // namespace harmtri
