#include "harmtri/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmtri/bohl.hpp"
#include "harmtri/errors.hpp"
#include "harmtri/triangle.hpp"

namespace harmtri {
namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc{0, 0};
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
    Complex acc{0, 0};
    for (size_t i = c.size(); i-- > 1;) acc = acc * z + double(i) * c[i];
    return acc;
}

double coeff_scale(const std::vector<Complex>& c, double r) {
    double s = 0.0, p = 1.0;
    for (const auto& ci : c) {
        s += std::abs(ci) * p;
        p *= r;
    }
    return std::max(1.0, s);
}

// simultaneous refinement of all roots; true when every residual meets the bound
bool aberth_refine(const std::vector<Complex>& c, std::vector<Complex>& z) {
    const int deg = int(c.size()) - 1;
    for (int iter = 0; iter < 500; ++iter) {
        bool settled = true;
        for (int i = 0; i < deg; ++i) {
            Complex p = horner(c, z[i]);
            Complex dp = horner_deriv(c, z[i]);
            if (std::abs(dp) == 0.0) {
                z[i] += Complex(1e-8, 2e-8);
                settled = false;
                continue;
            }
            Complex ratio = p / dp;
            Complex sum{0, 0};
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                Complex d = z[i] - z[j];
                if (std::norm(d) == 0.0) d = Complex(1e-30, 0);
                sum += 1.0 / d;
            }
            Complex w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(std::abs(w))) {
                z[i] *= Complex(1.0, 1e-6);
                settled = false;
                continue;
            }
            z[i] -= w;
            if (std::abs(w) > 1e-14 * std::max(1.0, std::abs(z[i])) &&
                std::abs(p) > 1e-12 * coeff_scale(c, std::abs(z[i])))
                settled = false;
        }
        if (settled) break;
    }
    for (int i = 0; i < deg; ++i)
        if (!(std::abs(horner(c, z[i])) <= 1e-12 * coeff_scale(c, std::abs(z[i])))) return false;
    return true;
}

double residual_scale(const HarmonicTrinomial& h, double v) {
    return std::max({1.0, std::abs(h.a) * std::pow(v, h.n + h.m),
                     std::abs(h.b) * std::pow(v, h.m), std::abs(h.c)});
}

Complex deriv_z(const HarmonicTrinomial& h, Complex z) {
    return h.a * double(h.n + h.m) * cpow_int(z, h.n + h.m - 1);
}

Complex deriv_zbar(const HarmonicTrinomial& h, Complex z) {
    return h.b * double(h.m) * cpow_int(std::conj(z), h.m - 1);
}

// damped descent on |h|^2, for seeds where the Jacobian degenerates
Complex descend(const HarmonicTrinomial& h, Complex z, const Tolerances& tol) {
    for (int k = 0; k < 200; ++k) {
        Complex hv = eval(h, z);
        double f = std::norm(hv);
        if (std::abs(hv) <= tol.residual * residual_scale(h, std::abs(z))) return z;
        Complex g = std::conj(deriv_z(h, z)) * hv + deriv_zbar(h, z) * std::conj(hv);
        double gn = std::norm(g);
        if (gn == 0.0) break;
        double eta = f / (2.0 * gn);
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt) {
            Complex trial = z - eta * g;
            if (std::norm(eval(h, trial)) < f) {
                z = trial;
                moved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!moved) break;
    }
    return z;
}

Complex polish_seed(const HarmonicTrinomial& h, Complex z, const Tolerances& tol) {
    for (int round = 0; round < 3; ++round) {
        try {
            return newton_polish(h, z, tol);
        } catch (const SingularJacobianError&) {
            z = descend(h, z, tol);
        } catch (const NoConvergenceError&) {
            z = descend(h, z, tol);
        }
    }
    return z;
}

int nearest_index(const std::vector<Complex>& pts, Complex target) {
    int best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < pts.size(); ++j) {
        double d = std::abs(pts[j] - target);
        if (d < bd) {
            bd = d;
            best = int(j);
        }
    }
    return best;
}

// permute cur so cur[i] continues the branch prev[i]
void match_branches(const std::vector<Complex>& prev, std::vector<Complex>& cur) {
    const int d = int(prev.size());
    std::vector<Complex> out(d);
    std::vector<char> used(d, 0);
    for (int i = 0; i < d; ++i) {
        int best = -1;
        double bd = std::numeric_limits<double>::infinity();
        for (int j = 0; j < d; ++j) {
            if (used[j]) continue;
            double dist = std::abs(cur[j] - prev[i]);
            if (dist < bd) {
                bd = dist;
                best = j;
            }
        }
        used[best] = 1;
        out[i] = cur[best];
    }
    cur = std::move(out);
}

double min_pairwise(const std::vector<Complex>& r) {
    double md = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = i + 1; j < r.size(); ++j) md = std::min(md, std::abs(r[i] - r[j]));
    return md;
}

// sweep |z| = v through [lo, hi]; seeds are points where a companion branch
// meets its own radius, i.e. candidate roots of h
std::vector<Complex> scan_candidates(const HarmonicTrinomial& h, const TriangleProfile& prof,
                                     double lo, double hi, int samples) {
    const int deg = h.n + 2 * h.m;
    std::vector<Complex> seeds;

    auto coeffs = companion_polynomial(h, lo);
    auto solve_at = [&](double v, const std::vector<Complex>* warm) {
        coeffs[0] = h.b * std::pow(v, 2 * h.m);
        if (warm) {
            auto z = *warm;
            if (aberth_refine(coeffs, z)) return z;
        }
        return poly_roots(coeffs);
    };

    auto bisect = [&](double vlo, double vhi, Complex wlo, Complex whi,
                      std::vector<Complex> warm) {
        double glo = std::abs(wlo) - vlo;
        while (vhi - vlo > 1e-13 * std::max(1.0, vlo)) {
            double mid = 0.5 * (vlo + vhi);
            auto rts = solve_at(mid, &warm);
            warm = rts;
            Complex w = rts[nearest_index(rts, 0.5 * (wlo + whi))];
            double g = std::abs(w) - mid;
            if ((g > 0.0) == (glo > 0.0)) {
                vlo = mid;
                wlo = w;
                glo = g;
            } else {
                vhi = mid;
                whi = w;
            }
        }
        seeds.push_back(0.5 * (wlo + whi));
    };

    double step_ratio = std::pow(hi / lo, 1.0 / (samples - 1));
    double v_prev = lo;
    std::vector<Complex> w_prev = solve_at(lo, nullptr);
    std::vector<double> g_prev(deg), g_prev2(deg, std::numeric_limits<double>::infinity());
    for (int j = 0; j < deg; ++j) g_prev[j] = std::abs(w_prev[j]) - lo;

    for (int k = 1; k < samples; ++k) {
        double v = (k == samples - 1) ? hi : lo * std::pow(step_ratio, double(k));
        auto w = solve_at(v, &w_prev);
        match_branches(w_prev, w);

        // colliding branches make matching ambiguous: re-walk the interval finer
        int subs = min_pairwise(w) < 1e-9 ? 4 : 1;
        double va = v_prev;
        auto wa = w_prev;
        auto ga = g_prev;
        for (int s = 1; s <= subs; ++s) {
            double vb = (s == subs) ? v : v_prev + (v - v_prev) * double(s) / subs;
            std::vector<Complex> wb;
            if (s == subs && subs == 1) {
                wb = w;
            } else {
                wb = solve_at(vb, &wa);
                match_branches(wa, wb);
            }
            std::vector<double> gb(deg);
            for (int j = 0; j < deg; ++j) gb[j] = std::abs(wb[j]) - vb;
            for (int j = 0; j < deg; ++j) {
                if (ga[j] == 0.0)
                    seeds.push_back(wa[j]);
                else if (gb[j] == 0.0)
                    seeds.push_back(wb[j]);
                else if ((ga[j] > 0.0) != (gb[j] > 0.0))
                    bisect(va, vb, wa[j], wb[j], wa);
            }
            va = vb;
            wa = std::move(wb);
            ga = std::move(gb);
        }

        // tangential contact: |g| dips near zero without changing sign
        for (int j = 0; j < deg; ++j) {
            double gc = std::abs(w[j]) - v;
            if (std::isfinite(g_prev2[j]) && std::abs(g_prev[j]) <= std::abs(g_prev2[j]) &&
                std::abs(g_prev[j]) <= std::abs(gc) && (g_prev2[j] > 0.0) == (gc > 0.0) &&
                std::abs(g_prev[j]) < 1e-2 * v_prev)
                seeds.push_back(w_prev[j]);
        }

        g_prev2 = g_prev;
        for (int j = 0; j < deg; ++j) g_prev[j] = std::abs(w[j]) - v;
        w_prev = std::move(w);
        v_prev = v;
    }

    // the breakpoint radii and the critical circle host the non-transversal roots
    std::vector<double> probes = {prof.c_radius, prof.a_radius, prof.b_peak};
    if (prof.kind == BRadiiKind::pair) {
        probes.push_back(prof.b1);
        probes.push_back(prof.b2);
    } else if (prof.kind == BRadiiKind::double_root) {
        probes.push_back(prof.b1);
    }
    for (double v : probes) {
        auto rts = solve_at(v, &w_prev);
        for (const auto& wz : rts)
            if (std::abs(std::abs(wz) - v) <= 1e-3 * std::max(1.0, v)) seeds.push_back(wz);
    }
    return seeds;
}

RootList assemble(const HarmonicTrinomial& h, const std::vector<Complex>& seeds,
                  const Tolerances& tol) {
    // a double root degrades one-sided Newton accuracy to ~sqrt(residual), so its
    // approximations from the scan can sit well apart. the critical-circle probe
    // recovers such a root to machine precision (it is a simple companion root);
    // those machine-singular points anchor and absorb their cluster.
    auto machine_singular = [&](Complex z) {
        double lim = std::abs(deriv_z(h, z)) + std::abs(deriv_zbar(h, z));
        return std::abs(jacobian(h, z)) <= 1e-12 * lim * lim;
    };

    std::vector<Complex> polished;
    std::vector<double> polished_res;
    std::vector<char> polished_anchor;
    for (Complex s : seeds) {
        Complex z = polish_seed(h, s, tol);
        double res = std::abs(eval(h, z));
        if (!(res <= tol.residual * residual_scale(h, std::abs(z)))) continue;
        polished.push_back(z);
        polished_res.push_back(res);
        polished_anchor.push_back(machine_singular(z) ? 1 : 0);
    }

    std::vector<Complex> acc;
    std::vector<double> acc_res;
    std::vector<char> acc_anchor;
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t k = 0; k < polished.size(); ++k) {
            bool anchor = polished_anchor[k] != 0;
            if ((pass == 0) != anchor) continue;
            Complex z = polished[k];
            double res = polished_res[k];
            double v = std::abs(z);
            double dd = std::max(tol.modulus_group, 1e-12 * std::max(1.0, v));
            bool merged = false;
            for (size_t i = 0; i < acc.size(); ++i) {
                double reach = (acc_anchor[i] || anchor) ? 1e-3 * std::max(1.0, v) : dd;
                if (std::abs(acc[i] - z) <= reach) {
                    bool better = (anchor && acc_anchor[i])
                                      ? std::abs(jacobian(h, z)) < std::abs(jacobian(h, acc[i]))
                                      : (!acc_anchor[i] && res < acc_res[i]);
                    if (better) {
                        acc[i] = z;
                        acc_res[i] = res;
                    }
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                acc.push_back(z);
                acc_res.push_back(res);
                acc_anchor.push_back(anchor ? 1 : 0);
            }
        }
    }

    RootList out;
    for (size_t i = 0; i < acc.size(); ++i) {
        RootRecord r;
        r.value = acc[i];
        r.modulus = std::abs(acc[i]);
        r.residual = acc_res[i];
        double scale = residual_scale(h, r.modulus);
        double jac = jacobian(h, r.value);
        if (std::abs(jac) <= tol.residual * scale * scale) {
            r.orientation = Orientation::singular;
            r.multiplicity_class = MultiplicityClass::multiple;
        } else {
            r.orientation = jac > 0.0 ? Orientation::sense_preserving : Orientation::sense_reversing;
            r.multiplicity_class = MultiplicityClass::simple;
        }
        out.roots.push_back(r);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const RootRecord& x, const RootRecord& y) {
        if (x.modulus != y.modulus) return x.modulus < y.modulus;
        return arg_2pi(x.value) < arg_2pi(y.value);
    });

    int bound = h.n + 3 * h.m;
    if (int(out.roots.size()) > bound)
        throw OracleIncompleteError("accepted more roots than the degree bound",
                                    int(out.roots.size()), bound);

    for (size_t i = 0; i < out.roots.size(); ++i) {
        if (i > 0 && out.roots[i].modulus - out.roots[i - 1].modulus <=
                         tol.modulus_group * std::max(1.0, out.roots[i - 1].modulus))
            out.groups.back().push_back(int(i));
        else
            out.groups.push_back({int(i)});
    }
    return out;
}

}  // namespace

std::vector<Complex> companion_polynomial(const HarmonicTrinomial& h, double v) {
    validate(h);
    if (!std::isfinite(v) || v < 0.0) throw ValidationError("radius must be finite and nonnegative");
    std::vector<Complex> c(size_t(h.n + 2 * h.m) + 1, Complex{0, 0});
    c[0] = h.b * std::pow(v, 2 * h.m);
    c[size_t(h.m)] = h.c;
    c[size_t(h.n + 2 * h.m)] = h.a;
    return c;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.empty() || std::abs(coeffs.back()) == 0.0)
        throw ValidationError("leading coefficient must be nonzero");
    std::vector<Complex> c = coeffs;
    std::vector<Complex> out;
    while (c.size() > 1 && std::abs(c.front()) == 0.0) {
        out.push_back({0, 0});
        c.erase(c.begin());
    }
    const int deg = int(c.size()) - 1;
    if (deg == 0) return out;
    if (deg == 1) {
        out.push_back(-c[0] / c[1]);
        return out;
    }

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[i] / c.back()));
    radius += 1.0;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Complex> z(deg);
        double phase = attempt == 0 ? 0.376 : 0.911;
        for (int i = 0; i < deg; ++i) z[i] = std::polar(radius, kTwoPi * (i + phase) / deg);
        if (aberth_refine(c, z)) {
            out.insert(out.end(), z.begin(), z.end());
            return out;
        }
    }
    throw NoConvergenceError("polynomial roots did not reach the residual bound");
}

double jacobian(const HarmonicTrinomial& h, Complex z) {
    return std::norm(deriv_z(h, z)) - std::norm(deriv_zbar(h, z));
}

Complex newton_polish(const HarmonicTrinomial& h, Complex z0, const Tolerances& tol) {
    validate(h);
    Complex z = z0;
    for (int iter = 0; iter < 100; ++iter) {
        Complex hv = eval(h, z);
        if (std::abs(hv) <= tol.residual * residual_scale(h, std::abs(z))) return z;
        Complex hz = deriv_z(h, z);
        Complex hzb = deriv_zbar(h, z);
        double jac = std::norm(hz) - std::norm(hzb);
        double lim = std::abs(hz) + std::abs(hzb);
        if (std::abs(jac) <= 1e-12 * lim * lim)
            throw SingularJacobianError("degenerate Jacobian while polishing");
        Complex step = (std::conj(hv) * hzb - hv * std::conj(hz)) / jac;
        z += step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) return z;
    }
    throw NoConvergenceError("polish did not converge");
}

RootList find_all_roots(const HarmonicTrinomial& h, const Tolerances& tol) {
    validate(h);

    if (std::abs(h.b) == 0.0) {
        std::vector<Complex> seeds;
        int d = h.n + h.m;
        if (std::abs(h.c) == 0.0) {
            seeds.push_back({0, 0});
        } else {
            double rho = std::pow(std::abs(h.c) / std::abs(h.a), 1.0 / d);
            double base = kPi + std::arg(h.c / h.a);
            for (int k = 0; k < d; ++k) seeds.push_back(std::polar(rho, (base + kTwoPi * k) / d));
        }
        return assemble(h, seeds, tol);
    }
    if (std::abs(h.c) == 0.0) {
        std::vector<Complex> seeds{{0, 0}};
        int d = h.n + 2 * h.m;
        double rho = std::pow(std::abs(h.b) / std::abs(h.a), 1.0 / h.n);
        double base = kPi + std::arg(h.b / h.a);
        for (int k = 0; k < d; ++k) seeds.push_back(std::polar(rho, (base + kTwoPi * k) / d));
        return assemble(h, seeds, tol);
    }

    auto prof = triangle_profile(h, tol);
    double lo = prof.c_radius * (1.0 - 1e-3);
    double hi = prof.a_radius * (1.0 + 1e-3);
    long expected = -1;
    try {
        expected = count_roots_below(h, hi, tol);
    } catch (const Error&) {
        // boundary or refinement trouble at the checkpoint: no cross-check
    }

    int samples = 2048;
    RootList out;
    for (int round = 0;; ++round) {
        out = assemble(h, scan_candidates(h, prof, lo, hi, samples), tol);
        if (expected < 0 || long(out.roots.size()) == expected || round == 4) break;
        samples *= 2;
    }
    return out;
}

std::vector<SpectrumGroup> moduli_spectrum(const RootList& rl) {
    std::vector<SpectrumGroup> out;
    for (const auto& g : rl.groups) {
        SpectrumGroup s;
        for (int i : g) s.modulus += rl.roots[size_t(i)].modulus;
        s.modulus /= double(g.size());
        s.count = int(g.size());
        out.push_back(s);
    }
    return out;
}

std::vector<SpectrumGroup> moduli_spectrum(const HarmonicTrinomial& h, const Tolerances& tol) {
    return moduli_spectrum(find_all_roots(h, tol));
}

}  // namespace harmtri
