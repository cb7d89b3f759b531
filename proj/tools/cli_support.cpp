#include "cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace harmtri::cli {

namespace {

std::string fmt(const char* f, double x) {
    if (x == 0.0) x = 0.0;  // flush negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Complex complex_from_json(const Json& j, const char* name) {
    if (j.is_number()) return Complex{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex{j[0].get<double>(), j[1].get<double>()};
    throw ValidationError(std::string("coefficient ") + name +
                          " must be a number or an [re, im] pair");
}

const char* kind_name(BRadiiKind k) {
    switch (k) {
        case BRadiiKind::none: return "none";
        case BRadiiKind::double_root: return "double_root";
        default: return "pair";
    }
}

// figure-caption values for the degeneracy disk; the (4,1,1) entry differs
// from the formula and gets flagged when it shows up
struct PublishedRadius {
    int n, m;
    double c_mod, value;
};
const PublishedRadius kPublishedRadii[] = {
    {5, 3, 0.5, 0.7676},
    {5, 2, 2.0, 1.9616},
    {4, 1, 1.0, 1.2052},
};

}  // namespace

int error_exit_code(const std::exception& e) {
    if (dynamic_cast<const IoError*>(&e)) return kExitIo;
    if (dynamic_cast<const NoConvergenceError*>(&e)) return kExitNumerical;
    if (dynamic_cast<const OracleIncompleteError*>(&e)) return kExitNumerical;
    if (dynamic_cast<const SingularJacobianError*>(&e)) return kExitNumerical;
    return kExitValidation;
}

HarmonicTrinomial to_trinomial(const SpecInput& s) {
    return make_trinomial(s.a, s.b, s.c, s.n, s.m);
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

static const Json& unwrap_input(const Json& j) {
    if (j.is_object() && j.contains("input") && j["input"].is_object())
        return j["input"];
    return j;
}

SpecInput spec_from_json(const Json& raw) {
    const Json* j = &unwrap_input(raw);
    if (j->is_object() && j->contains("first")) j = &(*j)["first"];
    if (!j->is_object()) throw ValidationError("spec must be an object");
    SpecInput s;
    if (j->contains("a")) s.a = complex_from_json((*j)["a"], "a");
    if (j->contains("b")) s.b = complex_from_json((*j)["b"], "b");
    if (j->contains("c")) s.c = complex_from_json((*j)["c"], "c");
    if (!j->contains("n") || !j->contains("m") || !(*j)["n"].is_number_integer() ||
        !(*j)["m"].is_number_integer())
        throw ValidationError("spec needs integer exponents n and m");
    s.n = (*j)["n"].get<int>();
    s.m = (*j)["m"].get<int>();
    return s;
}

std::optional<SpecInput> second_spec_from_json(const Json& raw) {
    const Json& j = unwrap_input(raw);
    if (!j.is_object() || !j.contains("second")) return std::nullopt;
    Json wrapped = j["second"];
    return spec_from_json(wrapped);
}

Tolerances tolerances_from_file(const std::string& path) {
    Json j = load_json_file(path);
    if (!j.is_object()) throw ValidationError(path + ": tolerance file must be an object");
    Tolerances tol;
    for (auto it = j.begin(); it != j.end(); ++it) {
        double* slot = nullptr;
        if (it.key() == "residual") slot = &tol.residual;
        else if (it.key() == "modulus_group") slot = &tol.modulus_group;
        else if (it.key() == "angular") slot = &tol.angular;
        else if (it.key() == "boundary_band") slot = &tol.boundary_band;
        else throw ValidationError(path + ": unknown tolerance key " + it.key());
        if (!it.value().is_number())
            throw ValidationError(path + ": " + it.key() + " must be a number");
        *slot = it.value().get<double>();
        if (!(*slot > 0) || !std::isfinite(*slot))
            throw ValidationError(path + ": " + it.key() + " must be positive and finite");
    }
    return tol;
}

std::string g17(double x) { return fmt("%.17g", x); }
std::string g12(double x) { return fmt("%.12g", x); }

std::string format_complex(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp);
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!out) throw IoError("write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("cannot move " + tmp + " into place");
}

Json j_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

Json j_spec(const SpecInput& s) {
    Json j;
    j["a"] = j_complex(s.a);
    j["b"] = j_complex(s.b);
    j["c"] = j_complex(s.c);
    j["n"] = s.n;
    j["m"] = s.m;
    return j;
}

Json j_params(const TrochoidParams& p) {
    Json j;
    j["R"] = p.R;
    j["r"] = p.r;
    j["d"] = p.d;
    j["phase"] = p.phase;
    j["kind"] = p.kind == LocusKind::b_locus ? "b_locus" : "c_locus";
    return j;
}

Json section_meta(const Tolerances& tol, int samples) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["samples"] = samples;
    Json t;
    t["residual"] = tol.residual;
    t["modulus_group"] = tol.modulus_group;
    t["angular"] = tol.angular;
    t["boundary_band"] = tol.boundary_band;
    j["tolerances"] = t;
    return j;
}

Json section_triangle(const HarmonicTrinomial& h, const Tolerances& tol) {
    try {
        TriangleProfile p = triangle_profile(h, tol);
        Json j;
        j["c_radius"] = p.c_radius;
        j["a_radius"] = p.a_radius;
        j["kind"] = kind_name(p.kind);
        if (p.kind == BRadiiKind::none) {
            j["b1"] = nullptr;
            j["b2"] = nullptr;
        } else {
            j["b1"] = p.b1;
            j["b2"] = p.b2;
        }
        j["b_peak"] = p.b_peak;
        return j;
    } catch (const DegenerateCoefficientError&) {
        return Json(nullptr);
    } catch (const Error& e) {
        return Json{{"error", e.what()}};
    }
}

Json section_counts(const HarmonicTrinomial& h, const std::vector<double>& vs,
                    const Tolerances& tol, int& ok_count) {
    Json entries = Json::array();
    ok_count = 0;
    for (double v : vs) {
        Json e;
        e["v"] = v;
        try {
            const int k = count_roots_below(h, v, tol);
            PivotData pd = pivot_data(h, v, tol);
            e["regime"] = regime_name(regime(h, v, tol));
            e["p_star"] = pd.p_star;
            e["w_star"] = pd.w_star_at_v;
            e["w_range"] = Json::array({pd.w_range.lo, pd.w_range.hi});
            e["count"] = k;
            ++ok_count;
        } catch (const OnBoundaryError& ob) {
            e["error"] = ob.what();
            e["suggest_below"] = ob.suggest_below;
            e["suggest_above"] = ob.suggest_above;
        } catch (const Error& err) {
            e["error"] = err.what();
        }
        entries.push_back(e);
    }
    return entries;
}

Json section_roots(const RootList& rl) {
    Json j;
    int pres = 0, rev = 0, sing = 0;
    Json list = Json::array();
    for (const auto& r : rl.roots) {
        switch (r.orientation) {
            case Orientation::sense_preserving: ++pres; break;
            case Orientation::sense_reversing: ++rev; break;
            default: ++sing; break;
        }
        Json e;
        e["value"] = j_complex(r.value);
        e["modulus"] = r.modulus;
        e["orientation"] = orientation_name(r.orientation);
        e["multiplicity"] =
            r.multiplicity_class == MultiplicityClass::simple ? "simple" : "multiple";
        e["residual"] = r.residual;
        list.push_back(e);
    }
    j["total"] = static_cast<int>(rl.roots.size());
    j["preserving"] = pres;
    j["reversing"] = rev;
    j["singular"] = sing;
    j["list"] = list;
    return j;
}

Json section_spectrum(const RootList& rl) {
    Json groups = Json::array();
    for (const auto& g : moduli_spectrum(rl))
        groups.push_back(Json{{"modulus", g.modulus}, {"count", g.count}});
    return Json{{"groups", groups}};
}

Json section_uj(const HarmonicTrinomial& h, const Tolerances& tol) {
    try {
        UjClassification uj = classify_uj(h, tol);
        Json j;
        j["total"] = uj.total;
        Json mem = Json::array(), pred = Json::array(), members = Json::array();
        for (size_t i = 0; i < uj.membership.size(); ++i) {
            mem.push_back(uj.membership[i]);
            if (uj.membership[i]) members.push_back(static_cast<int>(i) + 1);
            if (uj.predicted[i].has_value())
                pred.push_back(*uj.predicted[i]);
            else
                pred.push_back(nullptr);
        }
        j["membership"] = mem;
        j["predicted"] = pred;
        j["members"] = members;
        return j;
    } catch (const DegenerateCoefficientError&) {
        return Json(nullptr);
    } catch (const Error& e) {
        return Json{{"error", e.what()}};
    }
}

Json section_rays(const HarmonicTrinomial& h, const Tolerances& tol) {
    if (std::abs(h.c) == 0.0) return Json(nullptr);
    const Complex cn = h.c / h.a;
    RaySet rs = ray_set(h.n, h.m, cn);
    Json j;
    j["gamma"] = rs.gamma;
    Json rays = Json::array();
    for (const auto& r : rs.rays)
        rays.push_back(Json{{"k", r.k},
                            {"angle", r.angle},
                            {"parity", r.even ? "even" : "odd"}});
    j["rays"] = rays;
    if (std::abs(h.b) != 0.0) {
        RayHit hit = on_ray(h.b / h.a, rs, tol);
        Json b;
        b["on_ray"] = hit.ray.has_value();
        if (hit.ray.has_value()) {
            b["k"] = hit.ray->k;
            b["parity"] = hit.ray->even ? "even" : "odd";
        } else {
            b["k"] = nullptr;
        }
        b["integer_value"] = hit.integer_value;
        b["integer_distance"] = hit.integer_distance;
        j["b"] = b;
    } else {
        j["b"] = nullptr;
    }
    return j;
}

Json section_singular(int n, int m, Complex c, const std::vector<double>& b_mags,
                      const std::vector<double>& cusp_grid,
                      const std::vector<double>& intersection_vs, int samples,
                      const Tolerances& tol) {
    if (std::abs(c) == 0.0) return Json(nullptr);
    Json j;
    const double rho = singular_disk_radius(n, m, std::abs(c));
    j["rho"] = rho;
    j["band_tangency"] = band_tangency_radius(n, m, std::abs(c));
    const double v_cusp = std::pow(std::abs(c) * m / (n + 2.0 * m), 1.0 / (n + m));
    j["cusp_radius"] = v_cusp;
    j["double_root_angle"] = double_root_angle(n, m, c);

    Json cusps = Json::array();
    for (double v : cusp_grid) {
        Json e;
        e["v"] = v;
        Json cands = Json::array();
        for (Complex b : cusp_candidates(n, m, c, v)) cands.push_back(j_complex(b));
        e["candidates"] = cands;
        cusps.push_back(e);
    }
    j["cusps"] = cusps;

    Json circles = Json::array();
    for (double mag : b_mags) {
        if (!(mag > 0)) continue;
        Json e;
        e["b_mag"] = mag;
        e["radius"] = std::pow(m * mag / (double(n) + m), 1.0 / n);
        circles.push_back(e);
    }
    j["critical_circles"] = circles;

    Json dps = Json::array();
    for (double v : intersection_vs) {
        Json e;
        e["v"] = v;
        Json pts = Json::array();
        try {
            for (const auto& dp : locus_self_intersections(n, m, c, v, samples))
                pts.push_back(Json{{"b", j_complex(dp.b)},
                                   {"theta1", dp.theta1},
                                   {"theta2", dp.theta2}});
            e["points"] = pts;
        } catch (const Error& err) {
            e["error"] = err.what();
        }
        dps.push_back(e);
    }
    j["double_points"] = dps;

    Json published(nullptr);
    for (const auto& p : kPublishedRadii) {
        if (p.n != n || p.m != m) continue;
        if (std::abs(std::abs(c) - p.c_mod) > 1e-9 * p.c_mod) continue;
        Json e;
        e["value"] = p.value;
        e["delta"] = std::abs(rho - p.value);
        if (std::abs(rho - p.value) > 1e-3)
            e["note"] = "published radius " + g12(p.value) +
                        " differs from the formula value " + g12(rho);
        published = e;
        break;
    }
    j["published"] = published;
    (void)tol;
    return j;
}

Json section_equivalence(const EquivalenceWitness& w) {
    Json j;
    j["equivalent"] = w.equivalent;
    j["branch"] = branch_name(w.branch);
    j["ratio"] = w.ratio;
    j["congruence_defect"] = w.congruence_defect;
    return j;
}

// ---------------------------------------------------------------- text views

std::string text_spec(const Json& input) {
    SpecInput s;
    s.a = complex_from_json(input["a"], "a");
    s.b = complex_from_json(input["b"], "b");
    s.c = complex_from_json(input["c"], "c");
    s.n = input["n"].get<int>();
    s.m = input["m"].get<int>();
    std::ostringstream os;
    os << "trinomial: (" << format_complex(s.a) << ") z^" << (s.n + s.m) << " + ("
       << format_complex(s.b) << ") zbar^" << s.m << " + (" << format_complex(s.c)
       << ")   [n=" << s.n << ", m=" << s.m << "]\n";
    return os.str();
}

std::string text_triangle(const Json& j) {
    if (j.is_null()) return "triangle region: not applicable (zero b or c)\n";
    if (j.contains("error"))
        return "triangle region: failed (" + j["error"].get<std::string>() + ")\n";
    std::ostringstream os;
    os << "triangle region: c_radius " << g12(j["c_radius"].get<double>())
       << ", a_radius " << g12(j["a_radius"].get<double>()) << ", peak "
       << g12(j["b_peak"].get<double>());
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "none")
        os << ", no b-band";
    else if (kind == "double_root")
        os << ", b-band pinched at " << g12(j["b1"].get<double>());
    else
        os << ", b-band [" << g12(j["b1"].get<double>()) << ", "
           << g12(j["b2"].get<double>()) << "]";
    os << "\n";
    return os.str();
}

std::string text_counts(const Json& entries) {
    std::ostringstream os;
    os << "counts below radius:\n";
    for (const auto& e : entries) {
        os << "  v " << g12(e["v"].get<double>()) << ": ";
        if (e.contains("error")) {
            os << "failed (" << e["error"].get<std::string>() << ")";
            if (e.contains("suggest_below"))
                os << "; try " << g12(e["suggest_below"].get<double>()) << " or "
                   << g12(e["suggest_above"].get<double>());
            os << "\n";
            continue;
        }
        os << "count " << e["count"].get<int>() << ", regime "
           << e["regime"].get<std::string>() << ", p_star "
           << g12(e["p_star"].get<double>()) << ", w_star "
           << g12(e["w_star"].get<double>()) << ", w_range ["
           << g12(e["w_range"][0].get<double>()) << ", "
           << g12(e["w_range"][1].get<double>()) << "]\n";
    }
    return os.str();
}

std::string text_roots(const Json& j) {
    std::ostringstream os;
    os << "roots: " << j["total"].get<int>() << " total, "
       << j["preserving"].get<int>() << " sense-preserving, "
       << j["reversing"].get<int>() << " sense-reversing";
    if (j["singular"].get<int>() > 0) os << ", " << j["singular"].get<int>() << " singular";
    os << "\n";
    int idx = 0;
    for (const auto& e : j["list"]) {
        char buf[192];
        std::snprintf(buf, sizeof buf, "  %2d  (%s)  |z| %s  %s %s  res %.3g\n", ++idx,
                      format_complex(Complex{e["value"][0].get<double>(),
                                             e["value"][1].get<double>()})
                          .c_str(),
                      g12(e["modulus"].get<double>()).c_str(),
                      e["orientation"].get<std::string>().c_str(),
                      e["multiplicity"].get<std::string>().c_str(),
                      e["residual"].get<double>());
        os << buf;
    }
    return os.str();
}

std::string text_spectrum(const Json& j) {
    std::ostringstream os;
    os << "modulus spectrum:";
    bool first = true;
    for (const auto& g : j["groups"]) {
        os << (first ? " " : ", ") << g12(g["modulus"].get<double>()) << " x"
           << g["count"].get<int>();
        first = false;
    }
    os << "\n";
    return os.str();
}

std::string text_uj(const Json& j) {
    if (j.is_null()) return "gap classification: not applicable (zero b or c)\n";
    if (j.contains("error"))
        return "gap classification: failed (" + j["error"].get<std::string>() + ")\n";
    std::ostringstream os;
    os << "gap classification: " << j["total"].get<int>() << " roots, distinct-gap positions {";
    bool first = true;
    for (const auto& v : j["members"]) {
        if (!first) os << ",";
        os << v.get<int>();
        first = false;
    }
    os << "}";
    int mismatches = 0, applicable = 0;
    const auto& mem = j["membership"];
    const auto& pred = j["predicted"];
    for (size_t i = 0; i < mem.size(); ++i) {
        if (pred[i].is_null()) continue;
        ++applicable;
        if (pred[i].get<bool>() != mem[i].get<bool>()) ++mismatches;
    }
    if (applicable == 0)
        os << "; ray rule not applicable";
    else if (mismatches == 0)
        os << "; ray rule agrees at all " << applicable << " applicable positions";
    else
        os << "; ray rule disagrees at " << mismatches << " of " << applicable
           << " positions";
    os << "\n";
    return os.str();
}

std::string text_rays(const Json& j) {
    if (j.is_null()) return "rays: not applicable (zero c)\n";
    std::ostringstream os;
    os << "rays: " << j["rays"].size() << " from gamma " << g12(j["gamma"].get<double>());
    os << ", angles";
    for (const auto& r : j["rays"])
        os << " " << g12(r["angle"].get<double>())
           << (r["parity"].get<std::string>() == "even" ? "e" : "o");
    os << "\n";
    if (!j["b"].is_null()) {
        const auto& b = j["b"];
        if (b["on_ray"].get<bool>())
            os << "  b sits on the " << b["parity"].get<std::string>() << " ray k="
               << b["k"].get<int>() << " (integer value "
               << g12(b["integer_value"].get<double>()) << ")\n";
        else
            os << "  b off the rays (integer value " << g12(b["integer_value"].get<double>())
               << ", distance " << g12(b["integer_distance"].get<double>()) << ")\n";
    }
    return os.str();
}

std::string text_singular(const Json& j) {
    if (j.is_null()) return "degeneracy report: not applicable (zero c)\n";
    std::ostringstream os;
    os << "degeneracy disk: rho " << g12(j["rho"].get<double>()) << ", band tangency "
       << g12(j["band_tangency"].get<double>()) << ", cusp radius "
       << g12(j["cusp_radius"].get<double>()) << ", double-root angle "
       << g12(j["double_root_angle"].get<double>()) << "\n";
    for (const auto& e : j["cusps"]) {
        os << "  cusp candidates at v " << g12(e["v"].get<double>()) << ":";
        if (e["candidates"].empty()) os << " none";
        for (const auto& b : e["candidates"])
            os << " (" << format_complex(Complex{b[0].get<double>(), b[1].get<double>()})
               << ")";
        os << "\n";
    }
    for (const auto& e : j["critical_circles"])
        os << "  critical circle for |b| " << g12(e["b_mag"].get<double>()) << ": radius "
           << g12(e["radius"].get<double>()) << "\n";
    for (const auto& e : j["double_points"]) {
        os << "  locus double points at v " << g12(e["v"].get<double>()) << ": ";
        if (e.contains("error"))
            os << "failed (" << e["error"].get<std::string>() << ")";
        else
            os << e["points"].size();
        os << "\n";
    }
    if (!j["published"].is_null()) {
        const auto& p = j["published"];
        os << "  published figure value " << g12(p["value"].get<double>()) << " (delta "
           << g12(p["delta"].get<double>()) << ")";
        if (p.contains("note")) os << "  ** " << p["note"].get<std::string>();
        os << "\n";
    }
    return os.str();
}

std::string text_equivalence(const Json& j) {
    std::ostringstream os;
    if (j["equivalent"].get<bool>())
        os << "equivalent: yes, branch " << j["branch"].get<std::string>() << ", ratio "
           << g12(j["ratio"].get<double>()) << ", congruence defect "
           << g12(j["congruence_defect"].get<double>()) << "\n";
    else
        os << "equivalent: no (congruence defect " << g12(j["congruence_defect"].get<double>())
           << " rad)\n";
    return os.str();
}

// ----------------------------------------------------------------- figures

namespace {

struct Pane {
    double x0 = 0, y0 = 0, w = 0, h = 0;   // canvas rect
    double cx = 0, cy = 0, scale = 1;      // world center + pixels per unit

    void fit(double xmin, double xmax, double ymin, double ymax) {
        if (!(xmax > xmin)) { xmin -= 1; xmax += 1; }
        if (!(ymax > ymin)) { ymin -= 1; ymax += 1; }
        const double padx = 0.10 * (xmax - xmin), pady = 0.10 * (ymax - ymin);
        xmin -= padx; xmax += padx; ymin -= pady; ymax += pady;
        cx = 0.5 * (xmin + xmax);
        cy = 0.5 * (ymin + ymax);
        const double margin = 34;
        scale = std::min((w - 2 * margin) / (xmax - xmin),
                         (h - 2 * margin) / (ymax - ymin));
    }
    double px(double x) const { return x0 + w / 2 + (x - cx) * scale; }
    double py(double y) const { return y0 + h / 2 - (y - cy) * scale; }
};

void expand(double& xmin, double& xmax, double& ymin, double& ymax, Complex z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
}

std::string px3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void svg_circle(std::string& s, const Pane& p, double radius, const char* style) {
    s += "<circle cx=\"" + px3(p.px(0)) + "\" cy=\"" + px3(p.py(0)) + "\" r=\"" +
         px3(radius * p.scale) + "\" " + style + "/>\n";
}

void svg_axes(std::string& s, const Pane& p) {
    s += "<line x1=\"" + px3(p.x0) + "\" y1=\"" + px3(p.py(0)) + "\" x2=\"" +
         px3(p.x0 + p.w) + "\" y2=\"" + px3(p.py(0)) +
         "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + px3(p.px(0)) + "\" y1=\"" + px3(p.y0) + "\" x2=\"" +
         px3(p.px(0)) + "\" y2=\"" + px3(p.y0 + p.h) +
         "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string svg_figure(const PlotData& pd) {
    const double W = 1280, H = 640;
    Pane zp{0, 0, W / 2, H};
    Pane bp{W / 2, 0, W / 2, H};

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& r : pd.roots) expand(xmin, xmax, ymin, ymax, r.value);
    double rmax = 0;
    for (double v : pd.vs) rmax = std::max(rmax, v);
    for (double v : pd.extra_circles) rmax = std::max(rmax, v);
    rmax = std::max(rmax, pd.critical_radius);
    if (rmax > 0) {
        expand(xmin, xmax, ymin, ymax, Complex{rmax, rmax});
        expand(xmin, xmax, ymin, ymax, Complex{-rmax, -rmax});
    }
    if (xmin > xmax) { xmin = -1; xmax = 1; ymin = -1; ymax = 1; }
    zp.fit(xmin, xmax, ymin, ymax);

    double bxmin = 1e300, bxmax = -1e300, bymin = 1e300, bymax = -1e300;
    for (const auto& curve : pd.locus_curves)
        for (Complex z : curve) expand(bxmin, bxmax, bymin, bymax, z);
    if (std::abs(pd.h.b) != 0.0) expand(bxmin, bxmax, bymin, bymax, pd.h.b / pd.h.a);
    if (pd.rho > 0) {
        expand(bxmin, bxmax, bymin, bymax, Complex{pd.rho, pd.rho});
        expand(bxmin, bxmax, bymin, bymax, Complex{-pd.rho, -pd.rho});
    }
    if (bxmin > bxmax) { bxmin = -1; bxmax = 1; bymin = -1; bymax = 1; }
    bp.fit(bxmin, bxmax, bymin, bymax);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1280\" height=\"640\" "
         "viewBox=\"0 0 1280 640\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"1280\" height=\"640\" fill=\"#ffffff\"/>\n";
    s += "<defs><clipPath id=\"clipz\"><rect x=\"0\" y=\"0\" width=\"640\" "
         "height=\"640\"/></clipPath><clipPath id=\"clipb\"><rect x=\"640\" y=\"0\" "
         "width=\"640\" height=\"640\"/></clipPath></defs>\n";
    s += "<line x1=\"640\" y1=\"0\" x2=\"640\" y2=\"640\" stroke=\"#999\" "
         "stroke-width=\"1\"/>\n";

    // left pane: the z plane
    s += "<g clip-path=\"url(#clipz)\">\n";
    svg_axes(s, zp);
    for (double v : pd.vs)
        svg_circle(s, zp, v,
                   "fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" "
                   "stroke-dasharray=\"4,4\"");
    for (double v : pd.extra_circles)
        svg_circle(s, zp, v,
                   "fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" "
                   "stroke-dasharray=\"4,4\"");
    if (pd.critical_radius > 0)
        svg_circle(s, zp, pd.critical_radius,
                   "fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"1\" "
                   "stroke-dasharray=\"2,3\"");
    for (const auto& r : pd.roots) {
        const char* color = r.orientation == Orientation::sense_preserving ? "#1f77b4"
                            : r.orientation == Orientation::sense_reversing ? "#d62728"
                                                                            : "#000000";
        s += "<circle cx=\"" + px3(zp.px(r.value.real())) + "\" cy=\"" +
             px3(zp.py(r.value.imag())) + "\" r=\"4.5\" fill=\"" + color + "\"/>\n";
    }
    s += "</g>\n";

    // right pane: the coefficient plane
    s += "<g clip-path=\"url(#clipb)\">\n";
    svg_axes(s, bp);
    const double ray_len =
        3.0 * std::max(std::max(std::abs(bxmin), std::abs(bxmax)),
                       std::max(std::abs(bymin), std::abs(bymax))) +
        1.0;
    for (const auto& ray : pd.rays) {
        const Complex tip = std::polar(ray_len, ray.angle);
        s += "<line x1=\"" + px3(bp.px(0)) + "\" y1=\"" + px3(bp.py(0)) + "\" x2=\"" +
             px3(bp.px(tip.real())) + "\" y2=\"" + px3(bp.py(tip.imag())) +
             "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"" +
             (ray.even ? "2,4" : "8,4") + "\"/>\n";
    }
    for (const auto& curve : pd.locus_curves) {
        if (curve.empty()) continue;
        s += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i <= curve.size(); ++i) {
            Complex z = curve[i % curve.size()];  // close the loop
            s += px3(bp.px(z.real())) + "," + px3(bp.py(z.imag()));
            if (i != curve.size()) s += " ";
        }
        s += "\"/>\n";
    }
    if (pd.rho > 0)
        svg_circle(s, bp, pd.rho,
                   "fill=\"none\" stroke=\"#9467bd\" stroke-width=\"1.5\" "
                   "stroke-dasharray=\"1,3\"");
    if (std::abs(pd.h.b) != 0.0) {
        const Complex b = pd.h.b / pd.h.a;
        const double x = bp.px(b.real()), y = bp.py(b.imag());
        s += "<line x1=\"" + px3(x - 6) + "\" y1=\"" + px3(y - 6) + "\" x2=\"" +
             px3(x + 6) + "\" y2=\"" + px3(y + 6) +
             "\" stroke=\"#2ca02c\" stroke-width=\"2.5\"/>\n";
        s += "<line x1=\"" + px3(x - 6) + "\" y1=\"" + px3(y + 6) + "\" x2=\"" +
             px3(x + 6) + "\" y2=\"" + px3(y - 6) +
             "\" stroke=\"#2ca02c\" stroke-width=\"2.5\"/>\n";
    }
    s += "</g>\n";

    s += "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" "
         "fill=\"#333333\">z plane</text>\n";
    s += "<text x=\"652\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" "
         "fill=\"#333333\">coefficient plane</text>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace harmtri::cli
