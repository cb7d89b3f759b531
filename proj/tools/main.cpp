#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"

using namespace harmtri;
using namespace harmtri::cli;

namespace {

struct SpecFlags {
    std::string file;
    double are = 1, aim = 0, bre = 0, bim = 0, cre = 0, cim = 0;
    int n = 0, m = 0;
    CLI::Option* o_file = nullptr;
    std::vector<CLI::Option*> inline_opts;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f, const std::string& sfx = "") {
    f.o_file = cmd->add_option("--spec" + sfx, f.file,
                               "structured trinomial description file");
    auto regd = [&](const std::string& name, double& slot, const std::string& help) {
        f.inline_opts.push_back(cmd->add_option(name, slot, help));
    };
    regd("--a" + sfx + "-re", f.are, "leading coefficient, real part (default 1)");
    regd("--a" + sfx + "-im", f.aim, "leading coefficient, imaginary part");
    regd("--b" + sfx + "-re", f.bre, "conjugate-term coefficient, real part");
    regd("--b" + sfx + "-im", f.bim, "conjugate-term coefficient, imaginary part");
    regd("--c" + sfx + "-re", f.cre, "constant term, real part");
    regd("--c" + sfx + "-im", f.cim, "constant term, imaginary part");
    f.inline_opts.push_back(
        cmd->add_option("--n" + sfx, f.n, "exponent n (z power is n+m)"));
    f.inline_opts.push_back(cmd->add_option("--m" + sfx, f.m, "conjugate exponent m"));
}

bool inline_used(const SpecFlags& f) {
    for (const auto* o : f.inline_opts)
        if (o->count() > 0) return true;
    return false;
}

SpecInput resolve_spec(const SpecFlags& f, Json* raw_out = nullptr) {
    if (f.o_file->count() > 0) {
        if (inline_used(f))
            throw ValidationError("give " + f.o_file->get_name() +
                                  " or inline coefficients, not both");
        Json raw = load_json_file(f.file);
        if (raw_out) *raw_out = raw;
        return spec_from_json(raw);
    }
    if (f.n <= 0 || f.m <= 0)
        throw ValidationError("inline input needs positive --n and --m");
    SpecInput s;
    s.a = Complex{f.are, f.aim};
    s.b = Complex{f.bre, f.bim};
    s.c = Complex{f.cre, f.cim};
    s.n = f.n;
    s.m = f.m;
    return s;
}

struct OutFlags {
    std::string out;
    std::string format = "text";
    std::string tol_file;
};

void add_out_flags(CLI::App* cmd, OutFlags& f) {
    cmd->add_option("--out", f.out, "write the result here (default: standard output)");
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    cmd->add_option("--tol-file", f.tol_file, "tolerance overrides (structured file)");
}

Tolerances resolve_tol(const OutFlags& f) {
    return f.tol_file.empty() ? Tolerances{} : tolerances_from_file(f.tol_file);
}

int run_roots(const SpecFlags& sf, const OutFlags& of) {
    const SpecInput s = resolve_spec(sf);
    const HarmonicTrinomial h = to_trinomial(s);
    const Tolerances tol = resolve_tol(of);
    const RootList rl = find_all_roots(h, tol);
    Json doc;
    doc["input"] = j_spec(s);
    doc["roots"] = section_roots(rl);
    doc["spectrum"] = section_spectrum(rl);
    doc["meta"] = section_meta(tol, 0);
    const std::string payload =
        of.format == "structured"
            ? doc.dump(2) + "\n"
            : text_spec(doc["input"]) + text_roots(doc["roots"]) +
                  text_spectrum(doc["spectrum"]);
    emit(of.out, payload);
    return kExitOk;
}

int run_count(const SpecFlags& sf, const OutFlags& of, const std::vector<double>& vs) {
    const SpecInput s = resolve_spec(sf);
    const HarmonicTrinomial h = to_trinomial(s);
    const Tolerances tol = resolve_tol(of);
    int ok = 0;
    Json doc;
    doc["input"] = j_spec(s);
    doc["counts"] = section_counts(h, vs, tol, ok);
    doc["meta"] = section_meta(tol, 0);
    const std::string payload = of.format == "structured"
                                    ? doc.dump(2) + "\n"
                                    : text_spec(doc["input"]) + text_counts(doc["counts"]);
    emit(of.out, payload);
    return ok > 0 ? kExitOk : kExitValidation;
}

int run_equiv(const SpecFlags& sf1, const SpecFlags& sf2, const OutFlags& of) {
    Json raw;
    const SpecInput s1 = resolve_spec(sf1, &raw);
    std::optional<SpecInput> s2;
    if (sf2.o_file->count() > 0 || inline_used(sf2))
        s2 = resolve_spec(sf2);
    else if (!raw.is_null())
        s2 = second_spec_from_json(raw);
    if (!s2)
        throw ValidationError("equivalence needs a second trinomial (--spec2 or --a2-re ...)");
    const Tolerances tol = resolve_tol(of);
    const EquivalenceWitness w = is_equivalent(to_trinomial(s1), to_trinomial(*s2), tol);
    Json doc;
    doc["input"] = Json{{"first", j_spec(s1)}, {"second", j_spec(*s2)}};
    doc["equivalence"] = section_equivalence(w);
    doc["meta"] = section_meta(tol, 0);
    const std::string payload =
        of.format == "structured"
            ? doc.dump(2) + "\n"
            : text_spec(doc["input"]["first"]) + text_spec(doc["input"]["second"]) +
                  text_equivalence(doc["equivalence"]);
    emit(of.out, payload);
    return kExitOk;
}

int run_locus(const std::string& kind, int n, int m, Complex fixed, double v, int samples,
              bool verify, const OutFlags& of) {
    if (std::abs(fixed) == 0.0)
        throw DegenerateCoefficientError("the fixed coefficient of a locus must be nonzero");
    const Tolerances tol = resolve_tol(of);
    const bool is_b = kind == "b";
    const std::vector<Complex> curve = is_b ? b_locus_curve(n, m, fixed, v, samples)
                                            : c_locus_curve(n, m, fixed, v, samples);
    Json params(nullptr);
    std::string warning;
    try {
        params = j_params(is_b ? b_locus_params(n, m, fixed, v)
                               : c_locus_params(n, m, fixed, v));
    } catch (const InvalidGeometryError& e) {
        warning = e.what();
        std::fprintf(stderr, "%s: warning: %s\n", kToolName, e.what());
    }

    int checked = 0, failed = 0;
    if (verify) {
        for (int j = 0; j < samples; j += 32) {
            const HarmonicTrinomial h =
                is_b ? make_trinomial(Complex{1, 0}, curve[j], fixed, n, m)
                     : make_trinomial(Complex{1, 0}, fixed, curve[j], n, m);
            const Complex z = newton_polish(h, std::polar(v, kTwoPi * j / samples), tol);
            ++checked;
            if (std::abs(std::abs(z) - v) > 1e-8 * std::max(1.0, v)) ++failed;
        }
    }

    std::string payload;
    if (of.format == "structured") {
        Json doc;
        doc["input"] = Json{{"kind", is_b ? "b_locus" : "c_locus"}, {"n", n},  {"m", m},
                            {"fixed", j_complex(fixed)},            {"v", v},
                            {"samples", samples}};
        Json loc;
        loc["params"] = params;
        if (!warning.empty()) loc["warning"] = warning;
        if (verify) loc["verify"] = Json{{"checked", checked}, {"failed", failed}};
        Json th = Json::array(), re = Json::array(), im = Json::array();
        for (int j = 0; j < samples; ++j) {
            th.push_back(kTwoPi * j / samples);
            re.push_back(curve[j].real());
            im.push_back(curve[j].imag());
        }
        loc["theta"] = th;
        loc["re"] = re;
        loc["im"] = im;
        doc["locus"] = loc;
        doc["meta"] = section_meta(tol, samples);
        payload = doc.dump(2) + "\n";
    } else {
        std::string s;
        s += "# kind " + std::string(is_b ? "b_locus" : "c_locus") + "\n";
        s += "# n " + std::to_string(n) + " m " + std::to_string(m) + "\n";
        s += "# fixed " + format_complex(fixed) + "\n";
        s += "# v " + g17(v) + "\n";
        if (params.is_null()) {
            s += "# params unavailable: " + warning + "\n";
        } else {
            s += "# R " + g17(params["R"].get<double>()) + " r " +
                 g17(params["r"].get<double>()) + " d " + g17(params["d"].get<double>()) +
                 " phase " + g17(params["phase"].get<double>()) + "\n";
        }
        if (verify)
            s += "# verify " + std::to_string(checked) + " checked, " +
                 std::to_string(failed) + " failed\n";
        s += "theta,re,im\n";
        for (int j = 0; j < samples; ++j)
            s += g17(kTwoPi * j / samples) + "," + g17(curve[j].real()) + "," +
                 g17(curve[j].imag()) + "\n";
        payload = s;
    }
    emit(of.out, payload);
    return failed > 0 ? kExitNumerical : kExitOk;
}

int run_singular(int n, int m, Complex c, const std::vector<double>& vs,
                 std::optional<double> vmin, std::optional<double> vmax, int vcount,
                 const std::vector<double>& b_mags, int samples, const OutFlags& of) {
    if (std::abs(c) == 0.0)
        throw DegenerateCoefficientError("the degeneracy report needs c != 0");
    const Tolerances tol = resolve_tol(of);
    std::vector<double> grid;
    if (vmin || vmax) {
        if (!vmin || !vmax)
            throw ValidationError("--v-min and --v-max must be given together");
        if (!(*vmin > 0) || !(*vmax >= *vmin))
            throw ValidationError("need 0 < --v-min <= --v-max");
        if (vcount < 1) throw ValidationError("--v-count must be at least 1");
        for (int i = 0; i < vcount; ++i)
            grid.push_back(vcount == 1 ? *vmin
                                       : *vmin + (*vmax - *vmin) * i / (vcount - 1.0));
    } else {
        grid.push_back(std::pow(std::abs(c) * m / (n + 2.0 * m), 1.0 / (n + m)));
    }
    Json doc;
    doc["input"] = Json{{"n", n}, {"m", m}, {"c", j_complex(c)}};
    doc["singular"] = section_singular(n, m, c, b_mags, grid, vs, samples, tol);
    doc["meta"] = section_meta(tol, samples);
    const std::string payload = of.format == "structured"
                                    ? doc.dump(2) + "\n"
                                    : text_singular(doc["singular"]);
    emit(of.out, payload);
    return kExitOk;
}

int run_plot(const SpecFlags& sf, const std::vector<double>& vs,
             const std::vector<double>& circles, int samples, bool locus_only,
             const std::string& out, const std::string& tol_file) {
    const SpecInput s = resolve_spec(sf);
    const HarmonicTrinomial h = to_trinomial(s);
    const Tolerances tol = tol_file.empty() ? Tolerances{} : tolerances_from_file(tol_file);
    PlotData pd;
    pd.h = h;
    pd.vs = vs;
    pd.extra_circles = circles;
    if (!locus_only) {
        try {
            pd.roots = find_all_roots(h, tol).roots;
        } catch (const Error& e) {
            std::fprintf(stderr, "%s: warning: roots unavailable (%s)\n", kToolName,
                         e.what());
        }
    }
    if (std::abs(h.c) != 0.0) {
        const Complex cn = h.c / h.a;
        for (double v : vs) pd.locus_curves.push_back(b_locus_curve(h.n, h.m, cn, v, samples));
        pd.rays = ray_set(h.n, h.m, cn).rays;
        pd.rho = singular_disk_radius(h.n, h.m, std::abs(cn));
    }
    if (std::abs(h.b) != 0.0) pd.critical_radius = critical_circle_radius(h);
    emit(out, svg_figure(pd));
    return kExitOk;
}

int run_report(const SpecFlags& sf1, const SpecFlags& sf2, const OutFlags& of,
               const std::vector<double>& vs, int samples) {
    Json raw;
    const SpecInput s = resolve_spec(sf1, &raw);
    const HarmonicTrinomial h = to_trinomial(s);
    std::optional<SpecInput> s2;
    if (sf2.o_file->count() > 0 || inline_used(sf2))
        s2 = resolve_spec(sf2);
    else if (!raw.is_null())
        s2 = second_spec_from_json(raw);
    const Tolerances tol = resolve_tol(of);

    int rc = kExitOk;
    auto note = [&](int code) {
        if (rc == kExitOk) rc = code;
    };

    Json roots_j, spectrum_j;
    RootList rl;
    bool have_rl = false;
    try {
        rl = find_all_roots(h, tol);
        have_rl = true;
        roots_j = section_roots(rl);
        spectrum_j = section_spectrum(rl);
    } catch (const std::exception& e) {
        roots_j = Json{{"error", e.what()}};
        spectrum_j = Json{{"error", e.what()}};
        note(error_exit_code(e));
    }

    std::vector<double> vlist = vs;
    if (vlist.empty() && have_rl) {
        const auto spec = moduli_spectrum(rl);
        if (!spec.empty()) {
            vlist.push_back(0.5 * spec.front().modulus);
            for (size_t i = 0; i + 1 < spec.size(); ++i)
                vlist.push_back(0.5 * (spec[i].modulus + spec[i + 1].modulus));
            vlist.push_back(1.5 * spec.back().modulus);
        }
    }
    int ok = 0;
    Json counts_j = section_counts(h, vlist, tol, ok);
    if (ok < static_cast<int>(vlist.size())) note(kExitValidation);

    Json tri_j = section_triangle(h, tol);
    if (tri_j.is_object() && tri_j.contains("error")) note(kExitNumerical);
    Json uj_j = section_uj(h, tol);
    if (uj_j.is_object() && uj_j.contains("error")) note(kExitNumerical);
    Json rays_j = section_rays(h, tol);

    Json sing_j(nullptr);
    if (std::abs(h.c) != 0.0) {
        const Complex cn = h.c / h.a;
        std::vector<double> b_mags;
        if (std::abs(h.b) != 0.0) b_mags.push_back(std::abs(h.b / h.a));
        const double v_cusp =
            std::pow(std::abs(cn) * h.m / (h.n + 2.0 * h.m), 1.0 / (h.n + h.m));
        sing_j = section_singular(h.n, h.m, cn, b_mags, {v_cusp}, vs, samples, tol);
        for (const auto& e : sing_j["double_points"])
            if (e.contains("error")) note(kExitNumerical);
    }

    Json equiv_j(nullptr);
    if (s2) {
        try {
            equiv_j = section_equivalence(is_equivalent(h, to_trinomial(*s2), tol));
        } catch (const std::exception& e) {
            equiv_j = Json{{"error", e.what()}};
            note(error_exit_code(e));
        }
    }

    Json doc;
    doc["input"] = s2 ? Json{{"first", j_spec(s)}, {"second", j_spec(*s2)}} : j_spec(s);
    doc["triangle_profile"] = tri_j;
    doc["counts"] = counts_j;
    doc["roots"] = roots_j;
    doc["spectrum"] = spectrum_j;
    doc["uj"] = uj_j;
    doc["rays"] = rays_j;
    doc["singular"] = sing_j;
    doc["equivalence"] = equiv_j;
    doc["meta"] = section_meta(tol, samples);

    std::string payload;
    if (of.format == "structured") {
        payload = doc.dump(2) + "\n";
    } else {
        std::string t;
        t += s2 ? text_spec(doc["input"]["first"]) + text_spec(doc["input"]["second"])
                : text_spec(doc["input"]);
        t += text_triangle(doc["triangle_profile"]);
        t += text_counts(doc["counts"]);
        if (doc["roots"].contains("error"))
            t += "roots: failed (" + doc["roots"]["error"].get<std::string>() + ")\n";
        else
            t += text_roots(doc["roots"]) + text_spectrum(doc["spectrum"]);
        t += text_uj(doc["uj"]);
        t += text_rays(doc["rays"]);
        t += text_singular(doc["singular"]);
        if (!doc["equivalence"].is_null()) {
            if (doc["equivalence"].contains("error"))
                t += "equivalence: failed (" +
                     doc["equivalence"]["error"].get<std::string>() + ")\n";
            else
                t += text_equivalence(doc["equivalence"]);
        }
        payload = t;
    }
    emit(of.out, payload);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic trinomial analyzer: a z^(n+m) + b zbar^m + c, coprime n, m"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* c_roots = app.add_subcommand("roots", "find and classify every root");
    SpecFlags sf_roots;
    OutFlags of_roots;
    add_spec_flags(c_roots, sf_roots);
    add_out_flags(c_roots, of_roots);

    auto* c_count = app.add_subcommand("count", "count roots below given radii");
    SpecFlags sf_count;
    OutFlags of_count;
    std::vector<double> count_vs;
    add_spec_flags(c_count, sf_count);
    add_out_flags(c_count, of_count);
    c_count->add_option("--v", count_vs, "radius to count below (repeatable)")->required();

    auto* c_equiv = app.add_subcommand("equiv", "test two trinomials for equivalence");
    SpecFlags sf_equiv1, sf_equiv2;
    OutFlags of_equiv;
    add_spec_flags(c_equiv, sf_equiv1);
    add_spec_flags(c_equiv, sf_equiv2, "2");
    add_out_flags(c_equiv, of_equiv);

    auto* c_locus = app.add_subcommand("locus", "sample a coefficient locus");
    OutFlags of_locus;
    std::string locus_kind;
    int locus_n = 0, locus_m = 0, locus_samples = 2048;
    double locus_fre = 0, locus_fim = 0, locus_v = 0;
    bool locus_verify = false;
    c_locus->add_option("--kind", locus_kind, "which coefficient varies")
        ->required()
        ->check(CLI::IsMember({"b", "c"}));
    c_locus->add_option("--n", locus_n, "exponent n")->required();
    c_locus->add_option("--m", locus_m, "conjugate exponent m")->required();
    c_locus->add_option("--c-re", locus_fre, "fixed c, real part (b locus)");
    c_locus->add_option("--c-im", locus_fim, "fixed c, imaginary part (b locus)");
    c_locus->add_option("--b-re", locus_fre, "fixed b, real part (c locus)");
    c_locus->add_option("--b-im", locus_fim, "fixed b, imaginary part (c locus)");
    c_locus->add_option("--v", locus_v, "root modulus the locus realizes")->required();
    c_locus->add_option("--samples", locus_samples, "points on the curve")
        ->check(CLI::Range(16, 1000000))
        ->capture_default_str();
    c_locus->add_flag("--verify", locus_verify, "check every 32nd sample against the solver");
    add_out_flags(c_locus, of_locus);

    auto* c_sing = app.add_subcommand("singular", "degeneracy landscape for fixed c");
    OutFlags of_sing;
    int sing_n = 0, sing_m = 0, sing_vcount = 9, sing_samples = 2048;
    double sing_cre = 0, sing_cim = 0;
    std::vector<double> sing_vs, sing_bmags;
    std::optional<double> sing_vmin, sing_vmax;
    double sing_vmin_val = 0, sing_vmax_val = 0;
    c_sing->add_option("--n", sing_n, "exponent n")->required();
    c_sing->add_option("--m", sing_m, "conjugate exponent m")->required();
    c_sing->add_option("--c-re", sing_cre, "c, real part")->required();
    c_sing->add_option("--c-im", sing_cim, "c, imaginary part");
    c_sing->add_option("--v", sing_vs, "radius for locus double points (repeatable)");
    auto* o_vmin = c_sing->add_option("--v-min", sing_vmin_val, "cusp scan start");
    auto* o_vmax = c_sing->add_option("--v-max", sing_vmax_val, "cusp scan end");
    c_sing->add_option("--v-count", sing_vcount, "cusp scan grid size")
        ->capture_default_str();
    c_sing->add_option("--b-mag", sing_bmags, "report the critical circle for |b| (repeatable)");
    c_sing->add_option("--samples", sing_samples, "curve sampling for double points")
        ->check(CLI::Range(16, 1000000))
        ->capture_default_str();
    add_out_flags(c_sing, of_sing);

    auto* c_plot = app.add_subcommand("plot", "draw roots, locus, rays and disks");
    SpecFlags sf_plot;
    std::vector<double> plot_vs, plot_circles;
    int plot_samples = 2048;
    bool plot_locus_only = false;
    std::string plot_out, plot_tol;
    add_spec_flags(c_plot, sf_plot);
    c_plot->add_option("--v", plot_vs, "locus radius (repeatable)")->required();
    c_plot->add_option("--circle", plot_circles, "extra circle radius in the z pane");
    c_plot->add_option("--samples", plot_samples, "points per locus curve")
        ->check(CLI::Range(16, 1000000))
        ->capture_default_str();
    c_plot->add_flag("--locus-only", plot_locus_only, "skip the root solve");
    c_plot->add_option("--out", plot_out, "output figure path")->required();
    c_plot->add_option("--tol-file", plot_tol, "tolerance overrides (structured file)");

    auto* c_report = app.add_subcommand("report", "run every analysis on one trinomial");
    SpecFlags sf_report1, sf_report2;
    OutFlags of_report;
    std::vector<double> report_vs;
    int report_samples = 2048;
    add_spec_flags(c_report, sf_report1);
    add_spec_flags(c_report, sf_report2, "2");
    add_out_flags(c_report, of_report);
    c_report->add_option("--v", report_vs, "radius for counts and double points (repeatable)");
    c_report->add_option("--samples", report_samples, "curve sampling for double points")
        ->check(CLI::Range(16, 1000000))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (c_roots->parsed()) return run_roots(sf_roots, of_roots);
        if (c_count->parsed()) return run_count(sf_count, of_count, count_vs);
        if (c_equiv->parsed()) return run_equiv(sf_equiv1, sf_equiv2, of_equiv);
        if (c_locus->parsed())
            return run_locus(locus_kind, locus_n, locus_m, Complex{locus_fre, locus_fim},
                             locus_v, locus_samples, locus_verify, of_locus);
        if (c_sing->parsed()) {
            if (o_vmin->count() > 0) sing_vmin = sing_vmin_val;
            if (o_vmax->count() > 0) sing_vmax = sing_vmax_val;
            return run_singular(sing_n, sing_m, Complex{sing_cre, sing_cim}, sing_vs,
                                sing_vmin, sing_vmax, sing_vcount, sing_bmags,
                                sing_samples, of_sing);
        }
        if (c_plot->parsed())
            return run_plot(sf_plot, plot_vs, plot_circles, plot_samples, plot_locus_only,
                            plot_out, plot_tol);
        if (c_report->parsed())
            return run_report(sf_report1, sf_report2, of_report, report_vs, report_samples);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s: %s\n", kToolName, e.what());
        return error_exit_code(e);
    }
    return kExitValidation;
}
