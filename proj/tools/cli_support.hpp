#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmtri/bohl.hpp"
#include "harmtri/egervary.hpp"
#include "harmtri/errors.hpp"
#include "harmtri/geometry.hpp"
#include "harmtri/roots.hpp"
#include "harmtri/triangle.hpp"
#include "json.hpp"

namespace harmtri::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "harmtri";
inline constexpr const char* kToolVersion = "1.0.0";

// exit codes: 0 ok, 2 bad input, 3 numerical failure, 4 I/O
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

struct IoError : Error {
    using Error::Error;
};

int error_exit_code(const std::exception& e);

struct SpecInput {
    Complex a{1, 0};
    Complex b{0, 0};
    Complex c{0, 0};
    int n = 0;
    int m = 0;
};

HarmonicTrinomial to_trinomial(const SpecInput& s);

Json load_json_file(const std::string& path);
SpecInput spec_from_json(const Json& j);
std::optional<SpecInput> second_spec_from_json(const Json& j);
Tolerances tolerances_from_file(const std::string& path);

std::string g17(double x);
std::string g12(double x);
std::string format_complex(Complex z);

// file target or stdout when path is empty; files land via temp + rename
void emit(const std::string& path, const std::string& payload);

Json j_complex(Complex z);
Json j_spec(const SpecInput& s);
Json j_params(const TrochoidParams& p);

Json section_meta(const Tolerances& tol, int samples);
Json section_triangle(const HarmonicTrinomial& h, const Tolerances& tol);
Json section_counts(const HarmonicTrinomial& h, const std::vector<double>& vs,
                    const Tolerances& tol, int& ok_count);
Json section_roots(const RootList& rl);
Json section_spectrum(const RootList& rl);
Json section_uj(const HarmonicTrinomial& h, const Tolerances& tol);
Json section_rays(const HarmonicTrinomial& h, const Tolerances& tol);
Json section_singular(int n, int m, Complex c, const std::vector<double>& b_mags,
                      const std::vector<double>& cusp_grid,
                      const std::vector<double>& intersection_vs, int samples,
                      const Tolerances& tol);
Json section_equivalence(const EquivalenceWitness& w);

// text views of the fragments above
std::string text_spec(const Json& input);
std::string text_triangle(const Json& j);
std::string text_counts(const Json& j);
std::string text_roots(const Json& j);
std::string text_spectrum(const Json& j);
std::string text_uj(const Json& j);
std::string text_rays(const Json& j);
std::string text_singular(const Json& j);
std::string text_equivalence(const Json& j);

// two-pane vector figure: roots against their circles, coefficient plane
// with the locus, rays, the b marker and the degeneracy disk
struct PlotData {
    HarmonicTrinomial h;
    std::vector<double> vs;
    std::vector<RootRecord> roots;
    std::vector<std::vector<Complex>> locus_curves;  // one per v
    std::vector<Ray> rays;
    double rho = 0;                   // 0 = omit
    double critical_radius = 0;       // 0 = omit
    std::vector<double> extra_circles;
};

std::string svg_figure(const PlotData& pd);

}  // namespace harmtri::cli
