#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "harmtri/trinomial.hpp"

namespace harmtri {

enum class LocusKind { b_locus, c_locus };

// rolling-circle parameters of a coefficient locus, general form
// T(phi) = (R - r) e^{i phi} + d e^{i (phase + (R-r)/(2R) phi)}
struct TrochoidParams {
    double R = 0;
    double r = 0;
    double d = 0;
    double phase = 0;  // gamma for the b locus, beta for the c locus
    LocusKind kind = LocusKind::b_locus;
};

struct Ray {
    double angle = 0;  // [0, 2pi)
    int k = 0;         // 0 .. 2(n+m)-1
    bool even = true;  // parity of k
};

struct RaySet {
    int n = 0;
    int m = 0;
    double gamma = 0;
    std::vector<Ray> rays;
};

// result of testing a point against a ray set; the integer value is
// ((n+m) arg b - (n+2m) gamma) / pi, an integer exactly on the rays
struct RayHit {
    std::optional<Ray> ray;
    double integer_value = 0;
    double integer_distance = 0;
};

// consecutive-moduli classification: membership[j-1] says whether the j-th and
// (j+1)-th smallest root moduli differ (doubles counted twice); predicted holds
// the ray-parity forecast, empty where the rule does not apply
struct UjClassification {
    int total = 0;
    std::vector<bool> membership;
    std::vector<std::optional<bool>> predicted;
};

// self-intersection of a sampled locus: same point b reached at two angles
struct DoublePoint {
    Complex b{0, 0};
    double theta1 = 0;
    double theta2 = 0;
};

struct SingularReport {
    double rho = 0;
    std::vector<Complex> cusps;
    std::vector<std::pair<Complex, double>> double_points;  // (b, v)
    double critical_circle_radius = 0;
};

TrochoidParams b_locus_params(int n, int m, Complex c, double v);
std::vector<Complex> b_locus_curve(int n, int m, Complex c, double v, int samples);
TrochoidParams c_locus_params(int n, int m, Complex b, double v);
std::vector<Complex> c_locus_curve(int n, int m, Complex b, double v, int samples);

RaySet ray_set(int n, int m, Complex c);
RayHit on_ray(Complex b, const RaySet& rays, const Tolerances& tol = {});

UjClassification classify_uj(const HarmonicTrinomial& h, const Tolerances& tol = {});

// all b for which z^(n+m) + b zbar^m + c has a double root of modulus v;
// empty when the cusp system has no solution at this v
std::vector<Complex> cusp_candidates(int n, int m, Complex c, double v);

double double_root_angle(int n, int m, Complex c);
double singular_disk_radius(int n, int m, double c_mod);

// |b| at which the middle triangle inequality first fails (the b-dominant
// band is born); observed boundary of the equal-pair region along rays
double band_tangency_radius(int n, int m, double c_mod);

double critical_circle_radius(const HarmonicTrinomial& h);

// discriminant of the analytic trinomial z^(n+m) + b z^m + c (not harmonic)
Complex discriminant_analytic(int n, int m, Complex b, Complex c);

std::vector<DoublePoint> locus_self_intersections(int n, int m, Complex c, double v,
                                                  int samples);

// sweep |b| along a ray of the parity matching n+m and bisect the magnitude
// where the (m, m+1) moduli pair stops being equal
double empirical_disk_radius(int n, int m, Complex c, const Tolerances& tol = {});

}  // namespace harmtri
