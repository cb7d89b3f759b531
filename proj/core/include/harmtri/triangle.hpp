#pragma once

#include <utility>

#include "harmtri/trinomial.hpp"

namespace harmtri {

struct SideLengths {
    double sA = 0;  // |a| v^(n+m)
    double sB = 0;  // |b| v^m
    double sC = 0;  // |c|
};

struct RadialValues {
    double A = 0;  // sA - sB - sC
    double B = 0;  // -sA + sB - sC
    double C = 0;  // -sA - sB + sC
};

enum class BRadiiKind { none, double_root, pair };

// Radii bounding the region where the three side lengths close a triangle.
// C has its unique positive root at c_radius, A at a_radius; B is unimodal
// with peak at b_peak and has 0, 1 or 2 positive roots in between.
struct TriangleProfile {
    double c_radius = 0;
    double a_radius = 0;
    BRadiiKind kind = BRadiiKind::none;
    double b1 = 0;      // kind != none; b1 == b2 for double_root
    double b2 = 0;
    double b_peak = 0;  // argmax of B, (m|b| / ((n+m)|a|))^(1/n)
};

SideLengths side_lengths(const HarmonicTrinomial& h, double v);

RadialValues radial_polynomials(const HarmonicTrinomial& h, double v);

// Requires b != 0 and c != 0.
TriangleProfile triangle_profile(const HarmonicTrinomial& h, const Tolerances& tol = {});

// Angles opposite the sides sA (first) and sB (second), law of cosines.
// Throws NotATriangleError / DegenerateTriangleError.
std::pair<double, double> angles_from_sides(double sA, double sB, double sC,
                                            const Tolerances& tol = {});

std::pair<double, double> triangle_angles(const HarmonicTrinomial& h, double v,
                                          const Tolerances& tol = {});

}  // namespace harmtri
