#pragma once

#include <vector>

#include "harmtri/trinomial.hpp"

namespace harmtri {

enum class Orientation { sense_preserving, sense_reversing, singular };
enum class MultiplicityClass { simple, multiple };

inline const char* orientation_name(Orientation o) {
    switch (o) {
        case Orientation::sense_preserving: return "sense_preserving";
        case Orientation::sense_reversing: return "sense_reversing";
        default: return "singular";
    }
}

struct RootRecord {
    Complex value{0, 0};
    double modulus = 0.0;
    Orientation orientation = Orientation::sense_preserving;
    MultiplicityClass multiplicity_class = MultiplicityClass::simple;
    double residual = 0.0;
};

struct RootList {
    std::vector<RootRecord> roots;            // sorted by (modulus, argument)
    std::vector<std::vector<int>> groups;     // indices partitioned by equal modulus
};

struct SpectrumGroup {
    double modulus = 0.0;
    int count = 0;
};

// coefficients of p_v(z) = a z^(n+2m) + c z^m + b v^(2m), ascending order.
// every root of h on |z| = v is a root of p_v.
std::vector<Complex> companion_polynomial(const HarmonicTrinomial& h, double v);

// all complex roots, simultaneous Aberth-style iteration. ascending coefficients.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

// |d/dz|^2 - |d/dzbar|^2 of h at z; zero marks a sense boundary (multiple root).
double jacobian(const HarmonicTrinomial& h, Complex z);

// Newton on the real 2x2 system from a nearby guess. returns the last iterate
// once the residual target or the step floor is reached.
Complex newton_polish(const HarmonicTrinomial& h, Complex z0, const Tolerances& tol = {});

// the oracle: every root of h, classified and sorted by modulus.
RootList find_all_roots(const HarmonicTrinomial& h, const Tolerances& tol = {});

std::vector<SpectrumGroup> moduli_spectrum(const RootList& rl);
std::vector<SpectrumGroup> moduli_spectrum(const HarmonicTrinomial& h, const Tolerances& tol = {});

}  // namespace harmtri
