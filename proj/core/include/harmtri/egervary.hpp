#pragma once

#include <utility>

#include "harmtri/trinomial.hpp"

namespace harmtri {

enum class EquivalenceBranch { direct, conjugate, none };

inline const char* branch_name(EquivalenceBranch b) {
    switch (b) {
        case EquivalenceBranch::direct: return "direct";
        case EquivalenceBranch::conjugate: return "conjugate";
        default: return "none";
    }
}

struct EquivalenceWitness {
    bool equivalent = false;
    EquivalenceBranch branch = EquivalenceBranch::none;
    double ratio = 0.0;              // common |coefficient| ratio
    double congruence_defect = 0.0;  // radians, distance to 0 mod 2pi, best branch
};

// modulus-ratio chain plus one of the two angular congruences
EquivalenceWitness is_equivalent(const HarmonicTrinomial& h1, const HarmonicTrinomial& h2,
                                 const Tolerances& tol = {});

// normalized form with |c| = 1; roots of h are scale times roots of the result
std::pair<HarmonicTrinomial, double> rescale_to_unit_c(const HarmonicTrinomial& h);

// g(z) = h(-z) expressed as a trinomial again
HarmonicTrinomial negate_variable(const HarmonicTrinomial& h);

}  // namespace harmtri
