#pragma once

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "harmtri/trinomial.hpp"

namespace testutil {

using harmtri::Complex;
using harmtri::HarmonicTrinomial;

inline const std::vector<std::pair<int, int>>& coprime_pairs() {
    static const std::vector<std::pair<int, int>> pairs = {
        {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2},
        {2, 3}, {4, 1}, {4, 3}, {5, 2}, {5, 3}, {7, 5},
    };
    return pairs;
}

inline Complex random_coeff(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mod(0.2, 5.0);
    std::uniform_real_distribution<double> ang(0.0, harmtri::kTwoPi);
    double r = mod(rng), t = ang(rng);
    return Complex(r * std::cos(t), r * std::sin(t));
}

inline HarmonicTrinomial random_trinomial(std::mt19937_64& rng) {
    auto [n, m] = coprime_pairs()[rng() % coprime_pairs().size()];
    return harmtri::make_trinomial(random_coeff(rng), random_coeff(rng), random_coeff(rng), n, m);
}

// monic, real b and c with random signs
inline HarmonicTrinomial random_real_trinomial(std::mt19937_64& rng) {
    auto [n, m] = coprime_pairs()[rng() % coprime_pairs().size()];
    std::uniform_real_distribution<double> mod(0.2, 5.0);
    auto signedreal = [&]() { return Complex(((rng() & 1) ? 1.0 : -1.0) * mod(rng), 0.0); };
    return harmtri::make_trinomial(Complex(1, 0), signedreal(), signedreal(), n, m);
}

}  // namespace testutil
