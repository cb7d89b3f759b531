#include <doctest.h>

#include <cmath>

#include "harmtri/triangle.hpp"
#include "helpers.hpp"

using namespace harmtri;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_SUITE("triangle") {

TEST_CASE("side lengths on reference instances") {
    auto h = make_trinomial({1, 0}, {1, 0}, {kSqrt2, 0}, 2, 1);
    auto s = side_lengths(h, 1.0);
    CHECK(s.sA == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.sB == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.sC == doctest::Approx(kSqrt2).epsilon(1e-14));

    auto g = make_trinomial({1, 0}, {-5, 0}, {2, 0}, 1, 3);
    auto t = side_lengths(g, 2.0);
    CHECK(t.sA == doctest::Approx(16.0));
    CHECK(t.sB == doctest::Approx(40.0));
    CHECK(t.sC == doctest::Approx(2.0));
}

TEST_CASE("side lengths are nonnegative") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto h = testutil::random_trinomial(rng);
        auto s = side_lengths(h, 0.01 + (rng() % 1000) / 100.0);
        CHECK(s.sA >= 0);
        CHECK(s.sB >= 0);
        CHECK(s.sC >= 0);
    }
}

TEST_CASE("radial polynomial values") {
    auto h = make_trinomial({1, 0}, {-1.5, 0}, {0.5, 0}, 1, 2);
    CHECK(radial_polynomials(h, 1.0).B == doctest::Approx(0.0).epsilon(1e-14));

    auto g = make_trinomial({1, 0}, {-5, 0}, {2, 0}, 1, 3);
    CHECK(radial_polynomials(g, 0.5).C > 0);
}

TEST_CASE("radial identity A + C == -2 sB") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        auto h = testutil::random_trinomial(rng);
        double v = 0.05 + (rng() % 1000) / 250.0;
        auto r = radial_polynomials(h, v);
        auto s = side_lengths(h, v);
        CHECK(r.A + r.C == doctest::Approx(-2 * s.sB).epsilon(1e-12));
    }
}

TEST_CASE("profile breakpoints of the pair instance") {
    auto h = make_trinomial({1, 0}, {-6, 0}, {1, 0}, 3, 2);
    auto p = triangle_profile(h);
    REQUIRE(p.kind == BRadiiKind::pair);
    CHECK(p.b1 == doctest::Approx(0.410624).epsilon(1e-5));
    CHECK(p.b2 == doctest::Approx(1.784863).epsilon(1e-5));
}

TEST_CASE("profile with a double breakpoint") {
    auto h = make_trinomial({1, 0}, {-1.5, 0}, {0.5, 0}, 1, 2);
    auto p = triangle_profile(h);
    REQUIRE(p.kind == BRadiiKind::double_root);
    CHECK(p.b1 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("profile brackets the unit radius for the triangle instance") {
    auto h = make_trinomial({1, 0}, {1, 0}, {kSqrt2, 0}, 2, 1);
    auto p = triangle_profile(h);
    CHECK(p.kind == BRadiiKind::none);
    CHECK(p.c_radius < 1.0);
    CHECK(p.a_radius > 1.0);
}

TEST_CASE("profile requires nonzero b and c") {
    CHECK_THROWS_AS(triangle_profile(make_trinomial({1, 0}, {0, 0}, {1, 0}, 2, 1)),
                    DegenerateCoefficientError);
    CHECK_THROWS_AS(triangle_profile(make_trinomial({1, 0}, {1, 0}, {0, 0}, 2, 1)),
                    DegenerateCoefficientError);
}

TEST_CASE("profile ordering and defining equations on random draws") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10000; ++i) {
        auto h = testutil::random_trinomial(rng);
        auto p = triangle_profile(h);
        auto ra = radial_polynomials(h, p.a_radius);
        auto rc = radial_polynomials(h, p.c_radius);
        auto sa = side_lengths(h, p.a_radius);
        auto sc = side_lengths(h, p.c_radius);
        CHECK(std::abs(ra.A) <= 1e-10 * (sa.sA + sa.sB + sa.sC));
        CHECK(std::abs(rc.C) <= 1e-10 * (sc.sA + sc.sB + sc.sC));
        CHECK(p.c_radius < p.a_radius);
        if (p.kind != BRadiiKind::none) {
            CHECK(p.c_radius <= p.b1);
            CHECK(p.b1 <= p.b2);
            CHECK(p.b2 <= p.a_radius);
        }
    }
}

TEST_CASE("angles of the reference triangles") {
    auto [w1, w2] = angles_from_sides(1.0, 1.0, kSqrt2);
    CHECK(w1 == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(w2 == doctest::Approx(kPi / 4).epsilon(1e-14));

    auto [e1, e2] = angles_from_sides(3.0, 3.0, 3.0);
    CHECK(e1 == doctest::Approx(kPi / 3).epsilon(1e-14));
    CHECK(e2 == doctest::Approx(kPi / 3).epsilon(1e-14));
}

TEST_CASE("angle opposite the near-degenerate side approaches pi") {
    double sB = 1.0, sC = 1.0;
    double sA = sB + sC - 1e-6;
    auto [w1, w2] = angles_from_sides(sA, sB, sC);
    CHECK(w1 > kPi - 0.01);
    CHECK(w2 < 0.01);
}

TEST_CASE("angle errors") {
    CHECK_THROWS_AS(angles_from_sides(5.0, 1.0, 1.0), NotATriangleError);
    CHECK_THROWS_AS(angles_from_sides(2.0, 1.0, 1.0), DegenerateTriangleError);
    CHECK_THROWS_AS(angles_from_sides(2.0 - 1e-12, 1.0, 1.0), DegenerateTriangleError);
}

TEST_CASE("angle sum stays below pi") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> side(0.1, 10.0);
    int tested = 0;
    while (tested < 2000) {
        double sA = side(rng), sB = side(rng), sC = side(rng);
        try {
            auto [w1, w2] = angles_from_sides(sA, sB, sC);
            CHECK(w1 + w2 < kPi);
            CHECK(w1 > 0);
            CHECK(w2 > 0);
            ++tested;
        } catch (const Error&) {
        }
    }
}

TEST_CASE("triangle_angles matches the side form") {
    auto h = make_trinomial({1, 0}, {1, 0}, {kSqrt2, 0}, 2, 1);
    auto [w1, w2] = triangle_angles(h, 1.0);
    CHECK(w1 == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(w2 == doctest::Approx(kPi / 4).epsilon(1e-14));
}

}  // TEST_SUITE
