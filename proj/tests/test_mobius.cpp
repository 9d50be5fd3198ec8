#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coset/mobius.hpp"

#include <cmath>
#include <random>

using namespace coset;

namespace {

psl2 random_element(std::mt19937& rng) {
    std::uniform_real_distribution<double> par(-3.0, 3.0);
    return translation(par(rng)) * dilation(par(rng)) * rotation(par(rng));
}

} // namespace

TEST_CASE("boundary action of the generators") {
    psl2 id;
    CHECK(mobius_apply(id, finite_point(3)).x == doctest::Approx(3));
    CHECK(mobius_apply(translation(2), finite_point(1)).x == doctest::Approx(3));
    CHECK(mobius_apply(shear(1), finite_point(1)).x == doctest::Approx(0.5));
    CHECK(mobius_apply(dilation(std::log(4.0)), finite_point(2)).x == doctest::Approx(8));

    boundary_point pole = mobius_apply(shear(1), finite_point(-1));
    CHECK(pole.infinite);
    boundary_point back = mobius_apply(translation(5), point_at_infinity());
    CHECK(back.infinite);
}

TEST_CASE("cayley transform corners and round trip") {
    CHECK(std::abs(cayley(finite_point(0)) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(cayley(point_at_infinity()) - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(std::abs(cayley(finite_point(1)) - std::complex<double>(0, 1)) < 1e-12);
    for (double x : {-7.0, -1.3, 0.0, 0.25, 2.0, 40.0}) {
        boundary_point p = cayley_inverse(cayley(finite_point(x)));
        REQUIRE(!p.infinite);
        CHECK(p.x == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("circle picture round trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        psl2 g = random_element(rng);
        CHECK(proj_dist(from_circle(to_circle(g)), g) < 1e-10);
    }
}

TEST_CASE("dilation word in shears and translations") {
    for (double tau = -2.0; tau <= 2.01; tau += 0.25) {
        double s = std::exp(tau / 2);
        psl2 word = shear(-(s - 1) / s) * translation(1) * shear(s - 1) * translation(-1 / s);
        CHECK(proj_dist(word, dilation(tau)) < 1e-10);
    }
}

TEST_CASE("rotation word in shears and translations") {
    for (double t = 0.1; t < 3.1; t += 0.2) {
        double n = (std::cos(t) - 1) / std::sin(t);
        psl2 word = shear(n) * translation(std::sin(t)) * shear(n);
        CHECK(proj_dist(word, rotation(2 * t)) < 1e-10);
    }
}

TEST_CASE("shear as a rotated translation") {
    for (double n = -3.0; n <= 3.01; n += 0.5) {
        psl2 word = rotation(std::acos(-1.0)) * translation(n) * rotation(-std::acos(-1.0));
        CHECK(proj_dist(word, shear(-n)) < 1e-10);
    }
}

TEST_CASE("iwasawa factors of simple elements") {
    iwasawa_factors id = iwasawa_decompose(psl2{});
    CHECK(std::abs(id.p) < 1e-12);
    CHECK(std::abs(id.tau) < 1e-12);
    CHECK(std::abs(id.t) < 1e-12);

    iwasawa_factors dil = iwasawa_decompose(dilation(1.5));
    CHECK(dil.p == doctest::Approx(0).epsilon(1e-12));
    CHECK(dil.tau == doctest::Approx(1.5));
    CHECK(dil.t == doctest::Approx(0).epsilon(1e-12));

    iwasawa_factors mix = iwasawa_decompose(translation(2) * dilation(1) * rotation(0.3));
    CHECK(mix.p == doctest::Approx(2));
    CHECK(mix.tau == doctest::Approx(1));
    CHECK(mix.t == doctest::Approx(0.3));
}

TEST_CASE("iwasawa round trip on random elements") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        psl2 g = random_element(rng);
        iwasawa_factors f = iwasawa_decompose(g);
        psl2 recon = translation(f.p) * dilation(f.tau) * rotation(f.t);
        CHECK(proj_dist(recon, g) < 1e-10);
    }
}

TEST_CASE("projective square root") {
    CHECK(proj_dist(sqrt_psl(psl2{}), psl2{}) < 1e-12);
    CHECK(proj_dist(sqrt_psl(translation(2)), translation(1)) < 1e-10);

    std::mt19937 rng(13);
    for (int i = 0; i < 1000; ++i) {
        psl2 g = random_element(rng);
        psl2 h = sqrt_psl(g);
        CHECK(proj_dist(h * h, g) < 1e-9);
    }
}

TEST_CASE("iterated square roots contract to the identity") {
    psl2 g = rotation(2.9) * translation(1.2);
    for (int i = 0; i < 40; ++i) g = sqrt_psl(g);
    CHECK(proj_dist(g, psl2{}) < 1e-6);
}
