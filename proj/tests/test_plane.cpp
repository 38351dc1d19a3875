#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "confspace/plane.hpp"

using namespace confspace;

TEST_CASE("forward map on a unit-separation pair") {
    PlanarPair p{{0.0, 0.0}, {1.0, 0.0}};
    ProductPoint q = pair_to_product(p);
    CHECK(q.a[0] == doctest::Approx(0.0));
    CHECK(q.a[1] == doctest::Approx(0.0));
    CHECK(q.t == doctest::Approx(0.0));  // ln 1
    CHECK(q.u[0] == doctest::Approx(-1.0));
    CHECK(q.u[1] == doctest::Approx(0.0));
}

TEST_CASE("the first point is carried unchanged") {
    PlanarPair p{{3.5, -2.25}, {4.0, 1.0}};
    ProductPoint q = pair_to_product(p);
    CHECK(q.a[0] == 3.5);
    CHECK(q.a[1] == -2.25);
    CHECK(std::hypot(q.u[0], q.u[1]) == doctest::Approx(1.0));
}

TEST_CASE("round trip both directions over many separations") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> center(-100.0, 100.0);
    std::uniform_real_distribution<double> logsep(std::log(1e-6), std::log(1e6));
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    double worst = 0.0;
    for (int trial = 0; trial < 100000; ++trial) {
        PlanarPair p;
        p.x = {center(rng), center(rng)};
        double r = std::exp(logsep(rng));
        double th = angle(rng);
        p.y = {p.x[0] + r * std::cos(th), p.x[1] + r * std::sin(th)};
        ProductPoint q = pair_to_product(p);
        PlanarPair back = product_to_pair(q);
        for (int i = 0; i < 2; ++i) {
            worst = std::max(worst, std::abs(back.x[i] - p.x[i]));
            worst = std::max(worst, std::abs(back.y[i] - p.y[i]));
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("inverse then forward") {
    ProductPoint q{{1.0, 2.0}, -3.0, {0.6, 0.8}};
    PlanarPair p = product_to_pair(q);
    ProductPoint q2 = pair_to_product(p);
    CHECK(q2.a[0] == doctest::Approx(1.0));
    CHECK(q2.a[1] == doctest::Approx(2.0));
    CHECK(q2.t == doctest::Approx(-3.0));
    CHECK(q2.u[0] == doctest::Approx(0.6));
    CHECK(q2.u[1] == doctest::Approx(0.8));
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(pair_to_product({{1.0, 1.0}, {1.0, 1.0}}), DegeneratePairError);
    double nan = std::nan("");
    CHECK_THROWS_AS(pair_to_product({{nan, 0.0}, {0.0, 0.0}}), DegeneratePairError);
    // Non-unit direction on the inverse side.
    CHECK_THROWS_AS(product_to_pair({{0.0, 0.0}, 0.0, {0.5, 0.5}}),
                    DegeneratePairError);
}

TEST_CASE("continuity across the diagonal is impossible, small separations fine") {
    PlanarPair p{{0.0, 0.0}, {1e-6, 0.0}};
    ProductPoint q = pair_to_product(p);
    CHECK(q.t == doctest::Approx(std::log(1e-6)));
    PlanarPair back = product_to_pair(q);
    CHECK(back.y[0] == doctest::Approx(1e-6).epsilon(1e-12));
}
