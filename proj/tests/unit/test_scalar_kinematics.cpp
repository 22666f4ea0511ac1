#include <doctest.h>

#include <cmath>

#include "relkin/scalar_kinematics.hpp"
#include "relkin/sweep.hpp"

using namespace relkin;

TEST_CASE("slowness is the sign-preserving reciprocal") {
    CHECK(slowness(Beta(0.5)).value == 2.0);
    CHECK(slowness(Beta(1.0)).value == 1.0);  // light speed is the fixed point
    CHECK(slowness(Beta(-0.6)).value == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(slowness(Beta(0.0)), ZeroVelocity);
}

TEST_CASE("slowness is an involution") {
    sweep::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double b = sweep::Samplers::beta(rng);
        CHECK(slowness(slowness(Beta(b))).value ==
              doctest::Approx(b).epsilon(1e-14));
    }
}

TEST_CASE("compose matches the velocity-addition formula") {
    CHECK(compose(Beta(0.5), Beta(0.0)).value == 0.5);  // identity element
    CHECK(compose(Beta(0.6), Beta(0.8)).value ==
          doctest::Approx(35.0 / 37.0).epsilon(1e-15));
    CHECK(compose(Beta(1.0), Beta(0.7)).value == 1.0);  // light-speed fixed point
    CHECK(compose(Beta(0.5), Beta(0.5), Sign::minus).value == 0.0);
}

TEST_CASE("compose rejects the degenerate denominator") {
    // Only reachable with superluminal inputs: 1 - 2*0.5 = 0.
    CHECK_THROWS_AS(compose(Beta(2.0), Beta(0.5), Sign::minus),
                    DegenerateDenominator);
    CHECK_THROWS_AS(compose(Beta(-2.0), Beta(0.5), Sign::plus),
                    DegenerateDenominator);
}

TEST_CASE("composition of subluminal speeds stays subluminal") {
    sweep::Rng rng(12);
    for (int i = 0; i < 2000; ++i) {
        const double u = sweep::Samplers::beta(rng);
        const double v = sweep::Samplers::beta(rng);
        CHECK(std::abs(compose(Beta(u), Beta(v)).value) <= 1.0);
        CHECK(std::abs(compose(Beta(u), Beta(v), Sign::minus).value) <= 1.0);
    }
}

TEST_CASE("boost_event examples") {
    const Event1D id = boost_event(Event1D(4, 5), Beta(0.0));
    CHECK(id.x == 4.0);
    CHECK(id.t == 5.0);

    const Event1D out = boost_event(Event1D(4, 5), Beta(0.6));
    CHECK(out.x == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(out.t == doctest::Approx(3.25).epsilon(1e-14));

    const Event1D origin = boost_event(Event1D(0, 0), Beta(0.77));
    CHECK(origin.x == 0.0);
    CHECK(origin.t == 0.0);

    CHECK_THROWS_AS(boost_event(Event1D(1, 2), Beta(1.0)), SuperluminalBoost);
    CHECK_THROWS_AS(boost_event(Event1D(1, 2), Beta(-1.2)), SuperluminalBoost);
}

TEST_CASE("boost then inverse boost returns the event") {
    sweep::Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Event1D e = sweep::Samplers::event1d(rng);
        const Beta b(sweep::Samplers::beta(rng));
        const Event1D back = boost_event(boost_event(e, b), Beta(-b.value));
        CHECK(std::abs(back.x - e.x) < 1e-12);
        CHECK(std::abs(back.t - e.t) < 1e-12);
    }
}

TEST_CASE("interval examples and preservation") {
    CHECK(interval(Event1D(4, 5)).value == 9.0);  // 25 - 16
    CHECK(interval(Event1D(0, 0)).value == 0.0);
    CHECK(interval(boost_event(Event1D(4, 5), Beta(0.6))).value ==
          doctest::Approx(9.0).epsilon(1e-14));

    sweep::Rng rng(14);
    for (int i = 0; i < 1000; ++i) {
        const Event1D e = sweep::Samplers::event1d(rng);
        const Beta b(sweep::Samplers::beta(rng));
        const double res =
            interval(boost_event(e, b)).value - interval(e).value;
        CHECK(std::abs(res) < 1e-12);
    }
}

TEST_CASE("reciprocal symmetry residual") {
    // Both sides 35/37.
    CHECK(reciprocal_symmetry_residual(Beta(0.6), Beta(0.8)) < 1e-15);
    // Both sides exactly 0.8 in floats.
    CHECK(reciprocal_symmetry_residual(Beta(0.5), Beta(0.5)) == 0.0);
    // Light speed is self-reciprocal.
    CHECK(reciprocal_symmetry_residual(Beta(1.0), Beta(1.0)) == 0.0);
    CHECK_THROWS_AS(reciprocal_symmetry_residual(Beta(0.0), Beta(0.5)),
                    ZeroVelocity);

    sweep::Rng rng(15);
    for (int i = 0; i < 1000; ++i) {
        const double u = sweep::Samplers::beta(rng);
        const double v = sweep::Samplers::beta(rng);
        CHECK(reciprocal_symmetry_residual(Beta(u), Beta(v)) < 1e-12);
    }
}

TEST_CASE("domain types reject non-finite values") {
    CHECK_THROWS_AS(Beta{std::nan("")}, InvalidParameters);
    CHECK_THROWS_AS(Beta{INFINITY}, InvalidParameters);
    CHECK_THROWS_AS(Event1D(1.0, std::nan("")), InvalidParameters);
    CHECK_THROWS_AS(Event1D(INFINITY, 0.0), InvalidParameters);
}
