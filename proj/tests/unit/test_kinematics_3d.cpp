#include <doctest.h>

#include <cmath>

#include "relkin/kinematics_3d.hpp"
#include "relkin/oracle.hpp"
#include "relkin/sweep.hpp"

using namespace relkin;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Vec3 kEx{1, 0, 0};

ReciprocityAxis axis_x(const ReciprocityRotation& rot) { return {kEx, rot}; }
}

TEST_CASE("vector basics") {
    CHECK(dot(Vec3{1, 2, 3}, Vec3{4, -5, 6}) == 12.0);
    CHECK(norm(Vec3{3, 4, 0}) == 5.0);
    // Bilinear complex dot: i.i = -1, no conjugation.
    const CVec3 iv{{0, 1}, {0, 0}, {0, 0}};
    CHECK(dot(iv, iv) == ComplexScalar(-1, 0));
}

TEST_CASE("axis normalizes its direction") {
    const ReciprocityAxis a({3, 4, 0}, ReciprocityRotation::identity());
    CHECK(a.unit().x == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(a.unit().y == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs(norm(a.unit()) - 1.0) < 1e-14);
    CHECK_THROWS_AS(ReciprocityAxis({0, 0, 0}, ReciprocityRotation::identity()),
                    InvalidParameters);
}

TEST_CASE("reciprocal_velocity_3d") {
    const auto axis = axis_x(ReciprocityRotation::identity());

    const Vec3 collinear = reciprocal_velocity_3d({0.6, 0, 0}, axis);
    CHECK(collinear.x == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(collinear.y == 0.0);

    const Vec3 skew = reciprocal_velocity_3d({0.36, 0.48, 0}, axis);
    CHECK(skew.x == doctest::Approx(109.0 / 45.0).epsilon(1e-14));
    CHECK(skew.y == doctest::Approx(4.0 / 15.0).epsilon(1e-14));
    CHECK(skew.z == 0.0);
    CHECK(dot(skew, Vec3{0.36, 0.48, 0}) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(reciprocal_velocity_3d({0, 0.5, 0}, axis), PerpendicularAxis);
    CHECK_THROWS_AS(reciprocal_velocity_3d({0, 0, 0}, axis), ZeroVelocity);
    CHECK_THROWS_AS(reciprocal_velocity_3d({1.2, 0, 0}, axis), SuperluminalInput);

    // The light cone is fixed: |V| = 1 gives V* = V.
    const Vec3 unit = reciprocal_velocity_3d({0.6, 0.8, 0}, axis);
    CHECK(unit.x == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(unit.y == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("reciprocal_position_3d") {
    const auto axis = axis_x(ReciprocityRotation::identity());

    const Vec3 collinear = reciprocal_position_3d({3, 0, 0}, 5.0, axis);
    CHECK(collinear.x == doctest::Approx(25.0 / 3.0).epsilon(1e-14));

    const Vec3 skew = reciprocal_position_3d({1.8, 2.4, 0}, 5.0, axis);
    CHECK(dot(skew, Vec3{1.8, 2.4, 0}) == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(skew.x == doctest::Approx(109.0 / 9.0).epsilon(1e-14));
    CHECK(skew.y == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(reciprocal_position_3d({0, 1, 0}, 2.0, axis), PerpendicularAxis);
    CHECK_THROWS_AS(reciprocal_position_3d({0, 0, 0}, 2.0, axis), ZeroCoordinate);
    CHECK_THROWS_AS(reciprocal_position_3d({1, 0, 0}, 0.0, axis), ZeroTime);
    CHECK_THROWS_AS(reciprocal_position_3d({3, 0, 0}, 2.0, axis), SpacelikeInput);
    CHECK_THROWS_AS(reciprocal_position_3d({1, 0, 0}, -2.0, axis), SpacelikeInput);
}

TEST_CASE("rotate_velocity_3d limits and reductions") {
    // phi = 0 is the identity, even for V = 0.
    const CVec3 id = rotate_velocity_3d({0.2, 0.3, 0.4},
                                        axis_x(ReciprocityRotation::identity()));
    CHECK(id.x == ComplexScalar(0.2, 0));
    CHECK(id.y == ComplexScalar(0.3, 0));
    const CVec3 zero = rotate_velocity_3d({0, 0, 0},
                                          axis_x(ReciprocityRotation::identity()));
    CHECK(zero.x == ComplexScalar(0, 0));

    // Collinear quarter turn reproduces the 1D Moebius value.
    const CVec3 q = rotate_velocity_3d(
        {0.6, 0, 0}, axis_x(ReciprocityRotation::from_angle(kPi / 2.0)));
    CHECK(q.x.real() == doctest::Approx(15.0 / 17.0).epsilon(1e-14));
    CHECK(q.x.imag() == doctest::Approx(8.0 / 17.0).epsilon(1e-14));
    CHECK(std::abs(q.y) == 0.0);

    // Pole equals the reciprocal.
    const CVec3 pole =
        rotate_velocity_3d({0.36, 0.48, 0}, axis_x(ReciprocityRotation::pole()));
    CHECK(pole.x.real() == doctest::Approx(109.0 / 45.0).epsilon(1e-13));
    CHECK(pole.y.real() == doctest::Approx(4.0 / 15.0).epsilon(1e-13));
    CHECK(std::abs(pole.x.imag()) < 1e-15);

    CHECK_THROWS_AS(rotate_velocity_3d({0, 0, 0},
                                       axis_x(ReciprocityRotation::from_angle(0.5))),
                    ZeroVelocity);
    CHECK_THROWS_AS(rotate_velocity_3d({0, 0.5, 0},
                                       axis_x(ReciprocityRotation::pole())),
                    PerpendicularAxis);
}

TEST_CASE("rotate_position_3d limits and reductions") {
    const CVec3 id = rotate_position_3d({3, 0, 0}, 5.0,
                                        axis_x(ReciprocityRotation::identity()));
    CHECK(id.x == ComplexScalar(3, 0));

    // Spatial origin is fine when the rotation is trivial (needed by the
    // standard-boost reduction).
    const CVec3 origin = rotate_position_3d({0, 0, 0}, 1.0,
                                            axis_x(ReciprocityRotation::identity()));
    CHECK(origin.x == ComplexScalar(0, 0));

    const CVec3 pole =
        rotate_position_3d({3, 0, 0}, 5.0, axis_x(ReciprocityRotation::pole()));
    CHECK(pole.x.real() == doctest::Approx(25.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(pole.x.imag()) < 1e-15);

    const CVec3 q = rotate_position_3d(
        {3, 0, 0}, 5.0, axis_x(ReciprocityRotation::from_angle(kPi / 2.0)));
    CHECK(q.x.real() == doctest::Approx(75.0 / 17.0).epsilon(1e-14));
    CHECK(q.x.imag() == doctest::Approx(40.0 / 17.0).epsilon(1e-14));

    CHECK_THROWS_AS(rotate_position_3d({0, 0, 0}, 1.0,
                                       axis_x(ReciprocityRotation::from_angle(0.5))),
                    ZeroCoordinate);
    CHECK_THROWS_AS(rotate_position_3d({1, 0, 0}, 0.0,
                                       axis_x(ReciprocityRotation::pole())),
                    ZeroTime);
    CHECK_THROWS_AS(rotate_position_3d({3, 0, 0}, 2.0,
                                       axis_x(ReciprocityRotation::from_angle(0.5))),
                    SpacelikeInput);
}

TEST_CASE("G_factor matches gamma and the 1D g-factor") {
    const Vec3 X{4, 0, 0};
    const Vec3 V{0.6, 0, 0};

    const ComplexScalar id = G_factor(X, 5.0, V, axis_x(ReciprocityRotation::identity()));
    CHECK(id.real() == 1.0 / std::sqrt(1.0 - dot(V, V)));
    CHECK(id.imag() == 0.0);

    for (const auto& rot : {ReciprocityRotation::from_angle(kPi / 2.0),
                            ReciprocityRotation::pole(),
                            ReciprocityRotation::from_angle(1.9)}) {
        const ComplexScalar G = G_factor(X, 5.0, V, axis_x(rot));
        const ComplexScalar g = g_factor(Event1D(4, 5), Beta(0.6), rot);
        CHECK(std::abs(G - g) < 1e-15);
    }

    const ComplexScalar q =
        G_factor(X, 5.0, V, axis_x(ReciprocityRotation::from_angle(kPi / 2.0)));
    CHECK(q.real() == doctest::Approx(0.325).epsilon(1e-14));
    CHECK(q.imag() == doctest::Approx(0.875).epsilon(1e-14));

    CHECK_THROWS_AS(G_factor(X, 5.0, {1, 0, 0}, axis_x(ReciprocityRotation::pole())),
                    SuperluminalBoost);
    CHECK_THROWS_AS(G_factor(X, 0.0, V, axis_x(ReciprocityRotation::pole())),
                    ZeroTime);
}

TEST_CASE("generalized_boost_3d reductions") {
    // phi = 0 on the x-axis is the standard boost.
    const auto out = generalized_boost_3d({4, 0, 0}, 5.0, {0.6, 0, 0},
                                          axis_x(ReciprocityRotation::identity()));
    CHECK(out.X_out.x.real() == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(out.t_out.real() == doctest::Approx(3.25).epsilon(1e-14));
    CHECK(std::abs(out.X_out.y) == 0.0);

    // Boost of the spatial origin: (-gamma V t, gamma t).
    const auto origin = generalized_boost_3d({0, 0, 0}, 1.0, {0.6, 0, 0},
                                             axis_x(ReciprocityRotation::identity()));
    CHECK(origin.X_out.x.real() == doctest::Approx(-0.75).epsilon(1e-14));
    CHECK(origin.t_out.real() == doctest::Approx(1.25).epsilon(1e-14));

    // Collinear quarter turn equals the 1D pipeline on the axis.
    const auto q3 = generalized_boost_3d(
        {4, 0, 0}, 5.0, {0.6, 0, 0}, axis_x(ReciprocityRotation::from_angle(kPi / 2.0)));
    const auto q1 = generalized_boost(Event1D(4, 5), Beta(0.6),
                                      ReciprocityRotation::from_angle(kPi / 2.0));
    CHECK(std::abs(q3.X_out.x - q1.x_out) < 1e-13);
    CHECK(std::abs(q3.t_out - q1.t_out) < 1e-13);
    CHECK(std::abs(q3.X_out.y) < 1e-15);

    // V = 0 boosts are excluded through the degenerate rotated square.
    CHECK_THROWS_AS(generalized_boost_3d({1, 0, 0}, 2.0, {0, 0, 0},
                                         axis_x(ReciprocityRotation::identity())),
                    DegenerateRotatedVelocity);
}

TEST_CASE("phi = 0 reduction against the standard vector boost, random configs") {
    sweep::Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        const auto cfg = sweep::Samplers::config3d(rng);
        const ReciprocityAxis axis(cfg.n, ReciprocityRotation::identity());
        const auto out = generalized_boost_3d(cfg.X, cfg.t, cfg.V, axis);
        const auto [Xs, ts] = standard_boost_3d(cfg.X, cfg.t, cfg.V);
        CHECK(std::abs(out.X_out.x - ComplexScalar(Xs.x, 0)) < 1e-12);
        CHECK(std::abs(out.X_out.y - ComplexScalar(Xs.y, 0)) < 1e-12);
        CHECK(std::abs(out.X_out.z - ComplexScalar(Xs.z, 0)) < 1e-12);
        CHECK(std::abs(out.t_out - ComplexScalar(ts, 0)) < 1e-12);
    }
}

TEST_CASE("interval residual: zero on the reducible families") {
    sweep::Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        const auto cfg = sweep::Samplers::config3d(rng);
        CHECK(std::abs(invariance_residual_3d(
                  cfg.X, cfg.t, cfg.V,
                  ReciprocityAxis(cfg.n, ReciprocityRotation::identity()))) < 1e-12);

        const auto col = sweep::Samplers::collinear3d(rng);
        const auto rot = ReciprocityRotation::from_angle(rng.uniform(0, 2 * kPi));
        CHECK(std::abs(invariance_residual_3d(col.X, col.t, col.V,
                                              ReciprocityAxis(col.n, rot))) < 1e-10);
    }
}

TEST_CASE("interval residual: genuinely nonzero off the reducible families") {
    // Frozen non-collinear witness; the exact value comes from the oracle and
    // the float evaluation must sit on top of it.
    const Vec3 X{24.0 / 17.0, 32.0 / 17.0, 0};
    const Vec3 V{3.0 / 13.0, 4.0 / 13.0, 0};
    const Vec3 n{1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
    const auto rot = ReciprocityRotation::from_half_pair(1.0, 2.0);  // r = 1/2
    const ComplexScalar res = invariance_residual_3d(X, 5.0, V, ReciprocityAxis(n, rot));

    namespace oc = relkin::oracle;
    const oc::ExactAxis axis({oc::BigRational(1, 3), oc::BigRational(2, 3),
                              oc::BigRational(2, 3)},
                             {oc::BigRational(1), oc::BigRational(2)});
    const oc::ComplexRational exact = oc::invariance_residual_3d(
        {oc::BigRational(24, 17), oc::BigRational(32, 17), 0}, 5,
        {oc::BigRational(3, 13), oc::BigRational(4, 13), 0}, axis);
    CHECK(!exact.is_zero());
    CHECK(res.real() == doctest::Approx(oc::to_double(exact.re)).epsilon(1e-10));
    CHECK(res.imag() == doctest::Approx(oc::to_double(exact.im)).epsilon(1e-10));
    CHECK(std::abs(res) > 1e-3);
}

TEST_CASE("standard_boost_3d basics") {
    const auto [X0, t0] = standard_boost_3d({1, 2, 3}, 4.0, {0, 0, 0});
    CHECK(X0 == Vec3{1, 2, 3});
    CHECK(t0 == 4.0);
    CHECK_THROWS_AS(standard_boost_3d({1, 0, 0}, 1.0, {1, 0, 0}), SuperluminalBoost);
}
