#include "relkin/mobius_reciprocity.hpp"

#include <cmath>

namespace relkin {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

ReciprocityRotation ReciprocityRotation::from_angle(double phi) {
    if (!std::isfinite(phi)) throw InvalidParameters("phi must be finite");
    double reduced = std::fmod(phi, kTwoPi);
    if (reduced < 0.0) reduced += kTwoPi;
    if (reduced == 0.0) return identity();
    // reduced/2 in (0, pi), so sin(reduced/2) > 0: already canonical.
    return {reduced, std::sin(reduced / 2.0), std::cos(reduced / 2.0)};
}

ReciprocityRotation ReciprocityRotation::from_degrees(double deg) {
    if (!std::isfinite(deg)) throw InvalidParameters("phi-deg must be finite");
    double reduced = std::fmod(deg, 360.0);
    if (reduced < 0.0) reduced += 360.0;
    if (reduced == 0.0) return identity();
    if (reduced == 180.0) return pole();
    return from_angle(reduced * kPi / 180.0);
}

ReciprocityRotation ReciprocityRotation::from_half_pair(double num, double den) {
    if (!std::isfinite(num) || !std::isfinite(den))
        throw InvalidParameters("half-angle pair must be finite");
    if (num == 0.0 && den == 0.0)
        throw InvalidParameters("half-angle pair must be nonzero");
    // The pair is projective: (num, den) and (-num, -den) are the same
    // rotation. Pick the representative with num > 0, or num == 0, den > 0.
    if (num < 0.0 || (num == 0.0 && den < 0.0)) {
        num = -num;
        den = -den;
    }
    const double scale = std::hypot(num, den);
    num /= scale;
    den /= scale;
    if (num == 0.0) return identity();
    if (den == 0.0) return pole();
    return {2.0 * std::atan2(num, den), num, den};
}

ReciprocityRotation compose_rotations(const ReciprocityRotation& a,
                                      const ReciprocityRotation& b) {
    const double num = a.half_num() * b.half_den() + a.half_den() * b.half_num();
    const double den = a.half_den() * b.half_den() - a.half_num() * b.half_num();
    return ReciprocityRotation::from_half_pair(num, den);
}

ComplexScalar compose_complex(ComplexScalar u, ComplexScalar v, Sign sign) {
    const double s = (sign == Sign::plus) ? 1.0 : -1.0;
    const ComplexScalar den = 1.0 + s * u * v;
    if (den == ComplexScalar(0.0, 0.0))
        throw DegenerateDenominator("compose: 1 +/- u v = 0");
    return (u + s * v) / den;
}

ComplexScalar rotate_velocity(ComplexScalar v, const ReciprocityRotation& rot) {
    if (rot.is_identity()) return v;
    if (rot.is_pole()) {
        if (v == ComplexScalar(0.0, 0.0))
            throw ZeroVelocity("rotation by pi of v = 0");
        return 1.0 / v;
    }
    const double hs = rot.half_num();
    const double hc = rot.half_den();
    return (v * hc + ComplexScalar(0.0, hs)) /
           (hc + ComplexScalar(0.0, hs) * v);
}

ComplexScalar rotate_velocity(Beta beta, const ReciprocityRotation& rot) {
    if (rot.is_identity()) return {beta.value, 0.0};
    if (rot.is_pole()) {
        if (beta.value == 0.0)
            throw ZeroVelocity("rotation by pi of v = 0");
        return {1.0 / beta.value, 0.0};
    }
    const double hs = rot.half_num();
    const double hc = rot.half_den();
    return ComplexScalar(beta.value * hc, hs) /
           ComplexScalar(hc, beta.value * hs);
}

ComplexScalar rotate_coordinate(const Event1D& e, const ReciprocityRotation& rot) {
    if (e.t == 0.0) throw ZeroTime("coordinate rotation requires t != 0");
    if (rot.is_identity()) return {e.x, 0.0};
    if (rot.is_pole()) {
        if (e.x == 0.0)
            throw ZeroCoordinate("rotation by pi of x = 0");
        return {e.t * e.t / e.x, 0.0};
    }
    const double hs = rot.half_num();
    const double hc = rot.half_den();
    return e.t * ComplexScalar(e.x * hc, e.t * hs) /
           ComplexScalar(e.t * hc, e.x * hs);
}

double reciprocal_coordinate(const Event1D& e) {
    if (e.x == 0.0)
        throw ZeroCoordinate("reciprocal coordinate undefined for x = 0");
    return e.t * e.t / e.x;
}

}  // namespace relkin
