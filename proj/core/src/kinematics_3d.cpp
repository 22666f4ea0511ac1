#include "relkin/kinematics_3d.hpp"

#include <cmath>

namespace relkin {

namespace {

// Unit-norm rational directions like (3,4,0)/5 accumulate an ulp of rounding
// in their squared norm; the light-cone boundary checks allow for it.
constexpr double kBoundarySlack = 1e-12;

bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

ComplexScalar dot(const CVec3& a, const CVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

ReciprocityAxis::ReciprocityAxis(const Vec3& direction,
                                 const ReciprocityRotation& rot)
    : n_(direction), rot_(rot) {
    if (!finite(direction))
        throw InvalidParameters("axis direction must be finite");
    const double len = norm(direction);
    if (len == 0.0)
        throw InvalidParameters("axis direction must be nonzero");
    n_ = (1.0 / len) * direction;
}

Vec3 reciprocal_velocity_3d(const Vec3& V, const ReciprocityAxis& axis) {
    const double v2 = dot(V, V);
    if (v2 == 0.0) throw ZeroVelocity("3d reciprocal of V = 0");
    if (v2 > 1.0 + kBoundarySlack)
        throw SuperluminalInput("3d reciprocal requires |V| <= 1");
    const double s = std::sqrt(std::max(0.0, 1.0 - v2));
    const double a = dot(axis.unit(), V);
    if (a == 0.0)
        throw PerpendicularAxis("3d reciprocal requires n.V != 0");
    return ((1.0 - s) / v2) * V + (s / a) * axis.unit();
}

Vec3 reciprocal_position_3d(const Vec3& X, double t, const ReciprocityAxis& axis) {
    const double xx = dot(X, X);
    if (xx == 0.0) throw ZeroCoordinate("3d reciprocal of X = 0");
    if (t == 0.0) throw ZeroTime("3d reciprocal requires t != 0");
    if (t < 0.0 || xx > t * t * (1.0 + kBoundarySlack))
        throw SpacelikeInput("3d reciprocal requires |X| <= t");
    const double sx = std::sqrt(std::max(0.0, 1.0 - xx / (t * t)));
    const double b = dot(axis.unit(), X);
    if (b == 0.0)
        throw PerpendicularAxis("3d reciprocal requires n.X != 0");
    return (t * t) * (((1.0 - sx) / xx) * X + (sx / b) * axis.unit());
}

CVec3 rotate_velocity_3d(const Vec3& V, const ReciprocityAxis& axis) {
    const ReciprocityRotation& rot = axis.rotation();
    if (rot.is_identity()) return CVec3::from_real(V);
    const double v2 = dot(V, V);
    if (v2 == 0.0) throw ZeroVelocity("3d rotation of V = 0");
    if (v2 > 1.0 + kBoundarySlack)
        throw SuperluminalInput("3d rotation requires |V| <= 1");
    const double s = std::sqrt(std::max(0.0, 1.0 - v2));
    const double a = dot(axis.unit(), V);
    if (rot.is_pole() && a == 0.0)
        throw PerpendicularAxis("rotation by pi requires n.V != 0");
    const double hs = rot.half_num();
    const double hc = rot.half_den();
    const Vec3 imag = ((1.0 - s) * a / v2) * V + s * axis.unit();
    const CVec3 num = hc * CVec3::from_real(V) +
                      ComplexScalar(0.0, hs) * CVec3::from_real(imag);
    return num / ComplexScalar(hc, hs * a);
}

CVec3 rotate_position_3d(const Vec3& X, double t, const ReciprocityAxis& axis) {
    if (t == 0.0) throw ZeroTime("3d rotation requires t != 0");
    const ReciprocityRotation& rot = axis.rotation();
    if (rot.is_identity()) return CVec3::from_real(X);
    const double xx = dot(X, X);
    if (xx == 0.0) throw ZeroCoordinate("3d rotation of X = 0");
    if (t < 0.0 || xx > t * t * (1.0 + kBoundarySlack))
        throw SpacelikeInput("3d rotation requires |X| <= t");
    const double sx = std::sqrt(std::max(0.0, 1.0 - xx / (t * t)));
    const double b = dot(axis.unit(), X);
    if (rot.is_pole() && b == 0.0)
        throw PerpendicularAxis("rotation by pi requires n.X != 0");
    const double hs = rot.half_num();
    const double hc = rot.half_den();
    const Vec3 imag = ((1.0 - sx) * b / xx) * X + sx * axis.unit();
    const CVec3 num = (t * hc) * CVec3::from_real(X) +
                      ComplexScalar(0.0, hs * t * t) * CVec3::from_real(imag);
    return num / ComplexScalar(t * hc, hs * b);
}

ComplexScalar G_factor(const Vec3& X, double t, const Vec3& V,
                       const ReciprocityAxis& axis) {
    if (t == 0.0) throw ZeroTime("G-factor requires t != 0");
    const double v2 = dot(V, V);
    if (v2 >= 1.0) throw SuperluminalBoost("boost requires |V| < 1");
    const double root = std::sqrt(1.0 - v2);
    const ReciprocityRotation& rot = axis.rotation();
    if (rot.is_identity()) return {1.0 / root, 0.0};
    const double a = dot(axis.unit(), V);
    const double b = dot(axis.unit(), X);
    const double hs = rot.half_num();
    const double hc = rot.half_den();
    if (rot.is_pole()) return {-(b * a) / (t * root), 0.0};
    return ComplexScalar(t * hc, hs * b) * ComplexScalar(hc, hs * a) /
           (t * (hs * hs + hc * hc) * root);
}

GeneralizedEvent3D generalized_boost_3d(const Vec3& X, double t, const Vec3& V,
                                        const ReciprocityAxis& axis) {
    const CVec3 Xr = rotate_position_3d(X, t, axis);
    const CVec3 Vr = rotate_velocity_3d(V, axis);
    const ComplexScalar G = G_factor(X, t, V, axis);
    const double s = std::sqrt(1.0 - dot(V, V));  // real V, as printed
    const ComplexScalar vr2 = dot(Vr, Vr);
    if (vr2 == ComplexScalar(0.0, 0.0))
        throw DegenerateRotatedVelocity("rotated velocity squares to zero");
    const ComplexScalar xv = dot(Xr, Vr);
    const ComplexScalar coef = (1.0 - s) * xv / vr2 - t;
    return {G * (ComplexScalar(s, 0.0) * Xr + coef * Vr), G * (t - xv)};
}

ComplexScalar invariance_residual_3d(const Vec3& X, double t, const Vec3& V,
                                     const ReciprocityAxis& axis) {
    const GeneralizedEvent3D out = generalized_boost_3d(X, t, V, axis);
    const ComplexScalar lhs =
        out.t_out * out.t_out - dot(out.X_out, out.X_out);
    return lhs - ComplexScalar(t * t - dot(X, X), 0.0);
}

std::pair<Vec3, double> standard_boost_3d(const Vec3& X, double t, const Vec3& V) {
    const double v2 = dot(V, V);
    if (v2 >= 1.0) throw SuperluminalBoost("boost requires |V| < 1");
    if (v2 == 0.0) return {X, t};
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    const double xv = dot(X, V);
    const Vec3 Xp = X + ((gamma - 1.0) * xv / v2 - gamma * t) * V;
    return {Xp, gamma * (t - xv)};
}

}  // namespace relkin
