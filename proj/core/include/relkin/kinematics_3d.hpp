#pragma once

#include <utility>

#include "relkin/generalized_boost_1d.hpp"

namespace relkin {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Vec3 operator*(double k, const Vec3& v) {
        return {k * v.x, k * v.y, k * v.z};
    }
    friend bool operator==(const Vec3& a, const Vec3& b) = default;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

/// Complex 3-vector. dot() is bilinear (sum a_i b_i, no conjugation): the
/// squared-interval expressions square complex quantities algebraically.
struct CVec3 {
    ComplexScalar x{0.0, 0.0};
    ComplexScalar y{0.0, 0.0};
    ComplexScalar z{0.0, 0.0};

    static CVec3 from_real(const Vec3& v) {
        return {{v.x, 0.0}, {v.y, 0.0}, {v.z, 0.0}};
    }

    friend CVec3 operator+(const CVec3& a, const CVec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend CVec3 operator*(const ComplexScalar& k, const CVec3& v) {
        return {k * v.x, k * v.y, k * v.z};
    }
    friend CVec3 operator/(const CVec3& v, const ComplexScalar& k) {
        return {v.x / k, v.y / k, v.z / k};
    }
};

ComplexScalar dot(const CVec3& a, const CVec3& b);

/// Rotation axis n (unit by construction) plus the reciprocity angle: the
/// rotation vector tan(phi/2) n kept in homogeneous half-angle form.
class ReciprocityAxis {
public:
    /// Normalizes the direction; throws InvalidParameters on a zero vector.
    ReciprocityAxis(const Vec3& direction, const ReciprocityRotation& rot);

    const Vec3& unit() const { return n_; }
    const ReciprocityRotation& rotation() const { return rot_; }

private:
    Vec3 n_;
    ReciprocityRotation rot_;
};

struct GeneralizedEvent3D {
    CVec3 X_out;
    ComplexScalar t_out;
};

/// The V* with V*.V = 1 (c = 1). Depends on the axis only through its
/// direction, never through |r|.
Vec3 reciprocal_velocity_3d(const Vec3& V, const ReciprocityAxis& axis);

/// The X* with X*.X = t^2.
Vec3 reciprocal_position_3d(const Vec3& X, double t, const ReciprocityAxis& axis);

/// Reciprocity rotation of a 3-velocity; phi = 0 is the identity, phi = pi
/// lands on reciprocal_velocity_3d.
CVec3 rotate_velocity_3d(const Vec3& V, const ReciprocityAxis& axis);

CVec3 rotate_position_3d(const Vec3& X, double t, const ReciprocityAxis& axis);

/// The 3D complex factor generalizing gamma, in half-angle form; reduces to
/// the 1D g-factor when X, V and the axis are collinear.
ComplexScalar G_factor(const Vec3& X, double t, const Vec3& V,
                       const ReciprocityAxis& axis);

/// The generalized vector boost built from one shared evaluation of the
/// rotated pair (X~, V~). sqrt(1 - V^2) uses the real input V.
GeneralizedEvent3D generalized_boost_3d(const Vec3& X, double t, const Vec3& V,
                                        const ReciprocityAxis& axis);

/// (t_out^2 - X_out.X_out) - (t^2 - X.X), bilinear complex arithmetic.
ComplexScalar invariance_residual_3d(const Vec3& X, double t, const Vec3& V,
                                     const ReciprocityAxis& axis);

/// The classical real vector boost; reference for the phi = 0 reduction.
std::pair<Vec3, double> standard_boost_3d(const Vec3& X, double t, const Vec3& V);

}  // namespace relkin
