#pragma once

#include "relkin/scalar_kinematics.hpp"

namespace relkin {

/// Rotation angle in reciprocity space, held as the normalized half-angle
/// pair (sin(phi/2), cos(phi/2)). The Moebius parameter is
/// r = half_num/half_den = tan(phi/2); at phi = pi the pair is exactly
/// (1, 0), so the r = infinity pole is an ordinary value instead of an
/// overflow. All maps taking a rotation are degree-0 homogeneous in the
/// pair, so the normalization is a convention, not a requirement.
class ReciprocityRotation {
public:
    /// phi = 0 (identity map).
    static ReciprocityRotation identity() { return {0.0, 0.0, 1.0}; }

    /// phi = pi exactly (the reciprocal map).
    static ReciprocityRotation pole() { return {kPi, 1.0, 0.0}; }

    /// From an angle in radians, reduced mod 2*pi. Note: from_angle(pi) with
    /// the double closest to pi lands within one ulp of the pole but is not
    /// it; use pole() (or the CLI literal "pi") for the exact case.
    static ReciprocityRotation from_angle(double phi);

    static ReciprocityRotation from_degrees(double deg);

    /// From an arbitrary (num, den) ~ (sin(phi/2), cos(phi/2)) ray; the pair
    /// is scaled to unit length and canonicalized so phi lands in [0, 2*pi).
    static ReciprocityRotation from_half_pair(double num, double den);

    double phi() const { return phi_; }
    double half_num() const { return half_num_; }
    double half_den() const { return half_den_; }

    bool is_pole() const { return half_den_ == 0.0; }
    bool is_identity() const { return half_num_ == 0.0; }

private:
    ReciprocityRotation(double phi, double num, double den)
        : phi_(phi), half_num_(num), half_den_(den) {}

    static constexpr double kPi = 3.14159265358979323846;

    double phi_;
    double half_num_;
    double half_den_;
};

/// Angle addition on the half-angle pairs; phi-values compose mod 2*pi.
ReciprocityRotation compose_rotations(const ReciprocityRotation& a,
                                      const ReciprocityRotation& b);

/// Velocity composition (u +/- v) / (1 +/- u v) over complex scalars; with
/// second argument i*tan(phi/2) it reproduces the reciprocity rotation.
ComplexScalar compose_complex(ComplexScalar u, ComplexScalar v,
                              Sign sign = Sign::plus);

/// The Moebius rotation of a velocity,
/// (v half_den + i half_num) / (half_den + i v half_num):
/// phi = 0 is the identity, phi = pi the exact reciprocal 1/v.
ComplexScalar rotate_velocity(Beta beta, const ReciprocityRotation& rot);

/// Same map extended to complex arguments (needed to iterate rotations).
ComplexScalar rotate_velocity(ComplexScalar v, const ReciprocityRotation& rot);

/// Rotation of a coordinate: homogeneous form of
/// (x + i t r) / (1 + i (x/t) r); phi = pi gives t^2/x.
ComplexScalar rotate_coordinate(const Event1D& e, const ReciprocityRotation& rot);

/// The reciprocal coordinate x* = t^2 / x (c = 1), so x* x = t^2.
double reciprocal_coordinate(const Event1D& e);

}  // namespace relkin
