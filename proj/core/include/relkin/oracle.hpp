#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "relkin/rational.hpp"
#include "relkin/scalar_kinematics.hpp"

// Exact complex-rational mirror of every 1D and 3D operation. Each identity
// the floating-point build is tested against is first confirmed here with
// zero rounding error; a failed exact identity is a defect, never a
// tolerance issue. Operations raise IrrationalRoot instead of rounding when
// an input would require an irrational square root, so admissible inputs
// come from the Pythagorean generators below.
namespace relkin::oracle {

/// Half-angle parameter r = num/den in projective form; den == 0 encodes the
/// phi = pi pole (r = infinity). Every formula below is degree-0 homogeneous
/// in (num, den), so no normalization is ever needed.
struct RotationParam {
    BigRational num;
    BigRational den;

    static RotationParam from_r(const BigRational& r) { return {r, 1}; }
    static RotationParam identity() { return {0, 1}; }
    static RotationParam pole() { return {1, 0}; }

    bool is_pole() const { return den == 0; }
};

/// tan addition on the projective parameter; matches composing the angles.
RotationParam compose_rotations(const RotationParam& a, const RotationParam& b);

/// beta = (m^2 - n^2)/(m^2 + n^2) with sqrt(1 - beta^2) = 2mn/(m^2 + n^2)
/// exactly: a velocity whose gamma-factor data is rational.
struct PythagoreanBeta {
    BigInt m;
    BigInt n;

    BigRational beta() const;
    BigRational root() const;
};

PythagoreanBeta gen_pythagorean_beta(const BigInt& m, const BigInt& n);

struct RVec3 {
    BigRational x, y, z;

    friend bool operator==(const RVec3&, const RVec3&) = default;
    friend RVec3 operator+(const RVec3& a, const RVec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend RVec3 operator*(const BigRational& k, const RVec3& v) {
        return {k * v.x, k * v.y, k * v.z};
    }
};

BigRational dot(const RVec3& a, const RVec3& b);

struct CRVec3 {
    ComplexRational x, y, z;

    static CRVec3 from_real(const RVec3& v) { return {v.x, v.y, v.z}; }

    friend bool operator==(const CRVec3&, const CRVec3&) = default;
    friend CRVec3 operator+(const CRVec3& a, const CRVec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend CRVec3 operator*(const ComplexRational& k, const CRVec3& v) {
        return {k * v.x, k * v.y, k * v.z};
    }
    friend CRVec3 operator/(const CRVec3& v, const ComplexRational& k) {
        return {v.x / k, v.y / k, v.z / k};
    }
};

ComplexRational dot(const CRVec3& a, const CRVec3& b);  // bilinear

/// Built-in table of integer vectors with integer norm, e.g. (1,2,2) -> 3.
struct Vec3Family {
    std::array<int, 3> components;
    int norm;
};

const std::vector<Vec3Family>& rational_vec3_families();

struct ScaledVec3 {
    RVec3 vec;
    BigRational norm;
};

/// family_id indexes rational_vec3_families(); throws UnknownFamily.
ScaledVec3 gen_rational_vec3(std::size_t family_id, const BigRational& scale);

/// Unit axis (n.n == 1 exactly, or InvalidParameters) plus rotation state.
struct ExactAxis {
    RVec3 n;
    RotationParam rot;

    ExactAxis(RVec3 unit, RotationParam r);
};

// ---- 1D mirrors ----

struct REvent1D {
    BigRational x;
    BigRational t;
};

BigRational slowness(const BigRational& v);
BigRational compose(const BigRational& u, const BigRational& v,
                    Sign sign = Sign::plus);
ComplexRational compose_complex(const ComplexRational& u, const ComplexRational& v,
                                Sign sign = Sign::plus);

/// compose(u, v) - compose(1/u, 1/v): signed, identically zero.
BigRational reciprocal_symmetry_residual(const BigRational& u, const BigRational& v);

REvent1D boost_event(const REvent1D& e, const BigRational& beta);
BigRational interval(const REvent1D& e);

ComplexRational rotate_velocity(const BigRational& v, const RotationParam& rot);
ComplexRational rotate_velocity(const ComplexRational& v, const RotationParam& rot);
ComplexRational rotate_coordinate(const REvent1D& e, const RotationParam& rot);
BigRational reciprocal_coordinate(const REvent1D& e);

ComplexRational g_factor(const REvent1D& e, const BigRational& beta,
                         const RotationParam& rot);

struct GeneralizedREvent1D {
    ComplexRational x_out;
    ComplexRational t_out;
};

GeneralizedREvent1D generalized_boost(const REvent1D& e, const BigRational& beta,
                                      const RotationParam& rot);
ComplexRational invariance_residual_1d(const REvent1D& e, const BigRational& beta,
                                       const RotationParam& rot);

// ---- 3D mirrors ----

RVec3 reciprocal_velocity_3d(const RVec3& V, const ExactAxis& axis);
RVec3 reciprocal_position_3d(const RVec3& X, const BigRational& t,
                             const ExactAxis& axis);
CRVec3 rotate_velocity_3d(const RVec3& V, const ExactAxis& axis);
CRVec3 rotate_position_3d(const RVec3& X, const BigRational& t,
                          const ExactAxis& axis);
ComplexRational G_factor(const RVec3& X, const BigRational& t, const RVec3& V,
                         const ExactAxis& axis);

struct GeneralizedREvent3D {
    CRVec3 X_out;
    ComplexRational t_out;
};

GeneralizedREvent3D generalized_boost_3d(const RVec3& X, const BigRational& t,
                                         const RVec3& V, const ExactAxis& axis);
ComplexRational invariance_residual_3d(const RVec3& X, const BigRational& t,
                                       const RVec3& V, const ExactAxis& axis);

std::pair<RVec3, BigRational> standard_boost_3d(const RVec3& X, const BigRational& t,
                                                const RVec3& V);

}  // namespace relkin::oracle
