#include "relkin/oracle.hpp"

namespace relkin::oracle {

namespace {

const BigRational kOne(1);

void check_rotation(const RotationParam& rot) {
    if (rot.num == 0 && rot.den == 0)
        throw InvalidParameters("rotation parameter (0, 0) is not a ray");
}

BigRational abs_r(const BigRational& v) { return v < 0 ? BigRational(-v) : v; }

}  // namespace

RotationParam compose_rotations(const RotationParam& a, const RotationParam& b) {
    check_rotation(a);
    check_rotation(b);
    // (den + i num) multiply: tan addition in projective form.
    return {a.num * b.den + b.num * a.den, a.den * b.den - a.num * b.num};
}

BigRational PythagoreanBeta::beta() const {
    return BigRational(m * m - n * n, m * m + n * n);
}

BigRational PythagoreanBeta::root() const {
    return BigRational(2 * m * n, m * m + n * n);
}

PythagoreanBeta gen_pythagorean_beta(const BigInt& m, const BigInt& n) {
    if (n < 1 || m <= n)
        throw InvalidParameters("Pythagorean beta requires m > n >= 1");
    return {m, n};
}

BigRational dot(const RVec3& a, const RVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

ComplexRational dot(const CRVec3& a, const CRVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

const std::vector<Vec3Family>& rational_vec3_families() {
    static const std::vector<Vec3Family> table = {
        {{3, 4, 0}, 5}, {{1, 2, 2}, 3}, {{2, 3, 6}, 7},
        {{4, 4, 7}, 9}, {{1, 4, 8}, 9},
    };
    return table;
}

ScaledVec3 gen_rational_vec3(std::size_t family_id, const BigRational& scale) {
    const auto& table = rational_vec3_families();
    if (family_id >= table.size())
        throw UnknownFamily("vec3 family index " + std::to_string(family_id));
    const Vec3Family& f = table[family_id];
    RVec3 v{scale * f.components[0], scale * f.components[1],
            scale * f.components[2]};
    return {v, abs_r(scale) * f.norm};
}

ExactAxis::ExactAxis(RVec3 unit, RotationParam r)
    : n(std::move(unit)), rot(std::move(r)) {
    check_rotation(rot);
    if (dot(n, n) != 1)
        throw InvalidParameters("exact axis must have n.n == 1");
}

// ---- 1D ----

BigRational slowness(const BigRational& v) {
    if (v == 0) throw ZeroVelocity("slowness undefined for v = 0");
    return kOne / v;
}

BigRational compose(const BigRational& u, const BigRational& v, Sign sign) {
    const BigRational sv = (sign == Sign::plus) ? v : BigRational(-v);
    const BigRational den = kOne + u * sv;
    if (den == 0) throw DegenerateDenominator("compose: 1 +/- u v = 0");
    return (u + sv) / den;
}

ComplexRational compose_complex(const ComplexRational& u, const ComplexRational& v,
                                Sign sign) {
    const ComplexRational sv = (sign == Sign::plus) ? v : -v;
    const ComplexRational den = ComplexRational(1) + u * sv;
    if (den.is_zero()) throw DegenerateDenominator("compose: 1 +/- u v = 0");
    return (u + sv) / den;
}

BigRational reciprocal_symmetry_residual(const BigRational& u, const BigRational& v) {
    return compose(u, v) - compose(slowness(u), slowness(v));
}

REvent1D boost_event(const REvent1D& e, const BigRational& beta) {
    if (abs_r(beta) >= 1) throw SuperluminalBoost("boost requires |beta| < 1");
    const BigRational root = exact_sqrt(kOne - beta * beta);
    return {(e.x - beta * e.t) / root, (e.t - beta * e.x) / root};
}

BigRational interval(const REvent1D& e) { return e.t * e.t - e.x * e.x; }

ComplexRational rotate_velocity(const ComplexRational& v, const RotationParam& rot) {
    check_rotation(rot);
    if (rot.is_pole() && v.is_zero())
        throw ZeroVelocity("rotation by pi of v = 0");
    const ComplexRational num = v * ComplexRational(rot.den) + imaginary(rot.num);
    const ComplexRational den = ComplexRational(rot.den) + imaginary(rot.num) * v;
    return num / den;
}

ComplexRational rotate_velocity(const BigRational& v, const RotationParam& rot) {
    return rotate_velocity(ComplexRational(v), rot);
}

ComplexRational rotate_coordinate(const REvent1D& e, const RotationParam& rot) {
    check_rotation(rot);
    if (e.t == 0) throw ZeroTime("coordinate rotation requires t != 0");
    if (rot.is_pole() && e.x == 0)
        throw ZeroCoordinate("rotation by pi of x = 0");
    const ComplexRational num(e.x * rot.den, e.t * rot.num);
    const ComplexRational den(e.t * rot.den, e.x * rot.num);
    return ComplexRational(e.t) * num / den;
}

BigRational reciprocal_coordinate(const REvent1D& e) {
    if (e.x == 0) throw ZeroCoordinate("reciprocal coordinate undefined for x = 0");
    return e.t * e.t / e.x;
}

ComplexRational g_factor(const REvent1D& e, const BigRational& beta,
                         const RotationParam& rot) {
    check_rotation(rot);
    if (abs_r(beta) >= 1) throw SuperluminalBoost("boost requires |beta| < 1");
    if (e.t == 0) throw ZeroTime("g-factor requires t != 0");
    const BigRational root = exact_sqrt(kOne - beta * beta);
    const ComplexRational a(e.t * rot.den, e.x * rot.num);
    const ComplexRational b(rot.den, beta * rot.num);
    const BigRational scale = e.t * (rot.num * rot.num + rot.den * rot.den) * root;
    return a * b / ComplexRational(scale);
}

GeneralizedREvent1D generalized_boost(const REvent1D& e, const BigRational& beta,
                                      const RotationParam& rot) {
    const ComplexRational xr = rotate_coordinate(e, rot);
    const ComplexRational vr = rotate_velocity(beta, rot);
    const ComplexRational g = g_factor(e, beta, rot);
    const ComplexRational t(e.t);
    return {g * (xr - vr * t), g * (t - xr * vr)};
}

ComplexRational invariance_residual_1d(const REvent1D& e, const BigRational& beta,
                                       const RotationParam& rot) {
    const GeneralizedREvent1D out = generalized_boost(e, beta, rot);
    const ComplexRational lhs = out.t_out * out.t_out - out.x_out * out.x_out;
    return lhs - ComplexRational(interval(e));
}

// ---- 3D ----

RVec3 reciprocal_velocity_3d(const RVec3& V, const ExactAxis& axis) {
    const BigRational v2 = dot(V, V);
    if (v2 == 0) throw ZeroVelocity("3d reciprocal of V = 0");
    if (v2 > 1) throw SuperluminalInput("3d reciprocal requires |V| <= 1");
    const BigRational s = exact_sqrt(kOne - v2);
    const BigRational a = dot(axis.n, V);
    if (a == 0) throw PerpendicularAxis("3d reciprocal requires n.V != 0");
    return ((kOne - s) / v2) * V + (s / a) * axis.n;
}

RVec3 reciprocal_position_3d(const RVec3& X, const BigRational& t,
                             const ExactAxis& axis) {
    const BigRational xx = dot(X, X);
    if (xx == 0) throw ZeroCoordinate("3d reciprocal of X = 0");
    if (t == 0) throw ZeroTime("3d reciprocal requires t != 0");
    if (t < 0 || xx > t * t)
        throw SpacelikeInput("3d reciprocal requires |X| <= t");
    const BigRational sx = exact_sqrt(kOne - xx / (t * t));
    const BigRational b = dot(axis.n, X);
    if (b == 0) throw PerpendicularAxis("3d reciprocal requires n.X != 0");
    return (t * t) * (((kOne - sx) / xx) * X + (sx / b) * axis.n);
}

CRVec3 rotate_velocity_3d(const RVec3& V, const ExactAxis& axis) {
    const RotationParam& rot = axis.rot;
    if (rot.num == 0) return CRVec3::from_real(V);
    const BigRational v2 = dot(V, V);
    if (v2 == 0) throw ZeroVelocity("3d rotation of V = 0");
    if (v2 > 1) throw SuperluminalInput("3d rotation requires |V| <= 1");
    const BigRational s = exact_sqrt(kOne - v2);
    const BigRational a = dot(axis.n, V);
    if (rot.is_pole() && a == 0)
        throw PerpendicularAxis("rotation by pi requires n.V != 0");
    const RVec3 imag = ((kOne - s) * a / v2) * V + s * axis.n;
    const CRVec3 num = ComplexRational(rot.den) * CRVec3::from_real(V) +
                       imaginary(rot.num) * CRVec3::from_real(imag);
    return num / ComplexRational(rot.den, rot.num * a);
}

CRVec3 rotate_position_3d(const RVec3& X, const BigRational& t,
                          const ExactAxis& axis) {
    if (t == 0) throw ZeroTime("3d rotation requires t != 0");
    const RotationParam& rot = axis.rot;
    if (rot.num == 0) return CRVec3::from_real(X);
    const BigRational xx = dot(X, X);
    if (xx == 0) throw ZeroCoordinate("3d rotation of X = 0");
    if (t < 0 || xx > t * t)
        throw SpacelikeInput("3d rotation requires |X| <= t");
    const BigRational sx = exact_sqrt(kOne - xx / (t * t));
    const BigRational b = dot(axis.n, X);
    if (rot.is_pole() && b == 0)
        throw PerpendicularAxis("rotation by pi requires n.X != 0");
    const RVec3 imag = ((kOne - sx) * b / xx) * X + sx * axis.n;
    const CRVec3 num = ComplexRational(rot.den * t) * CRVec3::from_real(X) +
                       imaginary(rot.num * t * t) * CRVec3::from_real(imag);
    return num / ComplexRational(rot.den * t, rot.num * b);
}

ComplexRational G_factor(const RVec3& X, const BigRational& t, const RVec3& V,
                         const ExactAxis& axis) {
    check_rotation(axis.rot);
    if (t == 0) throw ZeroTime("G-factor requires t != 0");
    const BigRational v2 = dot(V, V);
    if (v2 >= 1) throw SuperluminalBoost("boost requires |V| < 1");
    const BigRational root = exact_sqrt(kOne - v2);
    const BigRational a = dot(axis.n, V);
    const BigRational b = dot(axis.n, X);
    const RotationParam& rot = axis.rot;
    const ComplexRational lhs(t * rot.den, rot.num * b);
    const ComplexRational rhs(rot.den, rot.num * a);
    const BigRational scale = t * (rot.num * rot.num + rot.den * rot.den) * root;
    return lhs * rhs / ComplexRational(scale);
}

GeneralizedREvent3D generalized_boost_3d(const RVec3& X, const BigRational& t,
                                         const RVec3& V, const ExactAxis& axis) {
    const CRVec3 Xr = rotate_position_3d(X, t, axis);
    const CRVec3 Vr = rotate_velocity_3d(V, axis);
    const ComplexRational G = G_factor(X, t, V, axis);
    const BigRational s = exact_sqrt(kOne - dot(V, V));  // real V, as printed
    const ComplexRational vr2 = dot(Vr, Vr);
    if (vr2.is_zero())
        throw DegenerateRotatedVelocity("rotated velocity squares to zero");
    const ComplexRational xv = dot(Xr, Vr);
    const ComplexRational coef =
        (ComplexRational(1) - ComplexRational(s)) * xv / vr2 - ComplexRational(t);
    return {G * (ComplexRational(s) * Xr + coef * Vr),
            G * (ComplexRational(t) - xv)};
}

ComplexRational invariance_residual_3d(const RVec3& X, const BigRational& t,
                                       const RVec3& V, const ExactAxis& axis) {
    const GeneralizedREvent3D out = generalized_boost_3d(X, t, V, axis);
    const ComplexRational lhs = out.t_out * out.t_out - dot(out.X_out, out.X_out);
    return lhs - ComplexRational(t * t - dot(X, X));
}

std::pair<RVec3, BigRational> standard_boost_3d(const RVec3& X, const BigRational& t,
                                                const RVec3& V) {
    const BigRational v2 = dot(V, V);
    if (v2 >= 1) throw SuperluminalBoost("boost requires |V| < 1");
    if (v2 == 0) return {X, t};
    const BigRational gamma = kOne / exact_sqrt(kOne - v2);
    const BigRational xv = dot(X, V);
    const RVec3 Xp = X + ((gamma - kOne) * xv / v2 - gamma * t) * V;
    return {Xp, gamma * (t - xv)};
}

}  // namespace relkin::oracle
