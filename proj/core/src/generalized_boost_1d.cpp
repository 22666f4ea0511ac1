#include "relkin/generalized_boost_1d.hpp"

#include <cmath>

namespace relkin {

ComplexScalar g_factor(const Event1D& e, Beta beta,
                       const ReciprocityRotation& rot) {
    const double root = lorentz_root(beta);
    if (e.t == 0.0) throw ZeroTime("g-factor requires t != 0");
    if (rot.is_identity()) return {1.0 / root, 0.0};
    const double hs = rot.half_num();
    const double hc = rot.half_den();
    if (rot.is_pole())  // both factors purely imaginary: -(x/t) v / root
        return {-(e.x * beta.value) / (e.t * root), 0.0};
    const ComplexScalar a(e.t * hc, e.x * hs);
    const ComplexScalar b(hc, beta.value * hs);
    return a * b / (e.t * (hs * hs + hc * hc) * root);
}

GeneralizedEvent1D generalized_boost(const Event1D& e, Beta beta,
                                     const ReciprocityRotation& rot) {
    const double root = lorentz_root(beta);
    if (e.t == 0.0) throw ZeroTime("generalized boost requires t != 0");
    if (rot.is_identity()) {
        // Same expressions as boost_event, so the phi = 0 reduction is exact.
        return {{(e.x - beta.value * e.t) / root, 0.0},
                {(e.t - beta.value * e.x) / root, 0.0}};
    }
    const ComplexScalar xr = rotate_coordinate(e, rot);
    const ComplexScalar vr = rotate_velocity(beta, rot);
    const ComplexScalar g = g_factor(e, beta, rot);
    return {g * (xr - vr * e.t), g * (e.t - xr * vr)};
}

ComplexScalar invariance_residual_1d(const Event1D& e, Beta beta,
                                     const ReciprocityRotation& rot) {
    const GeneralizedEvent1D out = generalized_boost(e, beta, rot);
    const ComplexScalar lhs = out.t_out * out.t_out - out.x_out * out.x_out;
    return lhs - ComplexScalar(interval(e).value, 0.0);
}

}  // namespace relkin
