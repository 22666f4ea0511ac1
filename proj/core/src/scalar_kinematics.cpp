#include "relkin/scalar_kinematics.hpp"

#include <cmath>

namespace relkin {

Beta slowness(Beta beta) {
    if (beta.value == 0.0) throw ZeroVelocity("slowness undefined for v = 0");
    return Beta(1.0 / beta.value);
}

Beta compose(Beta u, Beta v, Sign sign) {
    const double s = (sign == Sign::plus) ? 1.0 : -1.0;
    const double den = 1.0 + s * u.value * v.value;
    if (den == 0.0)
        throw DegenerateDenominator("compose: 1 +/- u v = 0");
    return Beta((u.value + s * v.value) / den);
}

double lorentz_root(Beta beta) {
    if (std::abs(beta.value) >= 1.0)
        throw SuperluminalBoost("boost requires |beta| < 1");
    return std::sqrt(1.0 - beta.value * beta.value);
}

Event1D boost_event(const Event1D& e, Beta beta) {
    const double root = lorentz_root(beta);
    return Event1D((e.x - beta.value * e.t) / root,
                   (e.t - beta.value * e.x) / root);
}

Interval interval(const Event1D& e) {
    // Factored form: keeps the boosted-interval residual at a few ulp even
    // for gamma-amplified coordinates.
    return Interval{(e.t - e.x) * (e.t + e.x)};
}

double reciprocal_symmetry_residual(Beta u, Beta v) {
    const Beta lhs = compose(u, v, Sign::plus);
    const Beta rhs = compose(slowness(u), slowness(v), Sign::plus);
    return std::abs(lhs.value - rhs.value);
}

}  // namespace relkin
