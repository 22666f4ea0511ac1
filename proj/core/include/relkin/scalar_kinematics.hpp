#pragma once

#include <complex>

#include "relkin/errors.hpp"

namespace relkin {

/// Complex scalar used for rotated velocities/coordinates and generalized
/// transform outputs.
using ComplexScalar = std::complex<double>;

/// Dimensionless velocity v/c. Finite by construction. Range requirements
/// are checked by the operations that need them (|v| < 1 for boosts,
/// v != 0 for reciprocals): slownesses of subluminal speeds are
/// legitimately superluminal and must stay representable.
struct Beta {
    double value;

    explicit Beta(double v) : value(v) {
        if (!std::isfinite(v)) throw InvalidParameters("Beta must be finite");
    }
};

/// Space-time event in 1+1 dimensions with c = 1 (x in light-time units).
struct Event1D {
    double x;
    double t;

    Event1D(double x_, double t_) : x(x_), t(t_) {
        if (!std::isfinite(x_) || !std::isfinite(t_))
            throw InvalidParameters("Event1D coordinates must be finite");
    }
};

/// The Lorentz interval t^2 - x^2 (c = 1).
struct Interval {
    double value;
};

enum class Sign { plus, minus };

/// Slowness (reciprocal velocity): the v* with v* v = 1 (c = 1).
Beta slowness(Beta beta);

/// Relativistic velocity composition (u +/- v) / (1 +/- u v).
Beta compose(Beta u, Beta v, Sign sign = Sign::plus);

/// sqrt(1 - beta^2); requires |beta| < 1.
double lorentz_root(Beta beta);

/// Standard boost: x' = (x - v t)/sqrt(1 - v^2), t' = (t - v x)/sqrt(1 - v^2).
Event1D boost_event(const Event1D& e, Beta beta);

Interval interval(const Event1D& e);

/// |compose(u, v) - compose(1/u, 1/v)|; zero up to rounding for all
/// admissible pairs.
double reciprocal_symmetry_residual(Beta u, Beta v);

}  // namespace relkin
