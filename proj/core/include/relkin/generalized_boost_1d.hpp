#pragma once

#include "relkin/mobius_reciprocity.hpp"

namespace relkin {

/// Output of the reciprocity-independent boost. Components are complex by
/// construction; their collapse to the standard real boost is asserted by
/// tests, not assumed by the type.
struct GeneralizedEvent1D {
    ComplexScalar x_out;
    ComplexScalar t_out;
};

/// The complex factor generalizing gamma = 1/sqrt(1 - v^2) to an arbitrary
/// reciprocity state, in half-angle form:
///
///   (half_den + i (x/t) half_num)(half_den + i v half_num)
///   -------------------------------------------------------
///        (half_num^2 + half_den^2) sqrt(1 - v^2)
///
/// Finite at the phi = pi pole, where the tan(phi/2) normalization blows up.
ComplexScalar g_factor(const Event1D& e, Beta beta,
                       const ReciprocityRotation& rot);

/// x_out = g (x~ - v~ t), t_out = g (t - x~ v~), sharing one evaluation of
/// the rotated quantities x~ and v~.
GeneralizedEvent1D generalized_boost(const Event1D& e, Beta beta,
                                     const ReciprocityRotation& rot);

/// (t_out^2 - x_out^2) - (t^2 - x^2) in complex arithmetic; zero up to
/// rounding for every reciprocity state.
ComplexScalar invariance_residual_1d(const Event1D& e, Beta beta,
                                     const ReciprocityRotation& rot);

}  // namespace relkin
