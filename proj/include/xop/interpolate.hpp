#pragma once

#include "xop/rational_fn.hpp"

#include <span>
#include <utility>

namespace xop {

struct Sample {
    long n;
    Rational value;
};

/// Reconstructs P/Q with deg P <= dnum, deg Q <= dden from exact samples.
///
/// Solves P(n_i) - v_i Q(n_i) = 0 on all but the last three samples, trying
/// total degrees in increasing order, and accepts the first candidate whose
/// Q is nonzero at every sample and that reproduces the three held-out
/// samples. Requires distinct abscissae and at least dnum + dden + 2 samples.
/// Throws DegreeBoundError when no interpolant fits the bounds.
RationalFn rational_interpolate(std::span<const Sample> samples, int dnum, int dden);

} // namespace xop
