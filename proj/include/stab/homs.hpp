#pragma once

#include "stab/intervals.hpp"

namespace stab {

// Hom(I^I, I^J) is 0- or 1-dimensional for the interval classes handled here,
// so nonvanishing plus a scalar describes every morphism. Shifted triangles
// are accepted on either side.
bool hom_nonzero(const Interval& I, const Interval& J);

// Nonvanishing of the composite I -> J -> K for pre-shifted J, K: true iff
// the triple intersection is nonempty. Requires hom_nonzero(I, J) and
// hom_nonzero(J, K).
bool composite_nonzero(const Interval& I, const Interval& J, const Interval& K);

// Scalar of the two-step path: wf * wg if the composite is nonzero, else 0.
// A nonzero weight on a vanishing Hom space is an invalid witness and throws.
Rat path_scalar(const Rat& wf, const Rat& wg, const Interval& I, const Interval& J,
                const Interval& K);

}  // namespace stab
