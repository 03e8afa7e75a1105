#ifndef FPAUTO_FIXTURES_HPP
#define FPAUTO_FIXTURES_HPP

#include "fpauto/mealy.hpp"

namespace fpauto {

/// Two-state right-zero semigroup: states {x, y} over {a, b}; x rewrites
/// every letter to a, y to b, neither changes state.  Both states are
/// idempotent and xy = y, yx = x.
MealyAutomaton make_rz2();

/// Reverse-binary increment: states {q, e} over {0, 1}; q adds one (emit 1
/// and retire to e on 0, emit 0 and carry on 1), e is the identity.
/// Generates an infinite monoid with identity e.
MealyAutomaton make_add();

}  // namespace fpauto

#endif  // FPAUTO_FIXTURES_HPP
