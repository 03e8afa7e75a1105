#ifndef FPAUTO_HOMOMORPHISM_HPP
#define FPAUTO_HOMOMORPHISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpauto/mealy.hpp"

namespace fpauto {

/// Generator-level map from the states of a source automaton into state
/// words over a target automaton.  After normalization (adjoin_word_state)
/// every image is a single state.
struct StateMap {
  std::vector<StateWord> images;  // indexed by source state

  const StateWord& image(StateId q) const { return images.at(q); }

  /// Image of a whole word: concatenation of the letter images.
  StateWord apply(const StateWord& w) const;

  /// True iff every image has length 1.
  bool normalized() const;
};

/// Map sending every state of the source to the word e over the target.
/// A homomorphism whenever e is idempotent in the target semigroup.
StateMap constant_hom(const MealyAutomaton& source,
                      const MealyAutomaton& target, const StateWord& e);

struct HomVerdict {
  bool passed;
  std::size_t bound;
  // Set when !passed: a pair u ~ v in the source whose images differ in the
  // target, plus an input string on which the images act differently.
  std::optional<std::pair<StateWord, StateWord>> counterexample;
  LetterString witness;
};

/// Bounded homomorphism check: every relation u ~ v between source words of
/// length <= bound must be preserved by phi.  PASS is evidence at the given
/// bound, not proof.  The counterexample, if any, is the shortlex-least
/// (class representative, member) pair that fails.
HomVerdict check_homomorphism_bounded(const MealyAutomaton& source,
                                      const MealyAutomaton& target,
                                      const StateMap& phi, std::size_t bound,
                                      const WpOptions& opts = {});

/// Shortlex-minimal class representatives w with |w| <= bound and ww ~ w.
std::vector<StateWord> find_idempotents(const MealyAutomaton& aut,
                                        std::size_t bound,
                                        const WpOptions& opts = {});

}  // namespace fpauto

#endif  // FPAUTO_HOMOMORPHISM_HPP
