#ifndef FPAUTO_VERIFY_HPP
#define FPAUTO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpauto/free_product.hpp"

namespace fpauto {

enum class Side { Left, Right };

/// Alternating block normal form of a word over the product's state set.
/// Block words are factor-local state indices.
struct AltBlock {
  Side side;
  StateWord word;  // indices into the block's factor automaton
};

struct AltDecomposition {
  std::vector<AltBlock> blocks;
};

/// Maximal-run block split of a word over the product's states.
AltDecomposition decompose(const FreeProductAutomaton& fp, const StateWord& w);

/// Rebuild the product-level word from a decomposition.
StateWord recompose(const FreeProductAutomaton& fp, const AltDecomposition& d);

/// Free-product word-problem oracle: equal iff the alternating
/// decompositions have the same block structure and corresponding blocks are
/// equivalent in their factor automaton.  Independent of the product
/// automaton's transition table.
bool oracle_equal(const FreeProductAutomaton& fp, const StateWord& w1,
                  const StateWord& w2, const WpOptions& opts = {});

struct FaithViolation {
  StateWord lhs, rhs;
  // "collapse": oracle-distinct but equal product action;
  // "separation-failure": oracle-equal but distinct product action.
  std::string direction;
  LetterString witness;  // separating input for separation failures
};

struct FaithReport {
  std::size_t bound = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<FaithViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Desk-scale faithfulness sweep: over all words of length <= bound, the
/// oracle's equivalence must coincide with action equivalence on the product
/// automaton.
FaithReport check_faithful(const FreeProductAutomaton& fp, std::size_t bound,
                           const WpOptions& opts = {});

/// Check the closed-form image of gamma = D(a1,b1) G_CLOSED ... G_CLOSED
/// D(an,bn) under the word given by the decomposition: blocks become
/// circled (T-marked at the end, S-marked if the final right block is
/// absent), gates open.  alphas/betas give the domino components per block,
/// |alphas[i]| == |betas[i]|.  Returns whether direct simulation matches.
bool gamma_formula_check(const FreeProductAutomaton& fp,
                         const AltDecomposition& d,
                         const std::vector<LetterString>& alphas,
                         const std::vector<LetterString>& betas);

/// A tape string on which two oracle-distinct words act differently.
/// Follows the constructive recipe (T-marked run for a leading right-block
/// mismatch, closed gates plus an unmarked run otherwise), falling back to
/// breadth-first search when the recipe's edge cases do not separate.  The
/// result is re-simulated before returning.
LetterString distinguishing_string(const FreeProductAutomaton& fp,
                                   const StateWord& w1, const StateWord& w2,
                                   const WpOptions& opts = {});

struct RestrictionViolation {
  std::string check;  // "right-on-T", "left-on-S", "right-inert", "left-marks"
  StateWord word;     // factor-local
  LetterString input;
  LetterString expected;
  LetterString actual;
};

struct RestrictionReport {
  std::size_t word_bound = 0;
  std::size_t depth_bound = 0;
  std::uint64_t cases_checked = 0;
  std::vector<RestrictionViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Exhaustive factor-restriction sweep:
///   (i)  right words on T-marked runs act as the right factor on the second
///        components;
///   (ii) left words on S-marked runs act as the left factor on the first
///        components;
///   (iii) right words fix strings of unmarked dominoes and closed gates;
///   (iv) left words S-mark unmarked runs while acting as the left factor on
///        the first components.
RestrictionReport restriction_checks(const FreeProductAutomaton& fp,
                                     std::size_t word_bound,
                                     std::size_t depth_bound);

}  // namespace fpauto

#endif  // FPAUTO_VERIFY_HPP
