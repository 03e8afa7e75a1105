#ifndef FPAUTO_FREE_PRODUCT_HPP
#define FPAUTO_FREE_PRODUCT_HPP

#include <string>
#include <vector>

#include "fpauto/homomorphism.hpp"
#include "fpauto/mealy.hpp"
#include "fpauto/symbol.hpp"

namespace fpauto {

/// Automaton over the domino/gate alphabet whose generated semigroup is the
/// free product of the two factor semigroups.  States are the left factor's
/// states followed by the right factor's states.
struct FreeProductAutomaton {
  MealyAutomaton underlying;
  MealyAutomaton left_factor;
  MealyAutomaton right_factor;
  std::vector<StateId> left_states;   // indices into underlying
  std::vector<StateId> right_states;  // indices into underlying
  std::vector<StateId> phi;           // left factor state -> right factor state
  std::vector<Symbol> symbols;        // aligned with underlying's alphabet

  std::size_t num_left() const { return left_states.size(); }

  bool is_left(StateId q) const { return q < num_left(); }
  StateId to_left(StateId q) const { return q; }
  StateId to_right(StateId q) const {
    return q - static_cast<StateId>(num_left());
  }
  StateId from_left(StateId q) const { return q; }
  StateId from_right(StateId q) const {
    return q + static_cast<StateId>(num_left());
  }

  const Symbol& symbol(LetterId c) const { return symbols.at(c); }
  LetterId domino_id(Mark m, LetterId a, LetterId b) const;
  LetterId gate_id(GateKind g) const;
};

struct BuildOptions {
  /// On state-name collision between the factors, rename with ".L"/".R"
  /// suffixes instead of failing.
  bool rename_on_collision = true;
  WpOptions wp;
};

/// The free-product automaton for the two factors and a (normalized,
/// state-to-state) homomorphism candidate phi from the left factor's states
/// into the right factor's states.
FreeProductAutomaton build_free_product(const MealyAutomaton& a1,
                                        const MealyAutomaton& a2,
                                        const std::vector<StateId>& phi,
                                        const BuildOptions& opts = {});

/// Overload taking a StateMap with possibly word-valued images; images of
/// length > 1 are first realized as genuine states via adjoin_word_state.
FreeProductAutomaton build_free_product(const MealyAutomaton& a1,
                                        const MealyAutomaton& a2,
                                        const StateMap& phi,
                                        const BuildOptions& opts = {});

struct AdjoinResult {
  MealyAutomaton automaton;
  StateId state;  // the state realizing the word
};

/// Extend the automaton with a state acting like the given word, plus every
/// product tuple reachable from it.  The generated semigroup is unchanged as
/// a set of transformations.  The new state is called `name`; the other
/// reachable tuples get names like "name(q,e)".
AdjoinResult adjoin_word_state(const MealyAutomaton& aut, const StateWord& w,
                               const std::string& name,
                               const WpOptions& opts = {});

/// Normalize a state map so that every image is a single state, adjoining
/// word states to the target as needed.  Returns the (possibly extended)
/// target together with the state-to-state map.
std::pair<MealyAutomaton, std::vector<StateId>> normalize_state_map(
    const MealyAutomaton& target, const StateMap& phi,
    const WpOptions& opts = {});

struct ChainHom {
  std::size_t target;  // 0-based factor index, > own position
  StateMap map;        // images are words over the target factor's states
};

/// Iterated free product S_1 * ... * S_n, built by a right-to-left fold:
/// the last two factors first, then prepending one factor at a time.  Each
/// hom lands in a later factor, whose states are literally present in the
/// already-built suffix product.  homs[i] belongs to factors[i]; there must
/// be one hom per factor except the last.
FreeProductAutomaton build_chain(const std::vector<MealyAutomaton>& factors,
                                 const std::vector<ChainHom>& homs,
                                 const BuildOptions& opts = {});

/// Machine-checkable audit that every transition of the product matches the
/// construction's table, row by row.  Returns human-readable descriptions of
/// any mismatches (empty = pass).
std::vector<std::string> audit_table(const FreeProductAutomaton& fp);

}  // namespace fpauto

#endif  // FPAUTO_FREE_PRODUCT_HPP
