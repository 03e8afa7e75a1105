#ifndef FPAUTO_SERIALIZE_HPP
#define FPAUTO_SERIALIZE_HPP

#include <string>
#include <vector>

#include "fpauto/free_product.hpp"
#include "fpauto/homomorphism.hpp"
#include "fpauto/mealy.hpp"
#include "fpauto/verify.hpp"

namespace fpauto {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parse a UTF-8 JSON automaton document:
///   {name, states, alphabet, transitions: [{from, input, to, output}]}
/// Identifiers match [A-Za-z0-9_.()$,-]+; the table must be total with each
/// (from, input) pair appearing exactly once.
MealyAutomaton parse_automaton(const std::string& text);

/// Canonical serialization: states/alphabet in listed order, transitions
/// sorted by (from, input).  parse . serialize is the identity on canonical
/// documents, byte for byte.
std::string serialize_automaton(const MealyAutomaton& aut);

/// Product document: an automaton document with an extra "free_product"
/// object carrying the partition, phi and the embedded factor documents, so
/// the oracle can be reconstructed from the file alone.
std::string serialize_free_product(const FreeProductAutomaton& fp);
FreeProductAutomaton parse_free_product(const std::string& text);

/// StateMap text: comma-separated "source:target" entries, e.g. "q:x,e:x".
/// Commas inside parenthesised names do not split entries.
StateMap parse_state_map(const std::string& text, const MealyAutomaton& source,
                         const MealyAutomaton& target);
std::string format_state_map(const StateMap& phi, const MealyAutomaton& source,
                             const MealyAutomaton& target);

/// Comma-separated state word, paren-aware ("x,y" or "q,(q,q)").
StateWord parse_word(const MealyAutomaton& aut, const std::string& text);
std::string format_word(const MealyAutomaton& aut, const StateWord& w);

/// Input string: whitespace-separated letter names; a single token that is
/// not a letter name is split into one-character letters.
LetterString parse_letters(const MealyAutomaton& aut, const std::string& text);
std::string format_letters(const MealyAutomaton& aut, const LetterString& s);

/// Verification report: {tool_version, bounds, pairs_checked, violations:
/// [{lhs, rhs, witness, direction}]}.  Restriction violations are folded in
/// with direction "restriction-<check>".
std::string serialize_report(const FreeProductAutomaton& fp,
                             const FaithReport& faith,
                             const RestrictionReport& restr,
                             std::size_t state_cap);

bool valid_identifier(const std::string& s);

}  // namespace fpauto

#endif  // FPAUTO_SERIALIZE_HPP
