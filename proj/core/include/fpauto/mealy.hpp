#ifndef FPAUTO_MEALY_HPP
#define FPAUTO_MEALY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fpauto/errors.hpp"

namespace fpauto {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// A word over the state set; represents an element of the generated
/// semigroup.  Nonempty everywhere it denotes an element.
using StateWord = std::vector<StateId>;

/// A tape string, as letter indices of one automaton's alphabet.
using LetterString = std::vector<LetterId>;

/// Finite letter-to-letter transducer.  The table is total: one entry per
/// (state, letter) pair, stored row-major by state.
class MealyAutomaton {
 public:
  struct Arrow {
    StateId next;
    LetterId out;
  };

  MealyAutomaton() = default;
  MealyAutomaton(std::string name, std::vector<std::string> state_names,
                 std::vector<std::string> letter_names,
                 std::vector<Arrow> table);

  const std::string& name() const { return name_; }
  std::size_t num_states() const { return state_names_.size(); }
  std::size_t num_letters() const { return letter_names_.size(); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::string>& letter_names() const { return letter_names_; }

  const std::string& state_name(StateId q) const { return state_names_[q]; }
  const std::string& letter_name(LetterId c) const { return letter_names_[c]; }

  /// Index lookup by name; throws input_error on unknown names.
  StateId state(std::string_view name) const;
  LetterId letter(std::string_view name) const;

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<LetterId> find_letter(std::string_view name) const;

  const Arrow& arrow(StateId q, LetterId c) const {
    return table_[static_cast<std::size_t>(q) * num_letters() + c];
  }
  const std::vector<Arrow>& table() const { return table_; }

  void check_state(StateId q) const;
  void check_letter(LetterId c) const;
  void check_word(const StateWord& w) const;
  void check_string(const LetterString& s) const;

 private:
  std::string name_;
  std::vector<std::string> state_names_;
  std::vector<std::string> letter_names_;
  std::vector<Arrow> table_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, LetterId> letter_index_;
};

/// Tuple of states acting in sequence; the letter threads through the
/// components left to right (component 0 first).
struct ProductState {
  std::vector<StateId> tuple;

  bool operator==(const ProductState&) const = default;
};

struct WpOptions {
  /// Maximum number of explored product-state pairs before giving up with a
  /// resource_error.
  std::size_t state_cap = 1'000'000;
};

LetterString act_state(const MealyAutomaton& aut, StateId q,
                       const LetterString& s);
LetterString act_word(const MealyAutomaton& aut, const StateWord& w,
                      const LetterString& s);

std::pair<ProductState, LetterId> step_product(const MealyAutomaton& aut,
                                               const ProductState& p,
                                               LetterId c);

/// Shortest input on which w1 and w2 act differently, or nullopt if they
/// induce the same transformation of the full string set.  Decided by
/// reachable-pair closure with per-letter output checks.
std::optional<LetterString> separating_input(const MealyAutomaton& aut,
                                             const StateWord& w1,
                                             const StateWord& w2,
                                             const WpOptions& opts = {});

bool words_equivalent(const MealyAutomaton& aut, const StateWord& w1,
                      const StateWord& w2, const WpOptions& opts = {});

/// Partition of all nonempty words of length <= max_len under
/// words_equivalent.  Within a class words appear in shortlex order, classes
/// are ordered by their (shortlex-minimal) first member.
std::vector<std::vector<StateWord>> enumerate_classes(
    const MealyAutomaton& aut, std::size_t max_len, const WpOptions& opts = {});

/// All words of length 1..max_len in shortlex order.
std::vector<StateWord> all_words(std::size_t num_states, std::size_t max_len);

/// All strings of length min_len..max_len in shortlex order.
std::vector<LetterString> all_strings(std::size_t num_letters,
                                      std::size_t min_len,
                                      std::size_t max_len);

}  // namespace fpauto

#endif  // FPAUTO_MEALY_HPP
