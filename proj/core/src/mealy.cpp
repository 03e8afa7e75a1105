#include "fpauto/mealy.hpp"

#include <algorithm>
#include <unordered_set>

namespace fpauto {

MealyAutomaton::MealyAutomaton(std::string name,
                               std::vector<std::string> state_names,
                               std::vector<std::string> letter_names,
                               std::vector<Arrow> table)
    : name_(std::move(name)),
      state_names_(std::move(state_names)),
      letter_names_(std::move(letter_names)),
      table_(std::move(table)) {
  if (state_names_.empty()) throw input_error("automaton has no states");
  if (letter_names_.empty()) throw input_error("automaton has no letters");
  if (table_.size() != state_names_.size() * letter_names_.size())
    throw input_error("transition table is not total: expected " +
                      std::to_string(state_names_.size() * letter_names_.size()) +
                      " entries, got " + std::to_string(table_.size()));
  for (StateId q = 0; q < state_names_.size(); ++q) {
    auto [it, fresh] = state_index_.emplace(state_names_[q], q);
    if (!fresh) throw input_error("duplicate state name '" + state_names_[q] + "'");
  }
  for (LetterId c = 0; c < letter_names_.size(); ++c) {
    auto [it, fresh] = letter_index_.emplace(letter_names_[c], c);
    if (!fresh) throw input_error("duplicate letter name '" + letter_names_[c] + "'");
  }
  for (const Arrow& a : table_) {
    if (a.next >= num_states())
      throw input_error("transition references unknown state index " +
                        std::to_string(a.next));
    if (a.out >= num_letters())
      throw input_error("transition references unknown letter index " +
                        std::to_string(a.out));
  }
}

StateId MealyAutomaton::state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end())
    throw input_error("unknown state '" + std::string(name) + "' in automaton '" +
                      name_ + "'");
  return it->second;
}

LetterId MealyAutomaton::letter(std::string_view name) const {
  auto it = letter_index_.find(std::string(name));
  if (it == letter_index_.end())
    throw input_error("unknown letter '" + std::string(name) +
                      "' in automaton '" + name_ + "'");
  return it->second;
}

std::optional<StateId> MealyAutomaton::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LetterId> MealyAutomaton::find_letter(std::string_view name) const {
  auto it = letter_index_.find(std::string(name));
  if (it == letter_index_.end()) return std::nullopt;
  return it->second;
}

void MealyAutomaton::check_state(StateId q) const {
  if (q >= num_states())
    throw input_error("state index " + std::to_string(q) + " out of range");
}

void MealyAutomaton::check_letter(LetterId c) const {
  if (c >= num_letters())
    throw input_error("letter index " + std::to_string(c) + " out of range");
}

void MealyAutomaton::check_word(const StateWord& w) const {
  if (w.empty()) throw input_error("state word must be nonempty");
  for (StateId q : w) check_state(q);
}

void MealyAutomaton::check_string(const LetterString& s) const {
  for (LetterId c : s) check_letter(c);
}

LetterString act_state(const MealyAutomaton& aut, StateId q,
                       const LetterString& s) {
  aut.check_state(q);
  aut.check_string(s);
  LetterString out;
  out.reserve(s.size());
  StateId cur = q;
  for (LetterId c : s) {
    const auto& a = aut.arrow(cur, c);
    out.push_back(a.out);
    cur = a.next;
  }
  return out;
}

LetterString act_word(const MealyAutomaton& aut, const StateWord& w,
                      const LetterString& s) {
  aut.check_word(w);
  LetterString cur = s;
  for (StateId q : w) cur = act_state(aut, q, cur);
  return cur;
}

std::pair<ProductState, LetterId> step_product(const MealyAutomaton& aut,
                                               const ProductState& p,
                                               LetterId c) {
  aut.check_letter(c);
  ProductState next;
  next.tuple.reserve(p.tuple.size());
  LetterId cur = c;
  for (StateId q : p.tuple) {
    aut.check_state(q);
    const auto& a = aut.arrow(q, cur);
    next.tuple.push_back(a.next);
    cur = a.out;
  }
  return {std::move(next), cur};
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<StateId>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (StateId x : v) {
      h ^= x + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::optional<LetterString> separating_input(const MealyAutomaton& aut,
                                             const StateWord& w1,
                                             const StateWord& w2,
                                             const WpOptions& opts) {
  aut.check_word(w1);
  aut.check_word(w2);

  struct Node {
    ProductState p1, p2;
    std::size_t parent;
    LetterId via;
  };

  auto key_of = [](const ProductState& a, const ProductState& b) {
    std::vector<StateId> key;
    key.reserve(a.tuple.size() + b.tuple.size());
    key.insert(key.end(), a.tuple.begin(), a.tuple.end());
    key.insert(key.end(), b.tuple.begin(), b.tuple.end());
    return key;
  };

  std::vector<Node> nodes;
  std::unordered_set<std::vector<StateId>, VecHash> seen;
  nodes.push_back({ProductState{w1}, ProductState{w2}, SIZE_MAX, 0});
  seen.insert(key_of(nodes[0].p1, nodes[0].p2));

  const std::size_t num_letters = aut.num_letters();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (LetterId c = 0; c < num_letters; ++c) {
      // nodes may reallocate; copy what we need up front
      ProductState p1 = nodes[i].p1;
      ProductState p2 = nodes[i].p2;
      auto [n1, o1] = step_product(aut, p1, c);
      auto [n2, o2] = step_product(aut, p2, c);
      if (o1 != o2) {
        LetterString witness{c};
        for (std::size_t j = i; nodes[j].parent != SIZE_MAX; j = nodes[j].parent)
          witness.push_back(nodes[j].via);
        std::reverse(witness.begin(), witness.end());
        return witness;
      }
      auto key = key_of(n1, n2);
      if (seen.insert(std::move(key)).second) {
        if (seen.size() > opts.state_cap)
          throw resource_error(
              "word-problem exploration exceeded state cap of " +
                  std::to_string(opts.state_cap),
              opts.state_cap);
        nodes.push_back({std::move(n1), std::move(n2), i, c});
      }
    }
  }
  return std::nullopt;
}

bool words_equivalent(const MealyAutomaton& aut, const StateWord& w1,
                      const StateWord& w2, const WpOptions& opts) {
  return !separating_input(aut, w1, w2, opts).has_value();
}

std::vector<StateWord> all_words(std::size_t num_states, std::size_t max_len) {
  std::vector<StateWord> out;
  StateWord cur;
  for (std::size_t len = 1; len <= max_len; ++len) {
    cur.assign(len, 0);
    while (true) {
      out.push_back(cur);
      std::size_t i = len;
      while (i > 0 && cur[i - 1] + 1 == num_states) cur[--i] = 0;
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  return out;
}

std::vector<LetterString> all_strings(std::size_t num_letters,
                                      std::size_t min_len,
                                      std::size_t max_len) {
  std::vector<LetterString> out;
  LetterString cur;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    if (len == 0) {
      out.push_back({});
      continue;
    }
    cur.assign(len, 0);
    while (true) {
      out.push_back(cur);
      std::size_t i = len;
      while (i > 0 && cur[i - 1] + 1 == num_letters) cur[--i] = 0;
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  return out;
}

std::vector<std::vector<StateWord>> enumerate_classes(const MealyAutomaton& aut,
                                                      std::size_t max_len,
                                                      const WpOptions& opts) {
  if (max_len < 1) throw input_error("length bound must be >= 1");
  std::vector<std::vector<StateWord>> classes;
  for (const StateWord& w : all_words(aut.num_states(), max_len)) {
    bool placed = false;
    for (auto& cls : classes) {
      if (words_equivalent(aut, cls.front(), w, opts)) {
        cls.push_back(w);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({w});
  }
  return classes;
}

}  // namespace fpauto
