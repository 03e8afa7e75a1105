#include "fpauto/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace fpauto {

using ordered_json = nlohmann::ordered_json;

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    const bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                    (ch >= '0' && ch <= '9') || ch == '_' || ch == '.' ||
                    ch == '(' || ch == ')' || ch == '$' || ch == ',' ||
                    ch == '-';
    if (!ok) return false;
  }
  return true;
}

namespace {

// Split on commas at parenthesis depth zero, so names like "(q,e)" survive.
std::vector<std::string> split_toplevel_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

ordered_json automaton_to_json(const MealyAutomaton& aut) {
  ordered_json doc;
  doc["name"] = aut.name();
  doc["states"] = aut.state_names();
  doc["alphabet"] = aut.letter_names();
  ordered_json transitions = ordered_json::array();
  for (StateId q = 0; q < aut.num_states(); ++q) {
    for (LetterId c = 0; c < aut.num_letters(); ++c) {
      const auto& a = aut.arrow(q, c);
      transitions.push_back({{"from", aut.state_name(q)},
                             {"input", aut.letter_name(c)},
                             {"to", aut.state_name(a.next)},
                             {"output", aut.letter_name(a.out)}});
    }
  }
  doc["transitions"] = std::move(transitions);
  return doc;
}

MealyAutomaton automaton_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw input_error("document is not a JSON object");
  for (const char* field : {"name", "states", "alphabet", "transitions"})
    if (!doc.contains(field))
      throw input_error(std::string("document missing field '") + field + "'");

  const std::string name = doc["name"].get<std::string>();
  std::vector<std::string> states, alphabet;
  for (const auto& s : doc["states"]) {
    std::string id = s.get<std::string>();
    if (!valid_identifier(id))
      throw input_error("state " + std::to_string(states.size()) +
                        ": invalid identifier '" + id + "'");
    states.push_back(std::move(id));
  }
  for (const auto& s : doc["alphabet"]) {
    std::string id = s.get<std::string>();
    if (!valid_identifier(id))
      throw input_error("alphabet entry " + std::to_string(alphabet.size()) +
                        ": invalid identifier '" + id + "'");
    alphabet.push_back(std::move(id));
  }

  // Temporary automaton for name lookups would need a table; index by hand.
  auto index_of = [](const std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    return it == v.end() ? SIZE_MAX : static_cast<std::size_t>(it - v.begin());
  };

  std::vector<MealyAutomaton::Arrow> table(states.size() * alphabet.size());
  std::vector<bool> filled(table.size(), false);
  std::size_t line = 0;
  for (const auto& t : doc["transitions"]) {
    ++line;
    for (const char* field : {"from", "input", "to", "output"})
      if (!t.contains(field))
        throw input_error("transition " + std::to_string(line) +
                          ": missing field '" + field + "'");
    const std::size_t from = index_of(states, t["from"].get<std::string>());
    const std::size_t input = index_of(alphabet, t["input"].get<std::string>());
    const std::size_t to = index_of(states, t["to"].get<std::string>());
    const std::size_t output = index_of(alphabet, t["output"].get<std::string>());
    if (from == SIZE_MAX)
      throw input_error("transition " + std::to_string(line) +
                        ": unknown state '" + t["from"].get<std::string>() + "'");
    if (input == SIZE_MAX)
      throw input_error("transition " + std::to_string(line) +
                        ": unknown letter '" + t["input"].get<std::string>() + "'");
    if (to == SIZE_MAX)
      throw input_error("transition " + std::to_string(line) +
                        ": unknown state '" + t["to"].get<std::string>() + "'");
    if (output == SIZE_MAX)
      throw input_error("transition " + std::to_string(line) +
                        ": unknown letter '" + t["output"].get<std::string>() +
                        "'");
    const std::size_t slot = from * alphabet.size() + input;
    if (filled[slot])
      throw input_error("transition " + std::to_string(line) +
                        ": duplicate pair (" + states[from] + ", " +
                        alphabet[input] + ")");
    filled[slot] = true;
    table[slot] = {static_cast<StateId>(to), static_cast<LetterId>(output)};
  }
  for (std::size_t q = 0; q < states.size(); ++q)
    for (std::size_t c = 0; c < alphabet.size(); ++c)
      if (!filled[q * alphabet.size() + c])
        throw input_error("missing transition for pair (" + states[q] + ", " +
                          alphabet[c] + ")");

  return MealyAutomaton(name, std::move(states), std::move(alphabet),
                        std::move(table));
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

MealyAutomaton parse_automaton(const std::string& text) {
  return automaton_from_json(parse_json(text));
}

std::string serialize_automaton(const MealyAutomaton& aut) {
  return dump(automaton_to_json(aut));
}

std::string serialize_free_product(const FreeProductAutomaton& fp) {
  ordered_json doc = automaton_to_json(fp.underlying);
  ordered_json meta;
  ordered_json left = ordered_json::array(), right = ordered_json::array();
  for (StateId q : fp.left_states) left.push_back(fp.underlying.state_name(q));
  for (StateId q : fp.right_states) right.push_back(fp.underlying.state_name(q));
  meta["left_states"] = std::move(left);
  meta["right_states"] = std::move(right);
  ordered_json phi;
  for (StateId s = 0; s < fp.phi.size(); ++s)
    phi[fp.left_factor.state_name(s)] = fp.right_factor.state_name(fp.phi[s]);
  meta["phi"] = std::move(phi);
  meta["left_factor"] = automaton_to_json(fp.left_factor);
  meta["right_factor"] = automaton_to_json(fp.right_factor);
  doc["free_product"] = std::move(meta);
  return dump(doc);
}

FreeProductAutomaton parse_free_product(const std::string& text) {
  ordered_json doc = parse_json(text);
  if (!doc.contains("free_product"))
    throw input_error("document has no 'free_product' metadata");
  const ordered_json& meta = doc["free_product"];
  for (const char* field :
       {"left_states", "right_states", "phi", "left_factor", "right_factor"})
    if (!meta.contains(field))
      throw input_error(std::string("free_product metadata missing '") + field +
                        "'");

  FreeProductAutomaton fp;
  fp.underlying = automaton_from_json(doc);
  fp.left_factor = automaton_from_json(meta["left_factor"]);
  fp.right_factor = automaton_from_json(meta["right_factor"]);

  for (const auto& s : meta["left_states"])
    fp.left_states.push_back(fp.underlying.state(s.get<std::string>()));
  for (const auto& s : meta["right_states"])
    fp.right_states.push_back(fp.underlying.state(s.get<std::string>()));
  if (fp.left_states.size() != fp.left_factor.num_states() ||
      fp.right_states.size() != fp.right_factor.num_states() ||
      fp.left_states.size() + fp.right_states.size() !=
          fp.underlying.num_states())
    throw input_error("left/right states do not partition the product's states");
  for (std::size_t i = 0; i < fp.left_states.size(); ++i)
    if (fp.left_states[i] != i ||
        fp.underlying.state_name(fp.left_states[i]) !=
            fp.left_factor.state_name(static_cast<StateId>(i)))
      throw input_error("left states must come first, in factor order");
  for (std::size_t i = 0; i < fp.right_states.size(); ++i)
    if (fp.right_states[i] != fp.left_states.size() + i)
      throw input_error("right states must follow the left states in order");

  fp.phi.assign(fp.left_factor.num_states(), 0);
  std::size_t seen = 0;
  for (const auto& [src, tgt] : meta["phi"].items()) {
    fp.phi[fp.left_factor.state(src)] =
        fp.right_factor.state(tgt.get<std::string>());
    ++seen;
  }
  if (seen != fp.left_factor.num_states())
    throw input_error("phi is not total over the left factor's states");

  // The alphabet must be the canonical domino/gate layout; reconstruct the
  // symbols and cross-check every name.
  const std::size_t na = fp.left_factor.num_letters();
  const std::size_t nb = fp.right_factor.num_letters();
  if (fp.underlying.num_letters() != 4 * na * nb + 3)
    throw input_error("product alphabet has wrong size");
  for (Mark m : {Mark::Unmarked, Mark::S, Mark::T, Mark::Circled})
    for (LetterId a = 0; a < na; ++a)
      for (LetterId b = 0; b < nb; ++b)
        fp.symbols.push_back(Symbol::domino(a, b, m));
  for (GateKind g : {GateKind::Closed, GateKind::HalfOpen, GateKind::Open})
    fp.symbols.push_back(Symbol::gate_sym(g));
  for (LetterId c = 0; c < fp.underlying.num_letters(); ++c)
    if (fp.underlying.letter_name(c) !=
        symbol_name(fp.symbols[c], fp.left_factor, fp.right_factor))
      throw input_error("product alphabet entry " + std::to_string(c) +
                        " ('" + fp.underlying.letter_name(c) +
                        "') is not in canonical order");
  return fp;
}

StateMap parse_state_map(const std::string& text, const MealyAutomaton& source,
                         const MealyAutomaton& target) {
  StateMap phi;
  phi.images.assign(source.num_states(), StateWord{});
  std::vector<bool> set(source.num_states(), false);
  for (const std::string& entry : split_toplevel_commas(text)) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw input_error("state map entry '" + entry + "' has no ':'");
    const std::string src = entry.substr(0, colon);
    const std::string tgt = entry.substr(colon + 1);
    const StateId s = source.state(src);
    if (set[s]) throw input_error("state map maps '" + src + "' twice");
    set[s] = true;
    phi.images[s] = {target.state(tgt)};
  }
  for (StateId s = 0; s < source.num_states(); ++s)
    if (!set[s])
      throw input_error("state map missing an image for '" +
                        source.state_name(s) + "'");
  return phi;
}

std::string format_state_map(const StateMap& phi, const MealyAutomaton& source,
                             const MealyAutomaton& target) {
  std::string out;
  for (StateId s = 0; s < phi.images.size(); ++s) {
    if (s) out += ",";
    out += source.state_name(s) + ":";
    const StateWord& img = phi.images[s];
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (i) out += ",";
      out += target.state_name(img[i]);
    }
  }
  return out;
}

StateWord parse_word(const MealyAutomaton& aut, const std::string& text) {
  StateWord w;
  for (const std::string& part : split_toplevel_commas(text))
    w.push_back(aut.state(part));
  return w;
}

std::string format_word(const MealyAutomaton& aut, const StateWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += aut.state_name(w[i]);
  }
  return out;
}

LetterString parse_letters(const MealyAutomaton& aut, const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  LetterString s;
  if (tokens.size() == 1 && !aut.find_letter(tokens[0])) {
    for (char ch : tokens[0]) s.push_back(aut.letter(std::string(1, ch)));
    return s;
  }
  for (const std::string& t : tokens) s.push_back(aut.letter(t));
  return s;
}

std::string format_letters(const MealyAutomaton& aut, const LetterString& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += aut.letter_name(s[i]);
  }
  return out;
}

std::string serialize_report(const FreeProductAutomaton& fp,
                             const FaithReport& faith,
                             const RestrictionReport& restr,
                             std::size_t state_cap) {
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["bounds"] = {{"max_word_len", faith.bound},
                   {"restriction_word_len", restr.word_bound},
                   {"depth", restr.depth_bound},
                   {"state_cap", state_cap}};
  doc["pairs_checked"] = faith.pairs_checked;
  doc["restriction_cases"] = restr.cases_checked;
  ordered_json violations = ordered_json::array();
  for (const FaithViolation& v : faith.violations)
    violations.push_back(
        {{"lhs", format_word(fp.underlying, v.lhs)},
         {"rhs", format_word(fp.underlying, v.rhs)},
         {"witness", format_letters(fp.underlying, v.witness)},
         {"direction", v.direction}});
  for (const RestrictionViolation& v : restr.violations) {
    const MealyAutomaton& factor =
        (v.check == "right-on-T" || v.check == "right-inert") ? fp.right_factor
                                                              : fp.left_factor;
    violations.push_back(
        {{"lhs", format_word(factor, v.word)},
         {"rhs", ""},
         {"witness", format_letters(fp.underlying, v.input)},
         {"direction", "restriction-" + v.check}});
  }
  doc["violations"] = std::move(violations);
  return dump(doc);
}

}  // namespace fpauto
