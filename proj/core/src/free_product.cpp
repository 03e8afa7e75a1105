#include "fpauto/free_product.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace fpauto {

std::string symbol_name(const Symbol& sym, const MealyAutomaton& left,
                        const MealyAutomaton& right) {
  if (sym.kind == Symbol::Kind::Gate) {
    switch (sym.gate) {
      case GateKind::Closed: return "G_CLOSED";
      case GateKind::HalfOpen: return "G_HALF";
      case GateKind::Open: return "G_OPEN";
    }
  }
  std::string prefix;
  switch (sym.mark) {
    case Mark::Unmarked: prefix = "D"; break;
    case Mark::S: prefix = "DS"; break;
    case Mark::T: prefix = "DT"; break;
    case Mark::Circled: prefix = "DC"; break;
  }
  return prefix + "(" + left.letter_name(sym.a) + "," +
         right.letter_name(sym.b) + ")";
}

LetterId FreeProductAutomaton::domino_id(Mark m, LetterId a, LetterId b) const {
  const std::size_t na = left_factor.num_letters();
  const std::size_t nb = right_factor.num_letters();
  if (a >= na || b >= nb) throw input_error("domino component out of range");
  return static_cast<LetterId>(static_cast<std::size_t>(m) * na * nb +
                               a * nb + b);
}

LetterId FreeProductAutomaton::gate_id(GateKind g) const {
  const std::size_t na = left_factor.num_letters();
  const std::size_t nb = right_factor.num_letters();
  return static_cast<LetterId>(4 * na * nb + static_cast<std::size_t>(g));
}

namespace {

// Rename states with a suffix; letters are untouched.
MealyAutomaton with_state_suffix(const MealyAutomaton& aut,
                                 const std::string& suffix) {
  std::vector<std::string> names;
  names.reserve(aut.num_states());
  for (const auto& n : aut.state_names()) names.push_back(n + suffix);
  return MealyAutomaton(aut.name(), std::move(names), aut.letter_names(),
                        aut.table());
}

bool names_disjoint(const MealyAutomaton& a, const MealyAutomaton& b) {
  for (const auto& n : a.state_names())
    if (b.find_state(n)) return false;
  return true;
}

}  // namespace

FreeProductAutomaton build_free_product(const MealyAutomaton& a1,
                                        const MealyAutomaton& a2,
                                        const std::vector<StateId>& phi,
                                        const BuildOptions& opts) {
  if (phi.size() != a1.num_states())
    throw input_error("phi is not total over the left factor's states");
  for (StateId t : phi)
    if (t >= a2.num_states())
      throw input_error("phi image outside the right factor's states");

  MealyAutomaton left = a1;
  MealyAutomaton right = a2;
  if (!names_disjoint(left, right)) {
    if (!opts.rename_on_collision)
      throw input_error("state name collision between factors '" + a1.name() +
                        "' and '" + a2.name() + "' (renaming disabled)");
    left = with_state_suffix(a1, ".L");
    right = with_state_suffix(a2, ".R");
  }

  const std::size_t n1 = left.num_states();
  const std::size_t n2 = right.num_states();
  const std::size_t na = left.num_letters();
  const std::size_t nb = right.num_letters();

  // Alphabet C: unmarked, S-marked, T-marked, circled dominoes (a-major),
  // then the three gates.  |C| = 4|A||B| + 3.
  std::vector<Symbol> symbols;
  symbols.reserve(4 * na * nb + 3);
  for (Mark m : {Mark::Unmarked, Mark::S, Mark::T, Mark::Circled})
    for (LetterId a = 0; a < na; ++a)
      for (LetterId b = 0; b < nb; ++b)
        symbols.push_back(Symbol::domino(a, b, m));
  for (GateKind g : {GateKind::Closed, GateKind::HalfOpen, GateKind::Open})
    symbols.push_back(Symbol::gate_sym(g));

  std::vector<std::string> letter_names;
  letter_names.reserve(symbols.size());
  for (const Symbol& sym : symbols)
    letter_names.push_back(symbol_name(sym, left, right));

  std::vector<std::string> state_names = left.state_names();
  state_names.insert(state_names.end(), right.state_names().begin(),
                     right.state_names().end());

  auto domino = [&](Mark m, LetterId a, LetterId b) {
    return static_cast<LetterId>(static_cast<std::size_t>(m) * na * nb +
                                 a * nb + b);
  };
  auto gate = [&](GateKind g) {
    return static_cast<LetterId>(4 * na * nb + static_cast<std::size_t>(g));
  };

  const std::size_t nc = symbols.size();
  std::vector<MealyAutomaton::Arrow> table(static_cast<std::size_t>(n1 + n2) *
                                           nc);
  auto put = [&](StateId q, LetterId c, StateId next, LetterId out) {
    table[static_cast<std::size_t>(q) * nc + c] = {next, out};
  };

  for (StateId s = 0; s < n1; ++s) {
    const StateId s_fp = s;
    const StateId sphi_fp = static_cast<StateId>(n1) + phi[s];
    for (LetterId a = 0; a < na; ++a) {
      const auto& d1 = left.arrow(s, a);
      for (LetterId b = 0; b < nb; ++b) {
        put(s_fp, domino(Mark::Unmarked, a, b), d1.next,
            domino(Mark::S, d1.out, b));
        put(s_fp, domino(Mark::S, a, b), d1.next, domino(Mark::S, d1.out, b));
        put(s_fp, domino(Mark::T, a, b), s_fp, domino(Mark::Circled, a, b));
        put(s_fp, domino(Mark::Circled, a, b), s_fp,
            domino(Mark::Circled, a, b));
      }
    }
    put(s_fp, gate(GateKind::Closed), sphi_fp, gate(GateKind::HalfOpen));
    put(s_fp, gate(GateKind::HalfOpen), sphi_fp, gate(GateKind::HalfOpen));
    put(s_fp, gate(GateKind::Open), s_fp, gate(GateKind::Open));
  }

  for (StateId t = 0; t < n2; ++t) {
    const StateId t_fp = static_cast<StateId>(n1) + t;
    for (LetterId b = 0; b < nb; ++b) {
      const auto& d2 = right.arrow(t, b);
      const StateId t0_fp = static_cast<StateId>(n1) + d2.next;
      for (LetterId a = 0; a < na; ++a) {
        put(t_fp, domino(Mark::Unmarked, a, b), t_fp,
            domino(Mark::Unmarked, a, b));
        put(t_fp, domino(Mark::S, a, b), t0_fp, domino(Mark::T, a, d2.out));
        put(t_fp, domino(Mark::T, a, b), t0_fp, domino(Mark::T, a, d2.out));
        put(t_fp, domino(Mark::Circled, a, b), t_fp,
            domino(Mark::Circled, a, b));
      }
    }
    put(t_fp, gate(GateKind::Closed), t_fp, gate(GateKind::Closed));
    put(t_fp, gate(GateKind::HalfOpen), t_fp, gate(GateKind::Open));
    put(t_fp, gate(GateKind::Open), t_fp, gate(GateKind::Open));
  }

  FreeProductAutomaton fp;
  fp.underlying =
      MealyAutomaton(left.name() + "*" + right.name(), std::move(state_names),
                     std::move(letter_names), std::move(table));
  fp.left_factor = std::move(left);
  fp.right_factor = std::move(right);
  for (StateId q = 0; q < n1; ++q) fp.left_states.push_back(q);
  for (StateId q = 0; q < n2; ++q)
    fp.right_states.push_back(static_cast<StateId>(n1) + q);
  fp.phi = phi;
  fp.symbols = std::move(symbols);
  return fp;
}

FreeProductAutomaton build_free_product(const MealyAutomaton& a1,
                                        const MealyAutomaton& a2,
                                        const StateMap& phi,
                                        const BuildOptions& opts) {
  auto [a2_ext, phi_norm] = normalize_state_map(a2, phi, opts.wp);
  return build_free_product(a1, a2_ext, phi_norm, opts);
}

AdjoinResult adjoin_word_state(const MealyAutomaton& aut, const StateWord& w,
                               const std::string& name, const WpOptions& opts) {
  aut.check_word(w);

  // Reachable product tuples from the starting tuple, breadth first.
  std::vector<std::vector<StateId>> tuples;
  std::map<std::vector<StateId>, StateId> index;  // tuple -> new state index
  tuples.push_back(w);
  index.emplace(w, static_cast<StateId>(aut.num_states()));
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (LetterId c = 0; c < aut.num_letters(); ++c) {
      auto [next, out] = step_product(aut, ProductState{tuples[i]}, c);
      (void)out;
      if (!index.count(next.tuple)) {
        if (tuples.size() + 1 > opts.state_cap)
          throw resource_error("adjoined tuple closure exceeded state cap of " +
                                   std::to_string(opts.state_cap),
                               opts.state_cap);
        index.emplace(next.tuple,
                      static_cast<StateId>(aut.num_states() + tuples.size()));
        tuples.push_back(next.tuple);
      }
    }
  }

  auto tuple_name = [&](const std::vector<StateId>& t) {
    if (t == w) return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += aut.state_name(t[i]);
    }
    return s + ")";
  };

  std::vector<std::string> state_names = aut.state_names();
  for (const auto& t : tuples) {
    std::string n = tuple_name(t);
    if (aut.find_state(n))
      throw input_error("adjoined state name '" + n + "' already exists");
    state_names.push_back(std::move(n));
  }

  const std::size_t nc = aut.num_letters();
  std::vector<MealyAutomaton::Arrow> table = aut.table();
  table.resize((aut.num_states() + tuples.size()) * nc);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const StateId q = static_cast<StateId>(aut.num_states() + i);
    for (LetterId c = 0; c < nc; ++c) {
      auto [next, out] = step_product(aut, ProductState{tuples[i]}, c);
      table[static_cast<std::size_t>(q) * nc + c] = {index.at(next.tuple), out};
    }
  }

  AdjoinResult res;
  res.automaton = MealyAutomaton(aut.name(), std::move(state_names),
                                 aut.letter_names(), std::move(table));
  res.state = static_cast<StateId>(aut.num_states());
  return res;
}

std::pair<MealyAutomaton, std::vector<StateId>> normalize_state_map(
    const MealyAutomaton& target, const StateMap& phi, const WpOptions& opts) {
  MealyAutomaton cur = target;
  std::vector<StateId> out;
  std::map<StateWord, StateId> adjoined;  // word -> realized state
  for (const StateWord& img : phi.images) {
    cur.check_word(img);
    if (img.size() == 1) {
      out.push_back(img[0]);
      continue;
    }
    auto it = adjoined.find(img);
    if (it != adjoined.end()) {
      out.push_back(it->second);
      continue;
    }
    std::string name = "(";
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (i) name += ",";
      name += cur.state_name(img[i]);
    }
    name += ")";
    AdjoinResult res = adjoin_word_state(cur, img, name, opts);
    cur = std::move(res.automaton);
    adjoined.emplace(img, res.state);
    out.push_back(res.state);
  }
  return {std::move(cur), std::move(out)};
}

FreeProductAutomaton build_chain(const std::vector<MealyAutomaton>& factors,
                                 const std::vector<ChainHom>& homs,
                                 const BuildOptions& opts) {
  const std::size_t n = factors.size();
  if (n < 2) throw input_error("chain needs at least two factors");
  if (homs.size() != n - 1)
    throw input_error("chain needs one homomorphism per factor except the last");
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (homs[i].target <= i || homs[i].target >= n)
      throw input_error("chain hom " + std::to_string(i) +
                        " must target a later factor");
    if (homs[i].map.images.size() != factors[i].num_states())
      throw input_error("chain hom " + std::to_string(i) +
                        " is not total over its factor's states");
    for (const StateWord& img : homs[i].map.images)
      factors[homs[i].target].check_word(img);
  }

  // Disjoint state names across all factors; suffix ".1"..".n" on collision.
  bool collision = false;
  {
    std::set<std::string> seen;
    for (const auto& f : factors)
      for (const auto& s : f.state_names())
        if (!seen.insert(s).second) collision = true;
  }
  std::vector<MealyAutomaton> renamed;
  renamed.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    renamed.push_back(collision
                          ? with_state_suffix(factors[i],
                                              "." + std::to_string(i + 1))
                          : factors[i]);

  // Right-to-left fold; the state names of every suffix factor survive into
  // the partial product, so later-targeting homs resolve by name.
  MealyAutomaton cur = renamed[n - 1];
  FreeProductAutomaton fp;
  for (std::size_t idx = n - 1; idx-- > 0;) {
    const ChainHom& hom = homs[idx];
    StateMap into_cur;
    into_cur.images.reserve(hom.map.images.size());
    for (const StateWord& img : hom.map.images) {
      StateWord mapped;
      for (StateId q : img)
        mapped.push_back(cur.state(renamed[hom.target].state_name(q)));
      into_cur.images.push_back(std::move(mapped));
    }
    BuildOptions step_opts = opts;
    step_opts.rename_on_collision = false;
    try {
      fp = build_free_product(renamed[idx], cur, into_cur, step_opts);
    } catch (const input_error& e) {
      throw input_error("chain step " + std::to_string(idx + 1) + ": " +
                        e.what());
    }
    cur = fp.underlying;
  }
  return fp;
}

std::vector<std::string> audit_table(const FreeProductAutomaton& fp) {
  std::vector<std::string> issues;
  const MealyAutomaton& m = fp.underlying;

  auto complain = [&](StateId q, LetterId c, StateId en, LetterId eo) {
    const auto& a = m.arrow(q, c);
    if (a.next != en || a.out != eo)
      issues.push_back("row (" + m.state_name(q) + ", " + m.letter_name(c) +
                       "): got (" + m.state_name(a.next) + ", " +
                       m.letter_name(a.out) + "), expected (" +
                       m.state_name(en) + ", " + m.letter_name(eo) + ")");
  };

  for (StateId q = 0; q < m.num_states(); ++q) {
    for (LetterId c = 0; c < m.num_letters(); ++c) {
      const Symbol& sym = fp.symbol(c);
      if (fp.is_left(q)) {
        const StateId s = fp.to_left(q);
        const StateId sphi = fp.from_right(fp.phi[s]);
        if (sym.kind == Symbol::Kind::Domino) {
          const auto& d1 = fp.left_factor.arrow(s, sym.a);
          switch (sym.mark) {
            case Mark::Unmarked:
            case Mark::S:
              complain(q, c, fp.from_left(d1.next),
                       fp.domino_id(Mark::S, d1.out, sym.b));
              break;
            case Mark::T:
              complain(q, c, q, fp.domino_id(Mark::Circled, sym.a, sym.b));
              break;
            case Mark::Circled:
              complain(q, c, q, c);
              break;
          }
        } else {
          switch (sym.gate) {
            case GateKind::Closed:
            case GateKind::HalfOpen:
              complain(q, c, sphi, fp.gate_id(GateKind::HalfOpen));
              break;
            case GateKind::Open:
              complain(q, c, q, c);
              break;
          }
        }
      } else {
        const StateId t = fp.to_right(q);
        if (sym.kind == Symbol::Kind::Domino) {
          const auto& d2 = fp.right_factor.arrow(t, sym.b);
          switch (sym.mark) {
            case Mark::Unmarked:
            case Mark::Circled:
              complain(q, c, q, c);
              break;
            case Mark::S:
            case Mark::T:
              complain(q, c, fp.from_right(d2.next),
                       fp.domino_id(Mark::T, sym.a, d2.out));
              break;
          }
        } else {
          switch (sym.gate) {
            case GateKind::Closed:
            case GateKind::Open:
              complain(q, c, q, c);
              break;
            case GateKind::HalfOpen:
              complain(q, c, q, fp.gate_id(GateKind::Open));
              break;
          }
        }
      }
    }
  }
  return issues;
}

}  // namespace fpauto
