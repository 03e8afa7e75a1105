#ifndef FPAUTO_SYMBOL_HPP
#define FPAUTO_SYMBOL_HPP

#include <string>

#include "fpauto/mealy.hpp"

namespace fpauto {

enum class Mark { Unmarked, S, T, Circled };
enum class GateKind { Closed, HalfOpen, Open };

/// One tape letter of the free-product alphabet: a domino carrying letters
/// of both factor alphabets plus a mark, or one of the three gates.
struct Symbol {
  enum class Kind { Domino, Gate } kind;
  // Domino fields (valid when kind == Domino)
  LetterId a = 0;
  LetterId b = 0;
  Mark mark = Mark::Unmarked;
  // Gate field (valid when kind == Gate)
  GateKind gate = GateKind::Closed;

  static Symbol domino(LetterId a, LetterId b, Mark m) {
    return Symbol{Kind::Domino, a, b, m, GateKind::Closed};
  }
  static Symbol gate_sym(GateKind g) {
    return Symbol{Kind::Gate, 0, 0, Mark::Unmarked, g};
  }

  bool operator==(const Symbol&) const = default;
};

/// Serialized name: "D(a,b)", "DS(a,b)", "DT(a,b)", "DC(a,b)", "G_CLOSED",
/// "G_HALF", "G_OPEN".
std::string symbol_name(const Symbol& sym, const MealyAutomaton& left,
                        const MealyAutomaton& right);

}  // namespace fpauto

#endif  // FPAUTO_SYMBOL_HPP
