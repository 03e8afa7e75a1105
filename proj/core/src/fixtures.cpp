#include "fpauto/fixtures.hpp"

namespace fpauto {

MealyAutomaton make_rz2() {
  // (state, letter) -> (next, out), rows x then y, letters a then b
  std::vector<MealyAutomaton::Arrow> table = {
      {0, 0}, {0, 0},  // x: always emit a, stay x
      {1, 1}, {1, 1},  // y: always emit b, stay y
  };
  return MealyAutomaton("RZ2", {"x", "y"}, {"a", "b"}, std::move(table));
}

MealyAutomaton make_add() {
  std::vector<MealyAutomaton::Arrow> table = {
      {1, 1}, {0, 0},  // q: 0 -> (e, 1); 1 -> (q, 0)
      {1, 0}, {1, 1},  // e: identity
  };
  return MealyAutomaton("ADD", {"q", "e"}, {"0", "1"}, std::move(table));
}

}  // namespace fpauto
