#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fpauto/fixtures.hpp"
#include "fpauto/free_product.hpp"

using namespace fpauto;

namespace {

FreeProductAutomaton rz2_squared() {
  MealyAutomaton rz2 = make_rz2();
  StateMap phi = constant_hom(rz2, rz2, {rz2.state("x")});
  return build_free_product(rz2, rz2, phi);
}

}  // namespace

TEST_CASE("RZ2*RZ2 sizes") {
  FreeProductAutomaton fp = rz2_squared();
  CHECK(fp.underlying.num_states() == 4);
  CHECK(fp.underlying.num_letters() == 19);  // 4*2*2 + 3
  CHECK(fp.left_states.size() == 2);
  CHECK(fp.right_states.size() == 2);
}

TEST_CASE("collision renaming and its absence") {
  MealyAutomaton rz2 = make_rz2();
  FreeProductAutomaton fp = rz2_squared();
  CHECK(fp.underlying.state_name(0) == "x.L");
  CHECK(fp.underlying.state_name(2) == "x.R");

  BuildOptions no_rename;
  no_rename.rename_on_collision = false;
  StateMap phi = constant_hom(rz2, rz2, {rz2.state("x")});
  CHECK_THROWS_AS(build_free_product(rz2, rz2, phi, no_rename), input_error);

  // disjoint names: kept as-is
  MealyAutomaton add = make_add();
  StateMap psi = constant_hom(add, rz2, {rz2.state("x")});
  FreeProductAutomaton mixed = build_free_product(add, rz2, psi);
  CHECK(mixed.underlying.state_name(0) == "q");
  CHECK(mixed.underlying.state_name(2) == "x");
}

TEST_CASE("transition rows match the construction") {
  FreeProductAutomaton fp = rz2_squared();
  const MealyAutomaton& m = fp.underlying;
  const StateId xl = m.state("x.L");
  const LetterId a = fp.left_factor.letter("a");
  const LetterId b = fp.left_factor.letter("b");

  // x (left) on an unmarked (b,b) domino: emits DS(a,b), stays put
  {
    const auto& arr = m.arrow(xl, fp.domino_id(Mark::Unmarked, b, b));
    CHECK(arr.next == xl);
    CHECK(arr.out == fp.domino_id(Mark::S, a, b));
  }
  // x (left) on a closed gate: jumps to phi(x), half-opens
  {
    const auto& arr = m.arrow(xl, fp.gate_id(GateKind::Closed));
    CHECK(arr.next == m.state("x.R"));
    CHECK(arr.out == fp.gate_id(GateKind::HalfOpen));
  }
  // full row-by-row audit
  CHECK(audit_table(fp).empty());
}

TEST_CASE("structural closure of the table") {
  FreeProductAutomaton fp = rz2_squared();
  const MealyAutomaton& m = fp.underlying;
  const std::size_t n_left = fp.num_left();

  for (StateId q = 0; q < m.num_states(); ++q) {
    for (LetterId c = 0; c < m.num_letters(); ++c) {
      const auto& arr = m.arrow(q, c);
      const Symbol& sym = fp.symbol(c);
      if (!fp.is_left(q)) {
        // right states recurse only to right states
        CHECK(arr.next >= n_left);
      } else if (sym.kind == Symbol::Kind::Domino) {
        // left states stay left except through closed/half-open gates
        CHECK(arr.next < n_left);
      }
      // circled dominoes and open gates are inert
      const bool inert =
          (sym.kind == Symbol::Kind::Domino && sym.mark == Mark::Circled) ||
          (sym.kind == Symbol::Kind::Gate && sym.gate == GateKind::Open);
      if (inert) {
        CHECK(arr.next == q);
        CHECK(arr.out == c);
      }
    }
  }
}

TEST_CASE("adjoin_word_state") {
  MealyAutomaton rz2 = make_rz2();
  MealyAutomaton add = make_add();
  const StateId x = rz2.state("x"), y = rz2.state("y");
  const StateId q = add.state("q");

  SUBCASE("xy collapses to y") {
    AdjoinResult res = adjoin_word_state(rz2, {x, y}, "w");
    CHECK(words_equivalent(res.automaton, {res.state},
                           {res.automaton.state("y")}));
  }

  SUBCASE("singleton word duplicates the row") {
    AdjoinResult res = adjoin_word_state(add, {q}, "w");
    CHECK(res.automaton.num_states() == add.num_states() + 2);  // (q), then (e)
    CHECK(words_equivalent(res.automaton, {res.state},
                           {res.automaton.state("q")}));
  }

  SUBCASE("qq adds the reachable tuple closure and acts as +2") {
    AdjoinResult res = adjoin_word_state(add, {q, q}, "w");
    // {(q,q), (e,q), (q,e), (e,e)}
    CHECK(res.automaton.num_states() == add.num_states() + 4);
    CHECK(res.automaton.find_state("w").has_value());
    CHECK(res.automaton.find_state("w(e,q)").has_value());
    CHECK(res.automaton.find_state("w(q,e)").has_value());
    CHECK(res.automaton.find_state("w(e,e)").has_value());
    CHECK(words_equivalent(res.automaton, {res.state},
                           {res.automaton.state("q"), res.automaton.state("q")}));
    // 1 + 2 = 3 in reverse binary: "10" -> "11"
    LetterString one{add.letter("1"), add.letter("0")};
    LetterString three{add.letter("1"), add.letter("1")};
    CHECK(act_state(res.automaton, res.state, one) == three);
  }

  SUBCASE("name collision is rejected") {
    CHECK_THROWS_AS(adjoin_word_state(rz2, {x, y}, "x"), input_error);
  }
}

TEST_CASE("normalize_state_map realizes word images as states") {
  MealyAutomaton rz2 = make_rz2();
  MealyAutomaton add = make_add();
  const StateId q = add.state("q");
  StateMap phi;
  phi.images = {{q, q}, {q, q}};  // both RZ2 generators to qq
  auto [ext, norm] = normalize_state_map(add, phi);
  CHECK(norm.size() == 2);
  CHECK(norm[0] == norm[1]);  // identical images are deduplicated
  CHECK(ext.num_states() == add.num_states() + 4);
  CHECK(words_equivalent(ext, {norm[0]}, {q, q}));
}

TEST_CASE("build_chain of three RZ2 copies") {
  MealyAutomaton rz2 = make_rz2();
  std::vector<MealyAutomaton> factors{rz2, rz2, rz2};
  StateMap to_x = constant_hom(rz2, rz2, {rz2.state("x")});
  std::vector<ChainHom> homs{{1, to_x}, {2, to_x}};
  FreeProductAutomaton fp = build_chain(factors, homs);

  CHECK(fp.underlying.num_states() == 6);
  CHECK(fp.underlying.num_letters() == 4 * 2 * 19 + 3);  // 155
  CHECK(fp.right_factor.num_letters() == 19);
  CHECK(audit_table(fp).empty());
  // chain naming: ".1".."".3" suffixes
  CHECK(fp.underlying.find_state("x.1").has_value());
  CHECK(fp.underlying.find_state("x.3").has_value());
}

TEST_CASE("chain with two distinct factors equals the plain product") {
  MealyAutomaton add = make_add();
  MealyAutomaton rz2 = make_rz2();
  StateMap to_x = constant_hom(add, rz2, {rz2.state("x")});
  FreeProductAutomaton direct = build_free_product(add, rz2, to_x);
  FreeProductAutomaton chained =
      build_chain({add, rz2}, {{1, to_x}});
  CHECK(chained.underlying.state_names() == direct.underlying.state_names());
  CHECK(chained.underlying.letter_names() == direct.underlying.letter_names());
  for (std::size_t i = 0; i < direct.underlying.table().size(); ++i) {
    CHECK(chained.underlying.table()[i].next == direct.underlying.table()[i].next);
    CHECK(chained.underlying.table()[i].out == direct.underlying.table()[i].out);
  }
}

TEST_CASE("chain hom validation") {
  MealyAutomaton rz2 = make_rz2();
  StateMap to_x = constant_hom(rz2, rz2, {rz2.state("x")});
  CHECK_THROWS_AS(build_chain({rz2}, {}), input_error);
  CHECK_THROWS_AS(build_chain({rz2, rz2}, {}), input_error);
  // hom must target a later factor
  CHECK_THROWS_AS(build_chain({rz2, rz2}, {{0, to_x}}), input_error);
}

TEST_CASE("phi validation") {
  MealyAutomaton rz2 = make_rz2();
  MealyAutomaton add = make_add();
  std::vector<StateId> bad{0, 9};
  CHECK_THROWS_AS(build_free_product(add, rz2, bad), input_error);
  std::vector<StateId> partial{0};
  CHECK_THROWS_AS(build_free_product(add, rz2, partial), input_error);
}
