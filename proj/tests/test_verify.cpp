#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fpauto/fixtures.hpp"
#include "fpauto/verify.hpp"

using namespace fpauto;

namespace {

FreeProductAutomaton rz2_squared() {
  MealyAutomaton rz2 = make_rz2();
  return build_free_product(rz2, rz2,
                            constant_hom(rz2, rz2, {rz2.state("x")}));
}

FreeProductAutomaton add_rz2() {
  MealyAutomaton add = make_add();
  MealyAutomaton rz2 = make_rz2();
  return build_free_product(add, rz2,
                            constant_hom(add, rz2, {rz2.state("x")}));
}

// Corrupt one table entry of the product automaton.
FreeProductAutomaton corrupt(const FreeProductAutomaton& fp, StateId q,
                             LetterId c, StateId next, LetterId out) {
  FreeProductAutomaton bad = fp;
  std::vector<MealyAutomaton::Arrow> table = fp.underlying.table();
  table[static_cast<std::size_t>(q) * fp.underlying.num_letters() + c] = {next,
                                                                          out};
  bad.underlying =
      MealyAutomaton(fp.underlying.name(), fp.underlying.state_names(),
                     fp.underlying.letter_names(), std::move(table));
  return bad;
}

}  // namespace

TEST_CASE("decompose splits maximal runs") {
  FreeProductAutomaton fp = rz2_squared();
  const StateId xl = fp.underlying.state("x.L");
  const StateId yr = fp.underlying.state("y.R");
  const StateId xr = fp.underlying.state("x.R");

  AltDecomposition d = decompose(fp, {xl, yr, xl});
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0].side == Side::Left);
  CHECK(d.blocks[1].side == Side::Right);
  CHECK(d.blocks[2].side == Side::Left);
  CHECK(recompose(fp, d) == StateWord{xl, yr, xl});

  AltDecomposition d2 = decompose(fp, {xl, xl});
  REQUIRE(d2.blocks.size() == 1);
  CHECK(d2.blocks[0].word.size() == 2);

  AltDecomposition d3 = decompose(fp, {xr, yr});
  REQUIRE(d3.blocks.size() == 1);
  CHECK(d3.blocks[0].side == Side::Right);
}

TEST_CASE("oracle_equal implements the free-product normal form") {
  FreeProductAutomaton fp = rz2_squared();
  const StateId xl = fp.underlying.state("x.L");
  const StateId yl = fp.underlying.state("y.L");
  const StateId xr = fp.underlying.state("x.R");

  CHECK(oracle_equal(fp, {xl, yl}, {yl}));       // xy = y within the left factor
  CHECK_FALSE(oracle_equal(fp, {xl, xr}, {xr, xl}));  // LR vs RL
  CHECK_FALSE(oracle_equal(fp, {xl}, {xr}));     // factors never merge
  CHECK(oracle_equal(fp, {xl, xr, yl}, {xl, xr, yl}));
}

TEST_CASE("check_faithful passes on the fixture products") {
  FaithReport r1 = check_faithful(rz2_squared(), 3);
  CHECK(r1.passed());
  CHECK(r1.pairs_checked > 0);

  FaithReport r2 = check_faithful(add_rz2(), 2);
  CHECK(r2.passed());
}

TEST_CASE("check_faithful flags a corrupted table") {
  FreeProductAutomaton fp = rz2_squared();
  // make x.L ignore closed gates instead of jumping through them
  const StateId xl = fp.underlying.state("x.L");
  FreeProductAutomaton bad =
      corrupt(fp, xl, fp.gate_id(GateKind::Closed), xl,
              fp.gate_id(GateKind::Closed));
  FaithReport r = check_faithful(bad, 2);
  CHECK_FALSE(r.passed());
}

TEST_CASE("element counts match the oracle at L=3") {
  FreeProductAutomaton fp = rz2_squared();
  // the number of action classes equals the number of free-product normal
  // forms of syllable length <= 3: sum over m of 2 * 2^m... counted directly
  auto classes = enumerate_classes(fp.underlying, 3);
  // alternating sequences over two 2-element right-zero factors with at
  // most 3 letters: each word collapses to one of: 2 (len1) + 4 (len2 LR +
  // RL) + 8 (len3 LRL + RLR) per pattern...
  // count independently: normal forms with k syllables, each syllable one
  // of 2 elements, alternating tags starting L or R, k <= 3:
  // k=1: 2 tags * 2 = 4; k=2: 2 * 4 = 8; k=3: 2 * 8 = 16; total 28.
  CHECK(classes.size() == 28);
}

TEST_CASE("gamma formula on explicit shapes") {
  FreeProductAutomaton fp = rz2_squared();
  const StateId x = fp.left_factor.state("x.L");
  const StateId y = fp.left_factor.state("y.L");
  const LetterId a = fp.left_factor.letter("a");
  const LetterId b = fp.left_factor.letter("b");

  SUBCASE("n=1, w = u1 v1, gamma = D(ab, ab)") {
    AltDecomposition d;
    d.blocks.push_back({Side::Left, {x}});
    d.blocks.push_back({Side::Right, {y}});
    CHECK(gamma_formula_check(fp, d, {{a, b}}, {{a, b}}));
  }

  SUBCASE("n=2, all blocks length 1") {
    AltDecomposition d;
    d.blocks.push_back({Side::Left, {x}});
    d.blocks.push_back({Side::Right, {x}});
    d.blocks.push_back({Side::Left, {y}});
    d.blocks.push_back({Side::Right, {y}});
    CHECK(gamma_formula_check(fp, d, {{a}, {b}}, {{b}, {a}}));
  }

  SUBCASE("leading v0 leaves gamma unchanged") {
    AltDecomposition d;
    d.blocks.push_back({Side::Right, {y, x}});
    d.blocks.push_back({Side::Left, {x}});
    d.blocks.push_back({Side::Right, {y}});
    CHECK(gamma_formula_check(fp, d, {{a, a}}, {{b, b}}));
  }

  SUBCASE("trailing vn absent: S-marked end") {
    AltDecomposition d;
    d.blocks.push_back({Side::Left, {x}});
    d.blocks.push_back({Side::Right, {x}});
    d.blocks.push_back({Side::Left, {y, y}});
    CHECK(gamma_formula_check(fp, d, {{a}, {b}}, {{a}, {b}}));
  }

  SUBCASE("shape violations are rejected") {
    AltDecomposition d;
    d.blocks.push_back({Side::Right, {y}});
    CHECK_THROWS_AS(gamma_formula_check(fp, d, {}, {}), input_error);
    AltDecomposition d2;
    d2.blocks.push_back({Side::Left, {x}});
    CHECK_THROWS_AS(gamma_formula_check(fp, d2, {{a}}, {{a, b}}), input_error);
  }
}

TEST_CASE("gamma formula fails on a corrupted product") {
  FreeProductAutomaton fp = rz2_squared();
  const StateId xl = fp.underlying.state("x.L");
  // x.L rewrites the first component of DS(a,a) to b instead of a
  FreeProductAutomaton bad =
      corrupt(fp, xl, fp.domino_id(Mark::S, 0, 0), xl,
              fp.domino_id(Mark::S, 1, 0));
  const StateId x = fp.left_factor.state("x.L");
  const StateId y = fp.left_factor.state("y.L");
  AltDecomposition d;
  d.blocks.push_back({Side::Left, {x, x}});
  d.blocks.push_back({Side::Right, {y}});
  CHECK(gamma_formula_check(fp, d, {{0, 0}}, {{0, 0}}));
  CHECK_FALSE(gamma_formula_check(bad, d, {{0, 0}}, {{0, 0}}));
}

TEST_CASE("gamma formula on random well-shaped instances") {
  std::mt19937 rng(987654);
  FreeProductAutomaton fps[2] = {rz2_squared(), add_rz2()};
  std::uniform_int_distribution<int> d01(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const FreeProductAutomaton& fp = fps[trial % 2];
    const std::size_t nl = fp.left_factor.num_states();
    const std::size_t nr = fp.right_factor.num_states();
    std::uniform_int_distribution<std::size_t> dlen(1, 3);
    std::uniform_int_distribution<std::size_t> dn(1, 3);

    auto rnd_word = [&](std::size_t n) {
      StateWord w(dlen(rng));
      std::uniform_int_distribution<StateId> dq(0, static_cast<StateId>(n - 1));
      for (auto& q : w) q = dq(rng);
      return w;
    };

    AltDecomposition d;
    const std::size_t n = dn(rng);
    if (d01(rng)) d.blocks.push_back({Side::Right, rnd_word(nr)});
    for (std::size_t i = 0; i < n; ++i) {
      d.blocks.push_back({Side::Left, rnd_word(nl)});
      if (i + 1 < n || d01(rng))
        d.blocks.push_back({Side::Right, rnd_word(nr)});
    }

    std::vector<LetterString> alphas(n), betas(n);
    std::uniform_int_distribution<LetterId> da(
        0, static_cast<LetterId>(fp.left_factor.num_letters() - 1));
    std::uniform_int_distribution<LetterId> db(
        0, static_cast<LetterId>(fp.right_factor.num_letters() - 1));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t len = dlen(rng);
      for (std::size_t j = 0; j < len; ++j) {
        alphas[i].push_back(da(rng));
        betas[i].push_back(db(rng));
      }
    }
    CHECK(gamma_formula_check(fp, d, alphas, betas));
  }
}

TEST_CASE("distinguishing_string on explicit pairs") {
  FreeProductAutomaton fp = rz2_squared();
  const StateId xl = fp.underlying.state("x.L");
  const StateId xr = fp.underlying.state("x.R");
  const StateId yr = fp.underlying.state("y.R");

  SUBCASE("right generators differ") {
    LetterString gamma = distinguishing_string(fp, {xr}, {yr});
    CHECK(act_word(fp.underlying, {xr}, gamma) !=
          act_word(fp.underlying, {yr}, gamma));
  }

  SUBCASE("different block counts") {
    LetterString gamma = distinguishing_string(fp, {xl}, {xl, xr, xl});
    CHECK(act_word(fp.underlying, {xl}, gamma) !=
          act_word(fp.underlying, {xl, xr, xl}, gamma));
  }

  SUBCASE("equal words violate the precondition") {
    CHECK_THROWS_AS(distinguishing_string(fp, {xl}, {xl}), input_error);
    CHECK_THROWS_AS(distinguishing_string(fp, {xl, xl}, {xl}), input_error);
  }
}

TEST_CASE("distinguishing_string survives identity-acting factor elements") {
  // right factor with an identity element: the proof's k=0 recipe cannot
  // separate v0 = e from an absent v0, so the fallback search must kick in
  MealyAutomaton rz2 = make_rz2();
  MealyAutomaton add = make_add();
  FreeProductAutomaton fp = build_free_product(
      rz2, add, constant_hom(rz2, add, {add.state("e")}));
  const StateId xl = fp.from_left(fp.left_factor.state("x"));
  const StateId er = fp.from_right(fp.right_factor.state("e"));

  REQUIRE_FALSE(oracle_equal(fp, {er, xl}, {xl}));
  LetterString gamma = distinguishing_string(fp, {er, xl}, {xl});
  CHECK(act_word(fp.underlying, {er, xl}, gamma) !=
        act_word(fp.underlying, {xl}, gamma));
}

TEST_CASE("random oracle-distinct pairs are separated") {
  std::mt19937 rng(424242);
  FreeProductAutomaton fps[2] = {rz2_squared(), add_rz2()};
  int found = 0;
  while (found < 60) {
    FreeProductAutomaton& fp = fps[found % 2];
    std::uniform_int_distribution<std::size_t> dlen(1, 3);
    std::uniform_int_distribution<StateId> dq(
        0, static_cast<StateId>(fp.underlying.num_states() - 1));
    StateWord w1(dlen(rng)), w2(dlen(rng));
    for (auto& q : w1) q = dq(rng);
    for (auto& q : w2) q = dq(rng);
    if (oracle_equal(fp, w1, w2)) continue;
    ++found;
    LetterString gamma = distinguishing_string(fp, w1, w2);
    CHECK(act_word(fp.underlying, w1, gamma) !=
          act_word(fp.underlying, w2, gamma));
  }
}

TEST_CASE("restriction checks pass on the fixtures") {
  RestrictionReport r1 = restriction_checks(rz2_squared(), 2, 3);
  CHECK(r1.passed());
  CHECK(r1.cases_checked > 0);
  RestrictionReport r2 = restriction_checks(add_rz2(), 2, 3);
  CHECK(r2.passed());

  CHECK_THROWS_AS(restriction_checks(rz2_squared(), 0, 3), input_error);
}

TEST_CASE("restriction checks flag a corrupted table") {
  FreeProductAutomaton fp = rz2_squared();
  // x.R rewrites the second component of DT(a,a) to b instead of a
  const StateId xr = fp.underlying.state("x.R");
  FreeProductAutomaton bad =
      corrupt(fp, xr, fp.domino_id(Mark::T, 0, 0), xr,
              fp.domino_id(Mark::T, 0, 1));
  RestrictionReport r = restriction_checks(bad, 2, 3);
  CHECK_FALSE(r.passed());
}
