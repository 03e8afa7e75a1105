#include <benchmark/benchmark.h>

#include "fpauto/fixtures.hpp"
#include "fpauto/verify.hpp"

using namespace fpauto;

namespace {

FreeProductAutomaton rz2_squared() {
  MealyAutomaton rz2 = make_rz2();
  return build_free_product(rz2, rz2,
                            constant_hom(rz2, rz2, {rz2.state("x")}));
}

void BM_words_equivalent(benchmark::State& state) {
  MealyAutomaton add = make_add();
  const StateId q = add.state("q");
  StateWord w1(static_cast<std::size_t>(state.range(0)), q);
  StateWord w2 = w1;
  w2.push_back(q);
  for (auto _ : state)
    benchmark::DoNotOptimize(words_equivalent(add, w1, w2));
}
BENCHMARK(BM_words_equivalent)->Arg(2)->Arg(4)->Arg(8);

void BM_enumerate_classes(benchmark::State& state) {
  MealyAutomaton add = make_add();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_classes(add, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_enumerate_classes)->Arg(3)->Arg(5);

void BM_build_free_product(benchmark::State& state) {
  MealyAutomaton rz2 = make_rz2();
  StateMap phi = constant_hom(rz2, rz2, {rz2.state("x")});
  for (auto _ : state) benchmark::DoNotOptimize(build_free_product(rz2, rz2, phi));
}
BENCHMARK(BM_build_free_product);

void BM_check_faithful(benchmark::State& state) {
  FreeProductAutomaton fp = rz2_squared();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_faithful(fp, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_check_faithful)->Arg(2)->Arg(3);

void BM_restriction_checks(benchmark::State& state) {
  FreeProductAutomaton fp = rz2_squared();
  for (auto _ : state) benchmark::DoNotOptimize(restriction_checks(fp, 2, 3));
}
BENCHMARK(BM_restriction_checks);

}  // namespace

BENCHMARK_MAIN();
