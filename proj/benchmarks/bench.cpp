#include <benchmark/benchmark.h>

#include "mci/enumerate.hpp"
#include "mci/pullback.hpp"
#include "mci/universal.hpp"
#include "mci/verify.hpp"
#include "mci/zoo.hpp"

using namespace mci;

namespace {

void BM_VerifyStructure(benchmark::State& state) {
  const auto structures = zoo::standard_structures();
  const auto& s = structures[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(s->name);
  for (auto _ : state) benchmark::DoNotOptimize(verify_structure(*s).passed());
}
BENCHMARK(BM_VerifyStructure)->DenseRange(0, 13);

void BM_EnumerateCyclic(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto a = zoo::make_cyclic(n), b = zoo::make_cyclic(12);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_morphisms(a, b).size());
}
BENCHMARK(BM_EnumerateCyclic)->Arg(2)->Arg(6)->Arg(12);

void BM_EnumerateAlgebra(benchmark::State& state) {
  auto f = zoo::make_truncated_poly(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_morphisms(f, f).size());
}
BENCHMARK(BM_EnumerateAlgebra);

void BM_DerivedAction(benchmark::State& state) {
  const auto xmods = zoo::standard_xmods();
  const auto& x = xmods[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(x.name);
  for (auto _ : state) benchmark::DoNotOptimize(check_derived_action(x.action).passed());
}
BENCHMARK(BM_DerivedAction)->DenseRange(0, 9);

void BM_SquareCommutes(benchmark::State& state) {
  auto z2 = zoo::make_cyclic(2), z4 = zoo::make_cyclic(4);
  const auto xmods = zoo::standard_xmods();
  const Morphism phi{z2, z4, {0, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(square_commutes(xmods.front(), phi).report.passed());
}
BENCHMARK(BM_SquareCommutes);

void BM_UniversalTerminal(benchmark::State& state) {
  auto x = zoo::make_truncated_poly(2);
  const auto testers = zoo::slice_testers(x);
  const LimitProblem p{LimitKind::Terminal, {slice_terminal(x), {}}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_universal_cone(p, testers).passed());
}
BENCHMARK(BM_UniversalTerminal);

}  // namespace
BENCHMARK_MAIN();
