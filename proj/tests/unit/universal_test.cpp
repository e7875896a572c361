#include <algorithm>

#include "doctest.h"
#include "mci/universal.hpp"
#include "mci/zoo.hpp"

using namespace mci;

namespace {

// (Z2, Z4, 0) with the trivial action: it has two endomorphisms over Z4.
CrossedModule kernel_like() {
  auto z2 = zoo::make_cyclic(2), z4 = zoo::make_cyclic(4);
  return make_xmod(zero_morphism(z2, z4), trivial_action(z4, z2), "k");
}

}  // namespace

TEST_CASE("limit kinds print") {
  CHECK(to_string(LimitKind::Product) == "product");
  CHECK(to_string(LimitKind::Equalizer) == "equalizer");
}

TEST_CASE("terminal and initial objects") {
  auto z4 = zoo::make_cyclic(4);
  const auto testers = zoo::slice_testers(z4);
  const LimitProblem t{LimitKind::Terminal, {slice_terminal(z4), {}}, {}};
  const LimitProblem i{LimitKind::Initial, {slice_initial(z4), {}}, {}};
  CHECK(verify_universal_cone(t, testers).passed());
  CHECK(verify_universal_cone(i, testers).passed());
  for (const auto& x : testers) {
    CHECK(mediator_counts(t, x) == std::vector<std::size_t>{1});
    CHECK(mediator_counts(i, x) == std::vector<std::size_t>{1});
  }
}

TEST_CASE("a non-terminal candidate is caught") {
  auto z4 = zoo::make_cyclic(4);
  const LimitProblem wrong{LimitKind::Terminal, {kernel_like(), {}}, {}};
  // No morphism (Z4, Z4, id) -> (Z2, Z4, 0) over the identity: 0 must equal id.
  CHECK(mediator_counts(wrong, slice_terminal(z4)) == std::vector<std::size_t>{0});
  const Report r = verify_universal_cone(wrong, {slice_terminal(z4)});
  CHECK_FALSE(r.passed());
  REQUIRE(r.failures().size() == 1);
  CHECK(r.failures()[0]->law == "universal");
}

TEST_CASE("product counts one mediator per cone") {
  const CrossedModule k = kernel_like();
  const XModCone prod = slice_product(k, k);
  const LimitProblem p{LimitKind::Product, prod, {}};
  const std::size_t homs = enumerate_xmod_morphisms(k, k, HomScope::OverIdentity).size();
  REQUIRE(homs == 2);
  CHECK(mediator_counts(p, k) == std::vector<std::size_t>(homs * homs, 1));
}

TEST_CASE("a product with the wrong legs is caught") {
  const CrossedModule k = kernel_like();
  XModCone prod = slice_product(k, k);
  prod.legs[1] = prod.legs[0];
  const LimitProblem p{LimitKind::Product, prod, {}};
  const auto counts = mediator_counts(p, k);
  CHECK(std::count(counts.begin(), counts.end(), 0u) == 2);
  CHECK_FALSE(verify_universal_cone(p, {k}).passed());
}

TEST_CASE("pullbacks and equalizers") {
  auto z4 = zoo::make_cyclic(4);
  const CrossedModule k = kernel_like();
  const auto testers = zoo::slice_testers(z4);
  const XModMorphism f = to_terminal(k);
  const XModCone pb = slice_pullback(f, f);
  const LimitProblem pp{LimitKind::Pullback, pb, {f, f}};
  CHECK(verify_universal_cone(pp, testers).passed());

  const auto endos = enumerate_xmod_morphisms(k, k, HomScope::OverIdentity);
  const XModCone eq = xmod_equalizer(endos[0], endos[1]);
  const LimitProblem pe{LimitKind::Equalizer, eq, {endos[0], endos[1]}};
  CHECK(verify_universal_cone(pe, testers).passed());
}

TEST_CASE("testers above the guard are refused") {
  auto z4 = zoo::make_cyclic(4);
  const LimitProblem t{LimitKind::Terminal, {slice_terminal(z4), {}}, {}};
  CHECK_THROWS_AS(verify_universal_cone(t, {slice_terminal(z4)}, 3), SizeGuardError);
}
