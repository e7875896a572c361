#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "mci/limits.hpp"
#include "mci/xmod.hpp"
#include "mci/zoo.hpp"

using namespace mci;

namespace {

CrossedModule find_xmod(const std::string& name) {
  for (auto& x : zoo::standard_xmods())
    if (x.name == name) return x;
  FAIL("no zoo crossed module " << name);
  return {};
}

}  // namespace

TEST_CASE("zoo crossed modules verify") {
  for (const auto& x : zoo::standard_xmods()) {
    CAPTURE(x.name);
    const Report r = verify_xmod(x);
    CHECK(r.passed());
    CHECK(r.find("XM1.dot"));
    CHECK(r.find("XM2.dot"));
  }
}

TEST_CASE("XM1 fails for a non-equivariant boundary") {
  // Z3 -> S3 onto A3 with the trivial action: s.r = r but s r s^-1 = r2.
  auto z3 = zoo::make_cyclic(3), s3 = zoo::make_symmetric3();
  const Morphism incl{z3, s3, {0, *s3->find("r"), *s3->find("r2")}};
  const CrossedModule x = make_xmod(incl, trivial_action(s3, z3), "bad");
  const Report r = verify_xmod(x);
  CHECK(r.preconditions_passed());
  const Check* xm1 = r.find("XM1.dot");
  REQUIRE(xm1);
  CHECK_FALSE(xm1->passed);
  const Elem c0 = xm1->tuple[0], c1 = xm1->tuple[1];
  CHECK(incl(c1) != s3->conjugate(c0, incl(c1)));
  CHECK(r.find("XM2.dot")->passed);
}

TEST_CASE("XM1 for stars") {
  // (x) in F2[x]/(x^2) with star action forced to zero: 1 * x should be x.
  CrossedModule x = find_xmod("ideal_f2");
  for (auto& t : x.action.star) t = Table(t.rows(), t.cols(), x.c1->zero);
  const Report r = verify_xmod(x);
  const Check* star = r.find("XM1.star[*]");
  REQUIRE(star);
  CHECK_FALSE(star->passed);
}

TEST_CASE("morphisms of crossed modules") {
  const CrossedModule a = find_xmod("z2_z4");
  const XModMorphism id = identity_xmod_morphism(a);
  CHECK(verify_xmod_morphism(id).passed());
  CHECK(verify_xmod_morphism(compose(id, id)).passed());
  const XModMorphism t = to_terminal(a);
  CHECK(verify_xmod_morphism(t).passed());
  CHECK(verify_xmod_morphism(from_initial(a)).passed());
  XModMorphism bad = t;
  bad.mu1 = Morphism{a.c1, bad.dst.c1, {0, 0}};
  const Report r = verify_xmod_morphism(bad);
  CHECK_FALSE(r.find("square")->passed);
}

TEST_CASE("hom enumeration scopes") {
  const CrossedModule a = find_xmod("z2_z4");
  const CrossedModule t = find_xmod("terminal_z4");
  const auto over = enumerate_xmod_morphisms(a, t, HomScope::OverIdentity);
  REQUIRE(over.size() == 1);
  CHECK(over[0].mu1.map == std::vector<Elem>{0, 2});
  const auto all = enumerate_xmod_morphisms(a, t, HomScope::All);
  CHECK(all.size() >= over.size());
  for (const auto& m : all) CHECK(verify_xmod_morphism(m).passed());
}

TEST_CASE("isomorphisms") {
  const CrossedModule a = find_xmod("z2_z4");
  CHECK(find_xmod_isomorphism(a, a));
  CHECK_FALSE(find_xmod_isomorphism(a, find_xmod("terminal_z4")));
}

TEST_CASE("fiber product agrees with the level fiber product") {
  const auto xs = zoo::standard_xmods();
  for (const auto& a : xs)
    for (const auto& b : xs) {
      if (!same_structure(*a.c0, *b.c0) || a.c1->size() * b.c1->size() > 16) continue;
      const XModProduct p = xmod_fiber_product(a, b);
      CHECK(verify_xmod(p.object).passed());
      CHECK(verify_xmod_morphism(p.pi1).passed());
      CHECK(verify_xmod_morphism(p.pi2).passed());
      const Product level = fiber_product(a.boundary, b.boundary);
      CHECK(same_structure(*level.object, *p.object.c1));
    }
}

TEST_CASE("slice constructions verify") {
  for (auto x : {zoo::make_cyclic(4), zoo::make_truncated_poly(2)}) {
    const CrossedModule t = slice_terminal(x), i = slice_initial(x);
    CHECK(verify_xmod(t).passed());
    CHECK(verify_xmod(i).passed());
    CHECK(i.c1->size() == 1);
    for (const auto& a : zoo::slice_testers(x)) {
      CAPTURE(a.name);
      const XModCone prod = slice_product(a, t);
      CHECK(verify_xmod(prod.object).passed());
      CHECK(find_xmod_isomorphism(prod.object, a));
      const XModMorphism f = to_terminal(a);
      const CrossedModule ind = induced_xmod(f);
      CHECK(verify_xmod(ind).passed());
      const XModCone eq = xmod_equalizer(identity_xmod_morphism(a), identity_xmod_morphism(a));
      CHECK(eq.object.c1->size() == a.c1->size());
    }
  }
}

TEST_CASE("induced crossed module needs an identity base") {
  const CrossedModule a = find_xmod("z2_z4");
  const auto all = enumerate_xmod_morphisms(a, a, HomScope::All);
  for (const auto& m : all)
    if (!std::equal(m.mu0.map.begin(), m.mu0.map.end(), identity_morphism(a.c0).map.begin()))
      CHECK_THROWS_AS(induced_xmod(m), PreconditionError);
}

TEST_CASE("composition of crossed modules checks compatibility") {
  auto z4 = zoo::make_cyclic(4);
  const CrossedModule t = slice_terminal(z4);
  const CrossedModule a = find_xmod("z2_z4");
  // Z2 -> Z4 -> Z4 with the action of the outer base.
  const CrossedModule c = compose_xmod(a, t, a.action);
  CHECK(verify_xmod(c).passed());
  // An action of the wrong shape is rejected before any check.
  CHECK_THROWS_AS(compose_xmod(a, t, trivial_action(zoo::make_cyclic(2), zoo::make_cyclic(2))), StructuralError);
}

TEST_CASE("equalizer of distinct morphisms") {
  auto f2 = zoo::make_truncated_poly(2);
  const CrossedModule t = slice_terminal(f2);
  const auto endos = enumerate_xmod_morphisms(t, t, HomScope::OverIdentity);
  for (const auto& f : endos)
    for (const auto& g : endos) {
      const XModCone eq = xmod_equalizer(f, g);
      CHECK(verify_xmod(eq.object).passed());
      REQUIRE(eq.legs.size() == 1);
      CHECK(same_morphism(compose(f, eq.legs[0]).mu1, compose(g, eq.legs[0]).mu1));
    }
}

TEST_CASE("property: pullbacks of random cospans verify") {
  std::mt19937 rng(gen::kSeed);
  auto z4 = zoo::make_cyclic(4);
  const auto testers = zoo::slice_testers(z4);
  int built = 0;
  for (int i = 0; i < 40; ++i) {
    const auto& a = gen::pick(testers, rng);
    const auto& b = gen::pick(testers, rng);
    const auto& s = gen::pick(testers, rng);
    const auto fs = enumerate_xmod_morphisms(a, s, HomScope::OverIdentity);
    const auto gs = enumerate_xmod_morphisms(b, s, HomScope::OverIdentity);
    if (fs.empty() || gs.empty()) continue;
    const XModCone c = slice_pullback(gen::pick(fs, rng), gen::pick(gs, rng));
    CHECK(verify_xmod(c.object).passed());
    for (const auto& leg : c.legs) CHECK(verify_xmod_morphism(leg).passed());
    ++built;
  }
  CHECK(built > 10);
}

TEST_CASE("ideal inclusions") {
  auto s3 = zoo::make_symmetric3();
  const CrossedModule x = ideal_inclusion_xmod(ideal_closure(s3, std::vector<Elem>{*s3->find("r")}), "a3");
  CHECK(x.name == "a3");
  CHECK(verify_xmod(x).passed());
}
