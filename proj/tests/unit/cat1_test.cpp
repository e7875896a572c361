#include "doctest.h"
#include "mci/cat1.hpp"
#include "mci/zoo.hpp"

using namespace mci;

namespace {

// R with the zero base: both kernels are all of R.
Cat1Object over_zero(StructurePtr r) {
  Cat1Object c;
  c.name = "over_zero";
  c.big = r;
  c.base = zero_structure(r->profile);
  c.embed = zero_morphism(c.base, r);
  c.source = zero_morphism(r, c.base);
  c.target = c.source;
  return c;
}

}  // namespace

TEST_CASE("images of crossed modules are cat1-objects") {
  for (const auto& x : zoo::standard_xmods()) {
    CAPTURE(x.name);
    const Cat1Object c = xmod_to_cat1(x);
    CHECK(c.big->size() == x.c1->size() * x.c0->size());
    CHECK(verify_cat1(c).passed());
    CHECK(verify_xmod(cat1_to_xmod(c)).passed());
    // t(c1, c0) = d(c1) + c0 and e(c0) = (0, c0).
    for (Elem a = 0; a < x.c1->size(); ++a)
      for (Elem b = 0; b < x.c0->size(); ++b) {
        const Elem r = static_cast<Elem>(a * x.c0->size() + b);
        CHECK(c.source(r) == b);
        CHECK(c.target(r) == x.c0->plus(x.boundary(a), b));
      }
  }
}

TEST_CASE("identity cat1-object") {
  const Cat1Object c = identity_cat1(zoo::make_cyclic(4));
  CHECK(c.name == "id_Z4");
  CHECK(verify_cat1(c).passed());
  CHECK(verify_cat1_morphism(identity_cat1_morphism(c)).passed());
  const CrossedModule x = cat1_to_xmod(c);
  CHECK(x.c1->size() == 1);
}

TEST_CASE("kernel laws fail with witnesses") {
  const Report group = verify_cat1(over_zero(zoo::make_symmetric3()));
  const Check* comm = group.find("kernel.commutator");
  REQUIRE(comm);
  CHECK_FALSE(comm->passed);

  const Report alg = verify_cat1(over_zero(zoo::make_truncated_poly(2)));
  const Check* star = alg.find("kernel.star[*]");
  REQUIRE(star);
  CHECK_FALSE(star->passed);
  CHECK(alg.find("kernel.commutator")->passed);
}

TEST_CASE("non-injective section is structural") {
  Cat1Object c = identity_cat1(zoo::make_cyclic(2));
  c.embed = zero_morphism(c.base, c.big);
  CHECK_THROWS_AS(verify_cat1(c), StructuralError);
}

TEST_CASE("section laws") {
  auto z4 = zoo::make_cyclic(4);
  Cat1Object c = identity_cat1(z4);
  c.target = Morphism{z4, z4, {0, 3, 2, 1}};
  const Report r = verify_cat1(c);
  CHECK(r.find("section.source")->passed);
  CHECK_FALSE(r.find("section.target")->passed);
}

TEST_CASE("functoriality on crossed-module morphisms") {
  auto z4 = zoo::make_cyclic(4);
  const auto testers = zoo::slice_testers(z4);
  int pairs = 0;
  for (const auto& a : testers) {
    const Cat1Morphism id = xmod_morphism_to_cat1(identity_xmod_morphism(a));
    CHECK(same_morphism(id.phi, identity_morphism(id.src.big)));
    CHECK(verify_cat1_morphism(id).passed());
    for (const auto& b : testers)
      for (const auto& c : testers)
        for (const auto& f : enumerate_xmod_morphisms(a, b, HomScope::OverIdentity))
          for (const auto& g : enumerate_xmod_morphisms(b, c, HomScope::OverIdentity)) {
            const Cat1Morphism fg = xmod_morphism_to_cat1(compose(g, f));
            const Cat1Morphism split = compose(xmod_morphism_to_cat1(g), xmod_morphism_to_cat1(f));
            CHECK(same_morphism(fg.phi, split.phi));
            CHECK(same_morphism(fg.phi_base, split.phi_base));
            CHECK(verify_cat1_morphism(fg).passed());
            ++pairs;
          }
  }
  CHECK(pairs > 0);
}

TEST_CASE("base component is forced") {
  const Cat1Object c = xmod_to_cat1(zoo::standard_xmods().front());
  for (const auto& m : enumerate_cat1_morphisms(c, c)) {
    CHECK(verify_cat1_morphism(m).passed());
    CHECK(same_morphism(m.phi_base, compose(c.source, compose(m.phi, c.embed))));
  }
}

TEST_CASE("roundtrips") {
  for (const auto& x : zoo::standard_xmods()) {
    if (x.c1->size() * x.c0->size() > 12) continue;
    CAPTURE(x.name);
    CHECK(roundtrip_check(x).passed());
    CHECK(roundtrip_check(xmod_to_cat1(x)).passed());
  }
  CHECK(roundtrip_check(identity_cat1(zoo::make_symmetric3())).passed());
}

TEST_CASE("cat1 isomorphism needs matching sizes") {
  const auto cs = zoo::standard_cat1s();
  REQUIRE(cs.size() == 11);
  CHECK_FALSE(find_cat1_isomorphism(cs.front(), cs.back()));
}
