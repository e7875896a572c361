#include "doctest.h"
#include "mci/enumerate.hpp"
#include "mci/pullback.hpp"
#include "mci/zoo.hpp"

using namespace mci;

namespace {

CrossedModule find_xmod(const std::string& name) {
  for (auto& x : zoo::standard_xmods())
    if (x.name == name) return x;
  FAIL("no zoo crossed module " << name);
  return {};
}

struct Along {
  CrossedModule x;
  Morphism phi;
};

// Every zoo crossed module with every morphism into its base from a zoo
// structure, keeping the pulled-back carriers small.
std::vector<Along> zoo_pairs(std::size_t bound) {
  std::vector<Along> out;
  for (const auto& x : zoo::standard_xmods())
    for (const auto& s : zoo::standard_structures()) {
      if (s->profile != x.c0->profile || s->size() > 12) continue;
      if (x.c1->size() * s->size() > bound) continue;
      for (const auto& phi : enumerate_morphisms(s, x.c0)) out.push_back({x, phi});
    }
  return out;
}

}  // namespace

TEST_CASE("pullback carrier and boundary") {
  for (const auto& [x, phi] : zoo_pairs(36)) {
    CAPTURE(x.name);
    CAPTURE(phi.dom->name);
    const PullbackXMod pb = pullback_xmod(x, phi);
    CHECK(verify_xmod(pb.object).passed());
    CHECK(verify_xmod_morphism(pb.projection).passed());
    std::size_t expected = 0;
    for (Elem p = 0; p < x.c1->size(); ++p)
      for (Elem s = 0; s < phi.dom->size(); ++s)
        if (x.boundary(p) == phi(s)) ++expected;
    CHECK(pb.object.c1->size() == expected);
    for (Elem e = 0; e < pb.object.c1->size(); ++e) {
      const Elem p = pb.projection.mu1(e), s = pb.object.boundary(e);
      CHECK(pb.object.c1->label(e) == "(" + x.c1->label(p) + "," + phi.dom->label(s) + ")");
      CHECK(x.boundary(p) == phi(s));
    }
  }
}

TEST_CASE("pulling back along the identity changes nothing") {
  for (const auto& x : zoo::standard_xmods()) {
    if (x.c1->size() > 8 || x.c0->size() > 8) continue;
    const PullbackXMod pb = pullback_xmod(x, identity_morphism(x.c0));
    CHECK(find_xmod_isomorphism(pb.object, x));
  }
}

TEST_CASE("pulling back along a composite") {
  auto z2 = zoo::make_cyclic(2), z4 = zoo::make_cyclic(4);
  const CrossedModule t = find_xmod("terminal_z4");
  for (const auto& phi : enumerate_morphisms(z4, z4))
    for (const auto& chi : enumerate_morphisms(z2, z4)) {
      const CrossedModule once = pullback_xmod(t, compose(phi, chi)).object;
      const CrossedModule twice = pullback_xmod(pullback_xmod(t, phi).object, chi).object;
      CHECK(find_xmod_isomorphism(once, twice));
    }
}

TEST_CASE("pullback of the terminal object along Z2 -> Z4") {
  auto z2 = zoo::make_cyclic(2), z4 = zoo::make_cyclic(4);
  const Morphism phi{z2, z4, {0, 2}};
  const PullbackXMod pb = pullback_xmod(find_xmod("terminal_z4"), phi);
  CHECK(pb.object.c1->size() == 2);
  CHECK(pb.object.name == "terminal_z4_along_Z2");
}

TEST_CASE("mediators are unique") {
  int cones = 0;
  for (const auto& p : zoo::standard_xmods()) {
    if (p.c1->size() > 8 || p.c0->size() > 8) continue;
    for (const auto& mu : zoo::standard_xmods()) {
      if (mu.c1->size() > 8 || mu.c0->size() > 8 || mu.c0->profile != p.c0->profile) continue;
      for (const auto& m : enumerate_xmod_morphisms(mu, p, HomScope::All, 8)) {
        const XModMediator med = xmod_pullback_mediator(m.mu1, mu, m.mu0, p);
        CHECK(med.count == 1);
        CHECK(med.report.passed());
        ++cones;
      }
    }
  }
  CHECK(cones > 0);
}

TEST_CASE("mediator input must be a morphism") {
  const CrossedModule a = find_xmod("z2_z4");
  const Morphism bad{a.c1, a.c1, {0, 0}};
  CHECK_THROWS_AS(xmod_pullback_mediator(bad, a, identity_morphism(a.c0), a), PreconditionError);
}

TEST_CASE("preimage of the zero ideal is the kernel") {
  auto z4 = zoo::make_cyclic(4), z2 = zoo::make_cyclic(2);
  const Morphism mod2{z4, z2, {0, 1, 0, 1}};
  const CrossedModule k = preimage_xmod(make_subobject(z2, {0}), mod2);
  CHECK(verify_xmod(k).passed());
  CHECK(k.c1->size() == 2);
  CHECK(find_isomorphism(k.c1, make_subobject(z4, {0, 2}).induced));
  for (Elem x = 0; x < k.c1->size(); ++x) CHECK(mod2(k.boundary(x)) == 0);
}

TEST_CASE("pullback acts on morphisms over the identity") {
  auto z2 = zoo::make_cyclic(2), z4 = zoo::make_cyclic(4);
  const Morphism phi{z2, z4, {0, 2}};
  const CrossedModule a = find_xmod("z2_z4");
  const XModMorphism f = to_terminal(a);
  const XModMorphism pf = pullback_xmod_morphism(f, phi);
  CHECK(verify_xmod_morphism(pf).passed());
  const XModMorphism pid = pullback_xmod_morphism(identity_xmod_morphism(a), phi);
  CHECK(same_morphism(pid.mu1, identity_morphism(pid.src.c1)));
}

TEST_CASE("pullback cat1-objects") {
  for (const auto& [x, phi] : zoo_pairs(24)) {
    const Cat1Object c = xmod_to_cat1(x);
    if (c.big->size() > 24) continue;
    CAPTURE(x.name);
    CAPTURE(phi.dom->name);
    const PullbackCat1 pb = pullback_cat1(c, phi);
    const Report r = verify_cat1(pb.object);
    CHECK(r.passed());
    CHECK(verify_cat1_morphism(pb.projection).passed());
    const std::size_t q = phi.dom->size();
    CHECK(pb.object.big->size() <= q * c.big->size() * q);
  }
}

TEST_CASE("cat1 pullback of the image of z2_z4") {
  auto z2 = zoo::make_cyclic(2), z4 = zoo::make_cyclic(4);
  const Morphism phi{z2, z4, {0, 2}};
  const Cat1Object c = xmod_to_cat1(find_xmod("z2_z4"));
  const PullbackCat1 pb = pullback_cat1(c, phi);
  CHECK(pb.object.big->size() == 4);
  int cones = 0;
  for (const auto& t : zoo::standard_cat1s()) {
    if (t.big->size() > 8 || !same_structure(*t.base, *z2)) continue;
    for (const auto& m : enumerate_cat1_morphisms(t, c)) {
      if (!same_morphism(m.phi_base, phi)) continue;
      const Cat1Mediator med = cat1_pullback_mediator(m, pb);
      CHECK(med.count == 1);
      CHECK(med.report.passed());
      ++cones;
    }
  }
  const Cat1Object id2 = identity_cat1(z2);
  for (const auto& m : enumerate_cat1_morphisms(id2, c))
    if (same_morphism(m.phi_base, phi)) {
      CHECK(cat1_pullback_mediator(m, pb).count == 1);
      ++cones;
    }
  CHECK(cones > 0);
}

TEST_CASE("square through both routes") {
  for (const auto& [x, phi] : zoo_pairs(12)) {
    SquareResult r;
    try {
      r = square_commutes(x, phi);
    } catch (const SizeGuardError&) {
      continue;
    }
    CAPTURE(x.name);
    CAPTURE(phi.dom->name);
    CHECK(r.report.passed());
    REQUIRE(r.iso);
    CHECK(verify_cat1_morphism(*r.iso).passed());
  }
}
