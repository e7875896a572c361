#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "mci/verify.hpp"
#include "mci/zoo.hpp"
#include "oracle.hpp"

using namespace mci;

TEST_CASE("zoo structures verify and agree with the reference check") {
  for (const auto& s : zoo::standard_structures()) {
    CAPTURE(s->name);
    CHECK(verify_structure(*s).passed());
    CHECK(oracle::satisfies_axioms(*s));
  }
}

TEST_CASE("opposite tables are transposes") {
  for (const auto& s : zoo::standard_structures()) {
    const auto& b = s->profile->binary();
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(s->star[b[i].opposite] == s->star[i].transposed());
  }
}

TEST_CASE("element orders and commutativity") {
  auto z4 = zoo::make_cyclic(4);
  CHECK(element_order(*z4, 0) == 1);
  CHECK(element_order(*z4, 1) == 4);
  CHECK(element_order(*z4, 2) == 2);
  CHECK(is_abelian(*z4));
  auto s3 = zoo::make_symmetric3();
  CHECK_FALSE(is_abelian(*s3));
  CHECK(element_order(*s3, *s3->find("r")) == 3);
  CHECK(element_order(*s3, *s3->find("s")) == 2);
}

TEST_CASE("zero structure") {
  auto z = zero_structure(lie_profile(3));
  CHECK(z->size() == 1);
  CHECK(verify_structure(*z).passed());
}

TEST_CASE("malformed tables are structural errors") {
  Structure s = *zoo::make_cyclic(3);
  s.add = Table(2, 3);
  CHECK_THROWS_AS(freeze(s), StructuralError);
  Structure t = *zoo::make_cyclic(3);
  t.neg[1] = 7;
  CHECK_THROWS_AS(freeze(t), StructuralError);
}

TEST_CASE("a failing law names a genuine witness") {
  // Z3 with 1+1 changed to 0: the sum is no longer associative.
  Structure s = *zoo::make_cyclic(3);
  s.add(1, 1) = 0;
  const Report r = verify_structure(*freeze(s));
  CHECK_FALSE(r.passed());
  const Check* assoc = r.find("group.assoc");
  REQUIRE(assoc);
  CHECK_FALSE(assoc->passed);
  CHECK(assoc->tuple.size() == 3);
  CHECK_FALSE(oracle::law_holds(s, *assoc));
}

TEST_CASE("identity checks can be switched off") {
  Structure s = *zoo::make_lie2(3);
  // Make the bracket symmetric instead of antisymmetric: [e1,e2] = [e2,e1] = e1.
  const auto br = *s.profile->binary_index("br");
  s.star[br](3, 1) = 1;
  s.fill_opposites();
  auto p = freeze(s);
  CHECK_FALSE(verify_structure(*p).passed());
  const Report lax = verify_structure(*p, {.identities = false});
  for (const auto& c : lax.checks()) CHECK(c.law != "identity");
}

TEST_CASE("property: random single-entry edits are judged like the reference check") {
  std::mt19937 rng(gen::kSeed);
  const auto pool = zoo::standard_structures();
  for (int i = 0; i < 300; ++i) {
    const auto& s = gen::pick(pool, rng);
    if (s->size() < 2 || s->size() > 9) continue;
    const gen::Edit e = gen::random_edit(*s, rng);
    CAPTURE(s->name);
    CAPTURE(gen::describe(e));
    const auto t = gen::apply(*s, e);
    const Report r = verify_structure(*t);
    CHECK(r.passed() == oracle::satisfies_axioms(*t));
    for (const Check* c : r.failures()) CHECK_FALSE(oracle::law_holds(*t, *c));
  }
}

TEST_CASE("property: reports are deterministic") {
  std::mt19937 rng(gen::kSeed + 1);
  auto f2 = zoo::make_truncated_poly(2);
  for (int i = 0; i < 20; ++i) {
    const auto t = gen::apply(*f2, gen::random_edit(*f2, rng));
    CHECK(verify_structure(*t).str() == verify_structure(*t).str());
  }
}
