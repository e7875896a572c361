#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "mci/action.hpp"
#include "mci/enumerate.hpp"
#include "mci/limits.hpp"
#include "mci/verify.hpp"
#include "mci/xmod.hpp"
#include "mci/zoo.hpp"
#include "oracle.hpp"

using namespace mci;

namespace {

std::vector<DerivedAction> zoo_actions() {
  std::vector<DerivedAction> out;
  for (const auto& x : zoo::standard_xmods()) out.push_back(x.action);
  const auto structures = zoo::standard_structures();
  for (const auto& s : structures)
    if (s->size() <= 9) out.push_back(conjugation_action(s));
  for (const auto& a : structures)
    for (const auto& b : structures)
      if (a->profile == b->profile && a->size() * b->size() <= 24 && a->size() > 1 && b->size() > 1)
        out.push_back(trivial_action(b, a));
  return out;
}

bool semidirect_is_object(const DerivedAction& act) {
  return verify_structure(*semidirect_product(act).object, {.identities = false}).passed();
}

struct Split {
  Morphism p;
  Morphism sec;
};

std::vector<Split> zoo_splits() {
  std::vector<Split> out;
  auto s3 = zoo::make_symmetric3();
  auto z2 = zoo::make_cyclic(2);
  out.push_back({{s3, z2, {0, 0, 0, 1, 1, 1}}, {z2, s3, {0, *s3->find("s")}}});
  auto z6 = zoo::make_cyclic(6);
  out.push_back({{z6, z2, {0, 1, 0, 1, 0, 1}}, {z2, z6, {0, 3}}});
  auto f2x = zoo::make_truncated_poly(2);
  auto f2 = zoo::make_truncated_poly(2, 1);
  out.push_back({{f2x, f2, {0, 1, 0, 1}}, {f2, f2x, {0, 1}}});
  auto l3 = zoo::make_lie2(3);
  const Subobject e2 = make_subobject(l3, {0, 3, 6}, "span_e2");
  std::vector<Elem> proj(9);
  for (Elem x = 0; x < 9; ++x) proj[x] = x / 3;
  out.push_back({{l3, e2.induced, proj}, e2.embed});
  return out;
}

}  // namespace

TEST_CASE("inversion action of Z2 on Z3") {
  auto z2 = zoo::make_cyclic(2), z3 = zoo::make_cyclic(3);
  DerivedAction act = trivial_action(z2, z3);
  act.dot(1, 1) = 2;
  act.dot(1, 2) = 1;
  const Report r = check_derived_action(act);
  CHECK(r.passed());
  CHECK(r.find("cond4")->note == "vacuous");
  const SemidirectProduct sd = semidirect_product(act);
  CHECK(sd.object->size() == 6);
  CHECK(oracle::isomorphic(*sd.object, *zoo::make_symmetric3()));
  CHECK(is_morphism(sd.inject));
  CHECK(is_morphism(sd.project));
  CHECK(is_morphism(sd.section));
}

TEST_CASE("semidirect sums follow the formula") {
  for (const auto& act : zoo_actions()) {
    if (act.actor->size() * act.acted->size() > 16) continue;
    const auto sd = semidirect_product(act);
    const auto ref = oracle::semidirect_add(act);
    for (Elem x = 0; x < sd.object->size(); ++x)
      for (Elem y = 0; y < sd.object->size(); ++y) CHECK(sd.object->plus(x, y) == ref.add[x][y]);
  }
}

TEST_CASE("every condition has a line, 11 in both placements") {
  auto f2 = zoo::make_truncated_poly(2);
  const Report r = check_derived_action(conjugation_action(f2));
  for (const char* id : {"cond1", "cond2", "cond3", "cond4", "cond5", "cond6", "cond7", "cond8", "cond9", "cond10",
                         "cond11", "cond11.sym", "cond12"})
    CHECK(r.find(id));
  CHECK(r.passed());
}

TEST_CASE("zoo actions are derived actions") {
  for (const auto& act : zoo_actions()) {
    CAPTURE(act.actor->name);
    CAPTURE(act.acted->name);
    CHECK(check_derived_action(act).passed());
    CHECK(semidirect_is_object(act));
  }
}

TEST_CASE("group actions agree with the reference conditions") {
  std::mt19937 rng(gen::kSeed);
  auto z2 = zoo::make_cyclic(2), z3 = zoo::make_cyclic(3), z4 = zoo::make_cyclic(4);
  for (const auto& base : {trivial_action(z2, z3), trivial_action(z4, z2), trivial_action(z2, z4)})
    for (const auto& e : gen::all_edits(base)) {
      const DerivedAction act = gen::apply(base, e);
      CHECK(check_derived_action(act).passed() == oracle::is_group_action(act));
    }
}

TEST_CASE("property: criterion agrees with the semidirect product on perturbed actions") {
  std::mt19937 rng(gen::kSeed + 3);
  const auto pool = zoo_actions();
  int disagreements = 0;
  for (int i = 0; i < 150; ++i) {
    const DerivedAction& base = gen::pick(pool, rng);
    if (base.acted->size() < 2 || base.actor->size() * base.acted->size() > 16) continue;
    const gen::Edit e = gen::random_edit(base, rng);
    const DerivedAction act = gen::apply(base, e);
    const bool cond = check_derived_action(act).passed();
    const bool obj = semidirect_is_object(act);
    if (cond != obj) {
      ++disagreements;
      MESSAGE(base.actor->name << " on " << base.acted->name << " " << gen::describe(e));
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("actions from split extensions") {
  for (const auto& [p, sec] : zoo_splits()) {
    CAPTURE(p.dom->name);
    REQUIRE(is_morphism(p));
    REQUIRE(is_morphism(sec));
    const Subobject k = kernel(p);
    const DerivedAction act = action_from_section(p, k, sec);
    CHECK(check_derived_action(act).passed());
    // (a, b) -> i(a) + sec(b) is an isomorphism A x| B -> E over A and B.
    const SemidirectProduct sd = semidirect_product(act);
    const Structure& E = *p.dom;
    std::vector<Elem> m(sd.object->size());
    const std::size_t nb = act.actor->size();
    for (Elem x = 0; x < m.size(); ++x) m[x] = E.plus(k.elements[x / nb], sec(x % nb));
    const Morphism phi{sd.object, p.dom, m};
    CHECK(oracle::is_hom(*sd.object, E, m));
    CHECK(is_bijective(phi));
    CHECK(same_morphism(compose(phi, sd.inject), k.embed));
    CHECK(same_morphism(compose(p, phi), sd.project));
  }
}

TEST_CASE("split extension preconditions") {
  auto z4 = zoo::make_cyclic(4), z2 = zoo::make_cyclic(2);
  const Morphism p{z4, z2, {0, 1, 0, 1}};
  // Z4 does not split over Z2: 1 -> 2 is not a section of p.
  CHECK_THROWS_AS(action_from_section(p, kernel(p), Morphism{z2, z4, {0, 2}}), PreconditionError);
}

TEST_CASE("restriction of scalars") {
  auto z2 = zoo::make_cyclic(2), z3 = zoo::make_cyclic(3), z4 = zoo::make_cyclic(4);
  DerivedAction inv = trivial_action(z2, z3);
  inv.dot(1, 1) = 2;
  inv.dot(1, 2) = 1;
  const DerivedAction pulled = pull_back_action(inv, Morphism{z4, z2, {0, 1, 0, 1}});
  CHECK(check_derived_action(pulled).passed());
  for (Elem b = 0; b < 4; ++b)
    for (Elem a = 0; a < 3; ++a) CHECK(pulled.dot(b, a) == inv.dot(b % 2, a));
}

TEST_CASE("ideal actions") {
  for (const auto& x : zoo::standard_xmods()) {
    CAPTURE(x.name);
    CHECK(check_derived_action(x.action).passed());
  }
  auto s3 = zoo::make_symmetric3();
  const Subobject a3 = ideal_closure(s3, std::vector<Elem>{*s3->find("r")});
  const DerivedAction act = ideal_action(a3);
  CHECK(check_derived_action(act).passed());
  CHECK_FALSE(same_action(act, trivial_action(s3, a3.induced)));
}
