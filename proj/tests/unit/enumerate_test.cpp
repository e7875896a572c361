#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "mci/enumerate.hpp"
#include "mci/limits.hpp"
#include "mci/zoo.hpp"
#include "oracle.hpp"

using namespace mci;

TEST_CASE("hom counts between cyclic groups") {
  // |hom(Zm, Zn)| = gcd(m, n).
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned n = 1; n <= 6; ++n) {
      auto a = zoo::make_cyclic(m), b = zoo::make_cyclic(n);
      CHECK(enumerate_morphisms(a, b).size() == std::gcd(m, n));
    }
}

TEST_CASE("enumeration matches the brute-force filter") {
  std::vector<StructurePtr> small;
  for (const auto& s : zoo::standard_structures())
    if (s->size() <= 4) small.push_back(s);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a->profile != b->profile) continue;
      CAPTURE(a->name);
      CAPTURE(b->name);
      std::vector<std::vector<Elem>> got;
      for (const auto& f : enumerate_morphisms(a, b)) got.push_back(f.map);
      CHECK(got == oracle::all_morphisms(*a, *b));
    }
}

TEST_CASE("generating sets generate") {
  for (const auto& s : zoo::standard_structures()) {
    const auto gens = generating_set(*s);
    std::vector<bool> reached(s->size(), false);
    reached[s->zero] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Elem x = 0; x < s->size(); ++x)
        if (reached[x])
          for (Elem g : gens)
            if (!reached[s->plus(x, g)]) reached[s->plus(x, g)] = grew = true;
    }
    CHECK(std::count(reached.begin(), reached.end(), true) == static_cast<long>(s->size()));
  }
}

TEST_CASE("isomorphism search") {
  auto z6 = zoo::make_cyclic(6);
  auto s3 = zoo::make_symmetric3();
  CHECK_FALSE(find_isomorphism(z6, s3));
  const auto iso = find_isomorphism(s3, s3);
  REQUIRE(iso);
  CHECK(is_bijective(*iso));
  CHECK(oracle::isomorphic(*s3, *s3));
  CHECK_FALSE(oracle::isomorphic(*z6, *s3));
}

TEST_CASE("size guard") {
  auto l5 = zoo::make_lie2(5);
  CHECK_THROWS_AS(enumerate_morphisms(l5, l5), SizeGuardError);
  CHECK_NOTHROW(enumerate_morphisms(l5, l5, 25));
}

TEST_CASE("early stop") {
  auto z4 = zoo::make_cyclic(4);
  int visits = 0;
  for_each_morphism(z4, z4, [&](const Morphism&) { return ++visits < 2; });
  CHECK(visits == 2);
}

TEST_CASE("property: enumeration matches brute force into products") {
  std::mt19937 rng(gen::kSeed);
  const auto pool = zoo::standard_structures();
  int checked = 0;
  while (checked < 25) {
    const auto& a = gen::pick(pool, rng);
    const auto& b = gen::pick(pool, rng);
    const auto& c = gen::pick(pool, rng);
    if (a->profile != b->profile || b->profile != c->profile) continue;
    if (a->size() > 4 || b->size() * c->size() > 6) continue;
    const Product p = direct_product(b, c);
    std::vector<std::vector<Elem>> got;
    for (const auto& f : enumerate_morphisms(a, p.object)) got.push_back(f.map);
    CHECK(got == oracle::all_morphisms(*a, *p.object));
    ++checked;
  }
}
