#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "mci/enumerate.hpp"
#include "mci/limits.hpp"
#include "mci/verify.hpp"
#include "mci/zoo.hpp"
#include "oracle.hpp"

using namespace mci;

namespace {

struct Cospan {
  Morphism alpha;
  Morphism beta;
};

std::vector<Cospan> cospans(std::mt19937& rng, int want) {
  const auto pool = zoo::standard_structures();
  std::vector<Cospan> out;
  while (static_cast<int>(out.size()) < want) {
    const auto& p = gen::pick(pool, rng);
    const auto& r = gen::pick(pool, rng);
    const auto& s = gen::pick(pool, rng);
    if (p->profile != s->profile || r->profile != s->profile) continue;
    if (p->size() > 6 || r->size() > 6 || s->size() > 12) continue;
    const auto fa = enumerate_morphisms(p, s), fb = enumerate_morphisms(r, s);
    out.push_back({gen::pick(fa, rng), gen::pick(fb, rng)});
  }
  return out;
}

}  // namespace

TEST_CASE("direct product") {
  auto z2 = zoo::make_cyclic(2), z3 = zoo::make_cyclic(3);
  const Product p = direct_product(z2, z3);
  CHECK(p.object->size() == 6);
  CHECK(verify_structure(*p.object).passed());
  CHECK(oracle::isomorphic(*p.object, *zoo::make_cyclic(6)));
  CHECK(is_morphism(p.pi1));
  CHECK(is_morphism(p.pi2));
  CHECK_THROWS_AS(direct_product(z2, zoo::make_truncated_poly(2)), StructuralError);
}

TEST_CASE("pairing is the unique map with the given components") {
  auto z4 = zoo::make_cyclic(4), z2 = zoo::make_cyclic(2);
  const Product p = direct_product(z2, z2);
  const Morphism f{z4, z2, {0, 1, 0, 1}};
  const Morphism h = pairing(f, f, p);
  CHECK(same_morphism(compose(p.pi1, h), f));
  CHECK(same_morphism(compose(p.pi2, h), f));
  std::size_t count = 0;
  for (const auto& m : enumerate_morphisms(z4, p.object))
    if (same_morphism(compose(p.pi1, m), f) && same_morphism(compose(p.pi2, m), f)) ++count;
  CHECK(count == 1);
}

TEST_CASE("equalizer") {
  auto z4 = zoo::make_cyclic(4);
  const Morphism id = identity_morphism(z4), dbl{z4, z4, {0, 2, 0, 2}};
  // x = 2x exactly for x = 0.
  CHECK(equalizer(id, dbl).elements == std::vector<Elem>{0});
  CHECK(equalizer(id, id).elements.size() == 4);
}

TEST_CASE("property: fiber product sits inside the direct product") {
  std::mt19937 rng(gen::kSeed);
  for (const auto& [alpha, beta] : cospans(rng, 40)) {
    const Product fp = fiber_product(alpha, beta);
    const Product dp = direct_product(alpha.dom, beta.dom);
    CHECK(verify_structure(*fp.object).passed());
    const std::size_t nr = beta.dom->size();
    std::size_t expected = 0;
    for (Elem p = 0; p < alpha.dom->size(); ++p)
      for (Elem r = 0; r < nr; ++r)
        if (alpha(p) == beta(r)) ++expected;
    CHECK(fp.object->size() == expected);
    // Map each pair into the direct product and compare tables there.
    std::vector<Elem> into(fp.object->size());
    for (Elem x = 0; x < into.size(); ++x) {
      CHECK(alpha(fp.pi1(x)) == beta(fp.pi2(x)));
      into[x] = static_cast<Elem>(fp.pi1(x) * nr + fp.pi2(x));
      CHECK(dp.pi1(into[x]) == fp.pi1(x));
      CHECK(dp.pi2(into[x]) == fp.pi2(x));
    }
    CHECK(oracle::is_hom(*fp.object, *dp.object, into));
  }
}

TEST_CASE("property: equalizer equals the fiber product of the pairing with the diagonal") {
  std::mt19937 rng(gen::kSeed + 1);
  const auto pool = zoo::standard_structures();
  int checked = 0;
  while (checked < 30) {
    const auto& a = gen::pick(pool, rng);
    const auto& b = gen::pick(pool, rng);
    if (a->profile != b->profile || a->size() > 6 || b->size() > 6) continue;
    const auto homs = enumerate_morphisms(a, b);
    const Morphism& f = gen::pick(homs, rng);
    const Morphism& g = gen::pick(homs, rng);
    const Product bb = direct_product(b, b);
    const Morphism fg = pairing(f, g, bb);
    const Morphism diag = pairing(identity_morphism(b), identity_morphism(b), bb);
    const Product fp = fiber_product(fg, diag);
    std::vector<Elem> via;
    for (Elem x = 0; x < fp.object->size(); ++x) via.push_back(fp.pi1(x));
    CHECK(equalizer(f, g).elements == via);
    ++checked;
  }
}

TEST_CASE("tuple products reject non-closed selections") {
  auto z4 = zoo::make_cyclic(4);
  const std::vector<StructurePtr> f{z4};
  CHECK_THROWS_AS(tuple_product(f, [](auto t) { return t[0] != 2; }, "bad"), PreconditionError);
  const TupleProduct ok = tuple_product(f, [](auto t) { return t[0] % 2 == 0; }, "even");
  CHECK(ok.object->size() == 2);
  const std::vector<Elem> two{2};
  CHECK(ok.index_of(two) == Elem{1});
}
