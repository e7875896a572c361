#include "doctest.h"
#include "mci/cat1.hpp"
#include "mci/verify.hpp"
#include "mci/zoo.hpp"
#include "oracle.hpp"

using namespace mci;

TEST_CASE("carrier sizes") {
  CHECK(zoo::make_cyclic(1)->size() == 1);
  CHECK(zoo::make_cyclic(12)->size() == 12);
  CHECK(zoo::make_symmetric3()->size() == 6);
  CHECK(zoo::make_truncated_poly(2)->size() == 4);
  CHECK(zoo::make_truncated_poly(3)->size() == 9);
  CHECK(zoo::make_truncated_poly(5, 1)->size() == 5);
  CHECK(zoo::make_lie2(3)->size() == 9);
  CHECK(zoo::make_lie2(5)->size() == 25);
  CHECK(zoo::make_leibniz2(2)->size() == 4);
  CHECK(zoo::make_dialgebra()->size() == 4);
  CHECK(zoo::standard_structures().size() == 14);
  CHECK(zoo::standard_xmods().size() == 10);
  CHECK(zoo::standard_cat1s().size() == 11);
}

TEST_CASE("out-of-range parameters") {
  CHECK_THROWS_AS(zoo::make_cyclic(0), Error);
  CHECK_THROWS_AS(zoo::make_cyclic(13), Error);
  CHECK_THROWS_AS(zoo::make_lie2(2), Error);
  CHECK_THROWS_AS(zoo::make_truncated_poly(5, 2), Error);
}

TEST_CASE("truncated polynomial multiplication") {
  auto f = zoo::make_truncated_poly(3);
  const auto star = *f->profile->binary_index("*");
  // (a0 + a1 x)(b0 + b1 x) = a0 b0 + (a0 b1 + a1 b0) x over F3.
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) {
      const unsigned a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
      const Elem want = static_cast<Elem>((a0 * b0) % 3 + 3 * ((a0 * b1 + a1 * b0) % 3));
      CHECK(f->op(star, a, b) == want);
    }
}

TEST_CASE("S3 relations") {
  auto s3 = zoo::make_symmetric3();
  const Elem r = *s3->find("r"), s = *s3->find("s");
  CHECK(s3->plus(r, s3->plus(r, r)) == s3->zero);
  CHECK(s3->plus(s, s) == s3->zero);
  CHECK(s3->plus(s, r) == s3->plus(s3->plus(r, r), s));
}

TEST_CASE("everything verifies") {
  for (const auto& s : zoo::standard_structures()) CHECK(verify_structure(*s).passed());
  for (const auto& x : zoo::standard_xmods()) CHECK(verify_xmod(x).passed());
  for (const auto& c : zoo::standard_cat1s()) CHECK(verify_cat1(c).passed());
}

TEST_CASE("constructors are deterministic") {
  const auto a = zoo::standard_structures(), b = zoo::standard_structures();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_structure(*a[i], *b[i]));
  const auto xa = zoo::standard_xmods(), xb = zoo::standard_xmods();
  for (std::size_t i = 0; i < xa.size(); ++i) CHECK(same_xmod(xa[i], xb[i]));
}

TEST_CASE("slice testers") {
  for (auto x : {zoo::make_cyclic(4), zoo::make_truncated_poly(2)}) {
    const auto testers = zoo::slice_testers(x);
    CHECK_FALSE(testers.empty());
    for (std::size_t i = 0; i < testers.size(); ++i) {
      CHECK(same_structure(*testers[i].c0, *x));
      CHECK(testers[i].c1->size() <= 8);
      CHECK(verify_xmod(testers[i]).passed());
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(same_xmod(testers[i], testers[j]));
    }
  }
}
