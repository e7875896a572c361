#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mci/xmod.hpp"

namespace mci {

/// An object R of the category (`big`) with a subobject S given by the
/// injective section e: S -> R and two retractions s, t: R -> S.
struct Cat1Object {
  std::string name;
  StructurePtr big;
  StructurePtr base;
  Morphism embed;
  Morphism source;
  Morphism target;

  void validate_shape() const;
};

struct Cat1Morphism {
  Cat1Object src;
  Cat1Object dst;
  Morphism phi;       // R -> R'
  Morphism phi_base;  // S -> S'

  void validate_shape() const;
};

bool same_cat1(const Cat1Object& a, const Cat1Object& b);

/// R = S with s = t = e = id.
Cat1Object identity_cat1(StructurePtr s, std::string name = {});

/// Precondition lines for the structures and maps, then section.source,
/// section.target, kernel.star[*] and kernel.commutator (x in ker s,
/// y in ker t). Throws StructuralError when e is not injective.
Report verify_cat1(const Cat1Object& c);

/// square.source, square.target, square.embed.
Report verify_cat1_morphism(const Cat1Morphism& m);

Cat1Morphism identity_cat1_morphism(const Cat1Object& c);
Cat1Morphism compose(const Cat1Morphism& g, const Cat1Morphism& f);

/// R = C1 x| C0, s(c1,c0) = c0, t(c1,c0) = d(c1) + c0, e(c0) = (0,c0).
Cat1Object xmod_to_cat1(const CrossedModule& x);

/// (ker s, S, t restricted, q.k = e(q) + k - e(q), q*k = e(q)*k).
/// The result is named after c with an "_xmod" suffix.
CrossedModule cat1_to_xmod(const Cat1Object& c);

/// (mu1 x mu0, mu0) between the images of source and target.
Cat1Morphism xmod_morphism_to_cat1(const XModMorphism& m);

/// Visits every cat1-morphism a -> b; the base component is forced by
/// phi_base = s' . phi . e.
std::vector<Cat1Morphism> enumerate_cat1_morphisms(const Cat1Object& a, const Cat1Object& b,
                                                   std::size_t max_size = kConstructionSizeGuard);

/// A cat1-morphism with bijective components whose inverse pair is also a
/// cat1-morphism.
std::optional<Cat1Morphism> find_cat1_isomorphism(const Cat1Object& a, const Cat1Object& b,
                                                  std::size_t max_size = kConstructionSizeGuard);

/// Searches an isomorphism cat1_to_xmod(xmod_to_cat1(x)) ~ x.
Report roundtrip_check(const CrossedModule& x, std::size_t max_size = kConstructionSizeGuard);
/// Searches an isomorphism xmod_to_cat1(cat1_to_xmod(c)) ~ c.
Report roundtrip_check(const Cat1Object& c, std::size_t max_size = kConstructionSizeGuard);

}  // namespace mci
