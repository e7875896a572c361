#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mci/morphism.hpp"

namespace mci {

/// Sub-structure of a finite product on the tuples accepted by a predicate,
/// with componentwise operations. Tuples are ordered lexicographically and
/// labelled "(a,b,...)".
struct TupleProduct {
  StructurePtr object;
  std::vector<std::vector<Elem>> tuples;
  std::vector<Morphism> projections;

  /// Index of a tuple in `object`, if present.
  std::optional<Elem> index_of(std::span<const Elem> tuple) const;
};

/// Throws StructuralError on profile mismatch and PreconditionError when
/// the accepted tuples are not closed under the operations.
TupleProduct tuple_product(std::span<const StructurePtr> factors,
                           const std::function<bool(std::span<const Elem>)>& keep,
                           std::string name);

struct Product {
  StructurePtr object;
  Morphism pi1;
  Morphism pi2;
};

Product direct_product(StructurePtr p, StructurePtr r);

/// P x_S R = {(p,r) | alpha(p) = beta(r)}.
Product fiber_product(const Morphism& alpha, const Morphism& beta);

/// {x | f(x) = g(x)} as a subobject of the common domain.
Subobject equalizer(const Morphism& f, const Morphism& g);

/// Unique map into a product with the given components.
Morphism pairing(const Morphism& f, const Morphism& g, const Product& target);

}  // namespace mci
