#pragma once

#include <vector>

#include "mci/morphism.hpp"
#include "mci/report.hpp"

namespace mci {

/// An action of `actor` (B) on `acted` (A): the dot table b.a and, per
/// binary symbol of the profile, the table b*a. The right action a*b is
/// read from the opposite symbol: a*b = b *° a.
struct DerivedAction {
  StructurePtr actor;
  StructurePtr acted;
  Table dot;
  std::vector<Table> star;

  Elem act(Elem b, Elem a) const { return dot(b, a); }
  /// b * a
  Elem left(std::size_t op, Elem b, Elem a) const { return star[op](b, a); }
  /// a * b
  Elem right(std::size_t op, Elem a, Elem b) const {
    return star[actor->profile->opposite(op)](b, a);
  }

  void validate_shape() const;
};

bool same_action(const DerivedAction& x, const DerivedAction& y);

/// b.a = a and b*a = 0.
DerivedAction trivial_action(StructurePtr actor, StructurePtr acted);

/// Action of a structure on itself: x.y = x + y - x, x*y from its own tables.
DerivedAction conjugation_action(StructurePtr s);

/// Action of the parent on an ideal by conjugation and the parent's stars.
DerivedAction ideal_action(const Subobject& ideal);

/// The action induced by a split extension 0 -> A -> E -> B -> 0 with
/// section `sec`: b.a = sec(b) + a - sec(b), b*a = sec(b) * a.
///
/// Throws PreconditionError if `i` is not ker p, if p.sec is not the
/// identity, or if a value escapes A.
DerivedAction action_from_section(const Morphism& p, const Subobject& i, const Morphism& sec);

/// Restriction of scalars: s.a = along(s) . a, s*a = along(s) * a.
DerivedAction pull_back_action(const DerivedAction& act, const Morphism& along);

/// Itemized check of conditions 1 to 12 (11 in both placements of the
/// actor, "cond11" and "cond11.sym"). Condition 12 is evaluated inside the
/// semidirect carrier, where every product of elements of A and B is
/// defined.
Report check_derived_action(const DerivedAction& act);

struct SemidirectProduct {
  StructurePtr object;  // carrier A x B, element (a,b) at index a*|B| + b
  Morphism inject;      // a -> (a,0)
  Morphism project;     // (a,b) -> b
  Morphism section;     // b -> (0,b)
};

/// Builds A x| B with (a',b') + (a,b) = (a' + b'.a, b' + b) and
/// (a',b') * (a,b) = (a'*a + a'*b + b'*a, b'*b) for every symbol. Whether
/// the result is an object is left to verify_structure.
SemidirectProduct semidirect_product(const DerivedAction& act);

}  // namespace mci
