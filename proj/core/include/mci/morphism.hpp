#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mci/report.hpp"
#include "mci/structure.hpp"

namespace mci {

/// Carrier map between two structures of the same profile.
struct Morphism {
  StructurePtr dom;
  StructurePtr cod;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }

  /// Throws StructuralError on a length mismatch or an image outside cod.
  void validate_shape() const;
};

struct MorphismCheck {
  bool ok = true;
  std::optional<Check> violation;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks f(0)=0, f(x+y)=f(x)+f(y), f(x*y)=f(x)*f(y) for every star and
/// f(w(x))=w(f(x)) for every unary; reports the first violation.
MorphismCheck is_morphism(const Morphism& f);

Morphism identity_morphism(StructurePtr s);
Morphism zero_morphism(StructurePtr dom, StructurePtr cod);
/// g after f. Throws StructuralError unless cod(f) and dom(g) agree.
Morphism compose(const Morphism& g, const Morphism& f);

bool is_injective(const Morphism& f);
bool is_bijective(const Morphism& f);
/// Set-theoretic inverse of a bijection.
std::optional<Morphism> inverse(const Morphism& f);
/// Same endpoints (as structures) and same map.
bool same_morphism(const Morphism& f, const Morphism& g);

/// A subset containing zero and closed under every operation, with the
/// restricted structure and its inclusion.
struct Subobject {
  StructurePtr parent;
  std::vector<Elem> elements;  // parent ids, ascending
  StructurePtr induced;
  Morphism embed;

  bool contains(Elem x) const;
  /// Position of a parent element inside `induced`.
  std::optional<Elem> local(Elem x) const;
};

/// First closure failure of `elements` inside `parent`, if any.
std::optional<Check> closure_violation(const Structure& parent, std::span<const Elem> elements);

/// Builds the induced subobject. Throws PreconditionError if the subset is
/// not closed (witness included).
Subobject make_subobject(StructurePtr parent, std::vector<Elem> elements, std::string name = {});

Subobject whole(StructurePtr s);

Subobject kernel(const Morphism& f);

/// Normal subgroup closed under stars against the parent on both sides.
bool is_ideal(const Subobject& a);
std::optional<Check> ideal_violation(const Subobject& a);

/// Smallest ideal containing `generators`.
Subobject ideal_closure(StructurePtr parent, std::span<const Elem> generators, std::string name = {});

}  // namespace mci
