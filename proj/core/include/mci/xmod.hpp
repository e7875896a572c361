#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mci/action.hpp"
#include "mci/enumerate.hpp"
#include "mci/report.hpp"

namespace mci {

/// Boundary c1 -> c0 together with a derived action of c0 on c1.
struct CrossedModule {
  std::string name;
  StructurePtr c1;
  StructurePtr c0;
  Morphism boundary;
  DerivedAction action;

  /// Throws StructuralError when the four components do not fit together.
  void validate_shape() const;
};

struct XModMorphism {
  CrossedModule src;
  CrossedModule dst;
  Morphism mu1;
  Morphism mu0;

  void validate_shape() const;
};

bool same_xmod(const CrossedModule& a, const CrossedModule& b);

/// Assembles a crossed module, naming it `name` (or "<c1>_to_<c0>").
CrossedModule make_xmod(Morphism boundary, DerivedAction action, std::string name = {});

/// XM1.dot, XM1.star[*], XM2.dot, XM2.star[*], each with its first witness.
/// Component checks (c1/c0 structures, boundary morphism, derived action)
/// are included as precondition lines.
Report verify_xmod(const CrossedModule& x);

/// Precondition lines for mu1/mu0, then square, equiv.dot, equiv.star[*].
Report verify_xmod_morphism(const XModMorphism& m);

XModMorphism identity_xmod_morphism(const CrossedModule& x);
/// g after f.
XModMorphism compose(const XModMorphism& g, const XModMorphism& f);

/// (P x_S R, S, (p,r) -> a(p)) with the diagonal action of S.
struct XModProduct {
  CrossedModule object;
  XModMorphism pi1;
  XModMorphism pi2;
};
XModProduct xmod_fiber_product(const CrossedModule& a, const CrossedModule& b);

/// From (alpha, id): (P,X,gamma) -> (S,X,d'), the crossed module (P,S,alpha)
/// with s.p = d'(s).p and s*p = d'(s)*p. Throws PreconditionError when the
/// morphism fails to verify or mu0 is not the identity.
CrossedModule induced_xmod(const XModMorphism& m);

/// (A,C, d' after d) with the action actC of C on A. Throws
/// PreconditionError on the first pair violating d'(b).a = b.a or
/// d'(b)*a = b*a, or when the result does not verify.
CrossedModule compose_xmod(const CrossedModule& ab, const CrossedModule& bc, const DerivedAction& act_c);

/// A limit candidate in crossed modules with its legs, in the order the
/// diagram lists them.
struct XModCone {
  CrossedModule object;
  std::vector<XModMorphism> legs;
};

/// Pullback in XMod/X of f: P -> S and g: R -> S (both identity on X).
XModCone slice_pullback(const XModMorphism& f, const XModMorphism& g);
/// (X, X, id) with conjugation and X's own stars.
CrossedModule slice_terminal(StructurePtr x);
/// ({0}, X, 0) with the trivial action.
CrossedModule slice_initial(StructurePtr x);
/// (boundary, id): a -> slice_terminal(X).
XModMorphism to_terminal(const CrossedModule& a);
/// (0, id): slice_initial(X) -> a.
XModMorphism from_initial(const CrossedModule& a);
/// Product in XMod/X as the pullback over the terminal object.
XModCone slice_product(const CrossedModule& a, const CrossedModule& b);
/// Componentwise equalizer of parallel morphisms; the single leg is the
/// inclusion.
XModCone xmod_equalizer(const XModMorphism& f, const XModMorphism& g);

/// Crossed module N -> R of an ideal with the parent's action.
CrossedModule ideal_inclusion_xmod(const Subobject& ideal, std::string name = {});

enum class HomScope {
  All,           // every crossed-module morphism
  OverIdentity,  // morphisms whose base component is the identity
};

/// Visits every crossed-module morphism a -> b in the given scope.
void for_each_xmod_morphism(const CrossedModule& a, const CrossedModule& b, HomScope scope,
                            const std::function<bool(const XModMorphism&)>& visit,
                            std::size_t max_size = kConstructionSizeGuard);
std::vector<XModMorphism> enumerate_xmod_morphisms(const CrossedModule& a, const CrossedModule& b,
                                                   HomScope scope,
                                                   std::size_t max_size = kConstructionSizeGuard);

/// Level isomorphisms forming a morphism whose inverse pair is also one.
std::optional<XModMorphism> find_xmod_isomorphism(const CrossedModule& a, const CrossedModule& b,
                                                  std::size_t max_size = kConstructionSizeGuard);

}  // namespace mci
