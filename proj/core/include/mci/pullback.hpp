#pragma once

#include <cstddef>
#include <optional>

#include "mci/cat1.hpp"

namespace mci {

/// phi*(P) = {(p,s) | d(p) = phi(s)} over S with d*(p,s) = s and the
/// projection (phi', phi) back to the original crossed module.
struct PullbackXMod {
  CrossedModule object;
  XModMorphism projection;
};

/// Action t.(p,s) = (phi(t).p, t + s - t), t*(p,s) = (phi(t)*p, t*s).
/// Throws StructuralError when phi does not land in the base of p.
PullbackXMod pullback_xmod(const CrossedModule& p, const Morphism& phi);

struct XModMediator {
  XModMorphism mediator;  // (f*, id_S)
  std::size_t count = 0;  // morphisms (g, id_S) with the same two composites
  Report report;
};

/// For a morphism (f, phi): (X,S,mu) -> (P,R,d), the mediator
/// f*(x) = (f(x), mu(x)) into pullback_xmod(p, phi), checked against an
/// enumeration of every candidate. Throws PreconditionError when (f, phi)
/// is not a crossed module morphism.
XModMediator xmod_pullback_mediator(const Morphism& f, const CrossedModule& mu, const Morphism& phi,
                                    const CrossedModule& p, std::size_t max_size = kUniversalSizeGuard);

/// Pullback of the inclusion crossed module of `ideal` along phi.
CrossedModule preimage_xmod(const Subobject& ideal, const Morphism& phi);

/// phi* on a morphism (mu1, id_R): (p,s) -> (mu1(p), s), identity on S.
XModMorphism pullback_xmod_morphism(const XModMorphism& m, const Morphism& phi);

/// phi*(R) = {(q1,r,q2) | phi(q1) = s(r), phi(q2) = t(r)} over Q with its
/// projection (pi, phi).
struct PullbackCat1 {
  Cat1Object object;
  Cat1Morphism projection;
};

PullbackCat1 pullback_cat1(const Cat1Object& c, const Morphism& phi);

struct Cat1Mediator {
  Cat1Morphism mediator;  // (psi, id_Q)
  std::size_t count = 0;
  Report report;
};

/// psi(p) = (s'(p), phi^(p), t'(p)) for a cat1-morphism varphi into the
/// object `target` was pulled back from, along varphi's base component.
Cat1Mediator cat1_pullback_mediator(const Cat1Morphism& varphi, const PullbackCat1& target,
                                    std::size_t max_size = kUniversalSizeGuard);

struct SquareResult {
  Report report;
  Cat1Object via_xmod;  // xmod_to_cat1(pullback_xmod(x, phi))
  Cat1Object via_cat1;  // pullback_cat1(xmod_to_cat1(x), phi)
  std::optional<Cat1Morphism> iso;
};

/// Compares both routes around the square up to isomorphism. Throws
/// SizeGuardError when either cat1 carrier exceeds `max_size`.
SquareResult square_commutes(const CrossedModule& x, const Morphism& phi,
                             std::size_t max_size = kConstructionSizeGuard);

}  // namespace mci
