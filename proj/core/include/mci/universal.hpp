#pragma once

#include <cstddef>
#include <vector>

#include "mci/xmod.hpp"

namespace mci {

enum class LimitKind { Product, Pullback, Equalizer, Terminal, Initial };

std::string_view to_string(LimitKind kind);

/// A candidate limit with the diagram it claims to be a limit of.
///   Product:   legs to the two factors; diagram empty.
///   Pullback:  legs to the domains of diagram[0], diagram[1] (common codomain).
///   Equalizer: one leg into the common domain of diagram[0], diagram[1].
///   Terminal, Initial: no legs, no diagram.
struct LimitProblem {
  LimitKind kind = LimitKind::Product;
  XModCone candidate;
  std::vector<XModMorphism> diagram;
  HomScope scope = HomScope::OverIdentity;
};

/// For each commuting cone from `tester`, the number of mediating
/// morphisms, in enumeration order of the cones. Terminal and Initial
/// yield a single entry (the hom-count into / out of the candidate).
std::vector<std::size_t> mediator_counts(const LimitProblem& problem, const CrossedModule& tester,
                                         std::size_t max_size = kUniversalSizeGuard);

/// One line per tester (law "universal", op = tester name); a line passes
/// iff every cone has exactly one mediator. Throws SizeGuardError when a
/// tester level exceeds `max_size`.
Report verify_universal_cone(const LimitProblem& problem, const std::vector<CrossedModule>& testers,
                             std::size_t max_size = kUniversalSizeGuard);

}  // namespace mci
