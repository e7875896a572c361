#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mci/morphism.hpp"

namespace mci {

/// Default carrier bound for constructions and morphism enumeration.
inline constexpr std::size_t kConstructionSizeGuard = 12;
/// Default carrier bound for testers in universal-property checks.
inline constexpr std::size_t kUniversalSizeGuard = 8;

/// Greedy generating set of the additive group, in carrier order.
std::vector<Elem> generating_set(const Structure& s);

/// Visits every morphism a -> b. Images of a generating set are chosen by
/// backtracking (pruned by element orders and by consistency on the
/// subgroup generated so far); complete candidates are then checked
/// against every star and unary. `visit` returns false to stop early.
///
/// Throws SizeGuardError when |a| exceeds `max_size`.
void for_each_morphism(const StructurePtr& a, const StructurePtr& b,
                       const std::function<bool(const Morphism&)>& visit,
                       std::size_t max_size = kConstructionSizeGuard);

/// All morphisms a -> b, sorted lexicographically by their maps.
std::vector<Morphism> enumerate_morphisms(const StructurePtr& a, const StructurePtr& b,
                                          std::size_t max_size = kConstructionSizeGuard);

/// A bijective morphism whose inverse is also a morphism, if one exists.
std::optional<Morphism> find_isomorphism(const StructurePtr& a, const StructurePtr& b,
                                         std::size_t max_size = kConstructionSizeGuard);

void check_size_guard(const Structure& s, std::size_t max_size, const char* what);

}  // namespace mci
