#pragma once

#include "mci/report.hpp"
#include "mci/structure.hpp"

namespace mci {

struct VerifyOptions {
  /// Check the profile's declared identities in addition to the group
  /// axioms and the laws every group with operations must satisfy.
  bool identities = true;
};

/// Exhaustive check of a structure against its profile.
///
/// Law ids: group.identity, group.inverse, group.assoc, distrib[*],
/// unary.additive[w], unary.scalar[w,*], unary.mult[w,*], central[*],
/// opposite[*], identity[<name>]. Every failing check carries its first
/// witness tuple in the variable order the law lists (x, y, z).
///
/// Throws StructuralError on malformed tables.
Report verify_structure(const Structure& s, VerifyOptions options = {});

}  // namespace mci
