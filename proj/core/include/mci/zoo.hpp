#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mci/cat1.hpp"

namespace mci::zoo {

/// Z_n, elements "0".."n-1". 1 <= n <= 12.
StructurePtr make_cyclic(unsigned n);

/// S_3 as r^i s^j with r^3 = s^2 = e and s r = r^2 s; elements
/// e, r, r2, s, rs, r2s.
StructurePtr make_symmetric3();

/// F_p[x]/(x^k) over comm-algebra-fp, p in {2,3,5} and p^k <= 12.
/// Element a0 + a1 x + ... sits at index a0 + a1 p + ...
StructurePtr make_truncated_poly(unsigned p, unsigned k = 2);

/// Two-dimensional Lie algebra [e1,e2] = e1 over F_p, p in {3,5}.
/// Element a e1 + b e2 sits at index a + b p.
StructurePtr make_lie2(unsigned p);

/// Leibniz algebra with basis a, b, [a,a] = b and every other basis bracket
/// zero, over F_p with p in {2,3}.
StructurePtr make_leibniz2(unsigned p);

/// F_2[x]/(x^2) as a dialgebra with both products equal to multiplication.
StructurePtr make_dialgebra(unsigned p = 2);

/// Every zoo structure, in a fixed order.
std::vector<StructurePtr> standard_structures();

/// The fixed suite of ten crossed modules:
///   z2_z4            (Z2, Z4, 1 -> 2, trivial action)
///   ideal_f2         (x) in F2[x]/(x^2)
///   ideal_f3         (x) in F3[x]/(x^2)
///   ideal_lie3       span e1 in the Lie algebra over F3
///   ideal_leibniz2   span b in the Leibniz algebra over F2
///   ideal_leibniz3   span b in the Leibniz algebra over F3
///   ideal_dialgebra2 (x) in the dialgebra F2[x]/(x^2)
///   a3_s3            A3 in S3 with conjugation
///   terminal_z4      (Z4, Z4, id)
///   initial_z4       ({0}, Z4, 0)
std::vector<CrossedModule> standard_xmods();

/// The cat1 images of standard_xmods() followed by the identity cat1-object
/// on Z4 (eleven in all).
std::vector<Cat1Object> standard_cat1s();

/// Crossed X-modules for universal-property checks: the top level runs over
/// the ideals of X generated by at most one element, the boundary over all
/// morphisms into X, and the action over the trivial one and (for ideals)
/// the restricted action of X. Only verified candidates with both levels
/// of size <= max_size are kept, without duplicates.
std::vector<CrossedModule> slice_testers(const StructurePtr& x, std::size_t max_size = kUniversalSizeGuard);

}  // namespace mci::zoo
