#pragma once

// Reference implementations used to cross-check the library. Everything
// here works from the raw tables and never calls the checks under test.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mci/action.hpp"
#include "mci/report.hpp"
#include "mci/structure.hpp"

namespace oracle {

using mci::Elem;
using mci::Structure;

Elem eval(const Structure& s, const mci::Term& t, std::span<const Elem> vals);

/// Re-evaluates the law named by `c` at its witness tuple. True when the
/// law holds there.
bool law_holds(const Structure& s, const mci::Check& c);

/// Every axiom, scanned over all tuples.
bool satisfies_axioms(const Structure& s);

bool is_hom(const Structure& a, const Structure& b, const std::vector<Elem>& f);

/// Filters all |b|^|a| maps, in lexicographic order.
std::vector<std::vector<Elem>> all_morphisms(const Structure& a, const Structure& b);

/// Tries every bijection (|a| <= 8).
bool isomorphic(const Structure& a, const Structure& b);

/// The carrier of a x| B with its sum, written out from the formula.
struct SemidirectTables {
  std::vector<std::vector<Elem>> add;
};
SemidirectTables semidirect_add(const mci::DerivedAction& act);

/// Left action of a group on a group by automorphisms: the three group
/// conditions checked directly.
bool is_group_action(const mci::DerivedAction& act);

}  // namespace oracle
