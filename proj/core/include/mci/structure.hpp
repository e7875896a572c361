#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mci/profile.hpp"
#include "mci/table.hpp"

namespace mci {

/// A finite group with operations: carrier, group tables, one table per
/// binary symbol of the profile (opposites included) and one per unary.
///
/// Treated as immutable once wrapped in a StructurePtr.
struct Structure {
  ProfilePtr profile;
  std::string name;
  std::vector<std::string> elements;
  Elem zero = 0;
  Table add;
  UnaryTable neg;
  std::vector<Table> star;
  std::vector<UnaryTable> unary;

  std::size_t size() const noexcept { return elements.size(); }

  Elem plus(Elem x, Elem y) const { return add(x, y); }
  Elem minus(Elem x) const { return neg[x]; }
  /// x - y, i.e. x + (-y).
  Elem diff(Elem x, Elem y) const { return add(x, neg[y]); }
  /// g + x - g.
  Elem conjugate(Elem g, Elem x) const { return add(add(g, x), neg[g]); }
  Elem op(std::size_t s, Elem x, Elem y) const { return star[s](x, y); }
  Elem apply(std::size_t u, Elem x) const { return unary[u][x]; }

  const std::string& label(Elem x) const { return elements.at(x); }
  std::optional<Elem> find(std::string_view label) const;

  /// Throws StructuralError when tables do not match the carrier/profile.
  void validate_shape() const;
  /// Overwrites every non-primary star table with the transpose of its
  /// opposite (primary) table.
  void fill_opposites();
};

using StructurePtr = std::shared_ptr<const Structure>;

/// Validates shape and freezes.
StructurePtr freeze(Structure s);

/// Same profile, carrier labels, zero and tables.
bool same_structure(const Structure& a, const Structure& b);
bool same_profile(const Structure& a, const Structure& b);

/// The one-element structure {0}: zero object of the variety.
StructurePtr zero_structure(ProfilePtr profile, std::string name = "zero");

/// Evaluates a profile term with variables bound to `values`.
Elem evaluate(const Structure& s, const Term& term, std::span<const Elem> values);

std::size_t element_order(const Structure& s, Elem x);

bool is_abelian(const Structure& s);

}  // namespace mci
