#include "mci/structure.hpp"

#include <algorithm>

#include "mci/error.hpp"

namespace mci {

std::optional<Elem> Structure::find(std::string_view label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

void Structure::validate_shape() const {
  const std::size_t n = size();
  auto fail = [&](const std::string& why) {
    throw StructuralError("structure '" + name + "': " + why);
  };
  if (!profile) fail("no profile");
  if (n == 0) fail("empty carrier");
  for (std::size_t i = 0; i < n; ++i) {
    if (elements[i].empty()) fail("empty element label");
    for (std::size_t j = 0; j < i; ++j)
      if (elements[i] == elements[j]) fail("duplicate element '" + elements[i] + "'");
  }
  auto in_range = [&](std::span<const Elem> values, const std::string& what) {
    for (Elem v : values)
      if (v >= n) fail(what + " has an entry outside the carrier");
  };
  if (zero >= n) fail("zero outside the carrier");
  if (add.rows() != n || add.cols() != n) fail("add table is not " + std::to_string(n) + "x" + std::to_string(n));
  in_range(add.values(), "add");
  if (neg.size() != n) fail("neg table has length " + std::to_string(neg.size()));
  in_range(neg, "neg");
  if (star.size() != profile->binary().size())
    fail("expected " + std::to_string(profile->binary().size()) + " star tables");
  for (std::size_t s = 0; s < star.size(); ++s) {
    const auto& symbol = profile->binary()[s].symbol;
    if (star[s].rows() != n || star[s].cols() != n) fail("table '" + symbol + "' has wrong dimensions");
    in_range(star[s].values(), symbol);
  }
  if (unary.size() != profile->unary().size())
    fail("expected " + std::to_string(profile->unary().size()) + " unary tables");
  for (std::size_t u = 0; u < unary.size(); ++u) {
    const auto& symbol = profile->unary()[u].symbol;
    if (unary[u].size() != n) fail("table '" + symbol + "' has wrong length");
    in_range(unary[u], symbol);
  }
}

void Structure::fill_opposites() {
  const auto& ops = profile->binary();
  for (std::size_t s = 0; s < ops.size(); ++s)
    if (!ops[s].primary) star[s] = star[ops[s].opposite].transposed();
}

StructurePtr freeze(Structure s) {
  s.validate_shape();
  return std::make_shared<const Structure>(std::move(s));
}

bool same_profile(const Structure& a, const Structure& b) {
  return a.profile == b.profile || (a.profile && b.profile && *a.profile == *b.profile);
}

bool same_structure(const Structure& a, const Structure& b) {
  return same_profile(a, b) && a.elements == b.elements && a.zero == b.zero && a.add == b.add &&
         a.neg == b.neg && a.star == b.star && a.unary == b.unary;
}

StructurePtr zero_structure(ProfilePtr profile, std::string name) {
  Structure s;
  s.profile = std::move(profile);
  s.name = std::move(name);
  s.elements = {"0"};
  s.add = Table(1, 1);
  s.neg = {0};
  s.star.assign(s.profile->binary().size(), Table(1, 1));
  s.unary.assign(s.profile->unary().size(), UnaryTable{0});
  return freeze(std::move(s));
}

Elem evaluate(const Structure& s, const Term& term, std::span<const Elem> values) {
  switch (term.kind) {
    case Term::Kind::Variable:
      return values[term.index];
    case Term::Kind::Zero:
      return s.zero;
    case Term::Kind::Add:
      return s.plus(evaluate(s, term.args[0], values), evaluate(s, term.args[1], values));
    case Term::Kind::Negate:
      return s.minus(evaluate(s, term.args[0], values));
    case Term::Kind::Binary:
      return s.op(term.index, evaluate(s, term.args[0], values), evaluate(s, term.args[1], values));
    case Term::Kind::Unary:
      return s.apply(term.index, evaluate(s, term.args[0], values));
  }
  return s.zero;
}

std::size_t element_order(const Structure& s, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != s.zero; y = s.plus(y, x)) {
    if (++k > s.size()) return 0;  // not a group element of finite order in this table
  }
  return k;
}

bool is_abelian(const Structure& s) {
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = x + 1; y < s.size(); ++y)
      if (s.plus(x, y) != s.plus(y, x)) return false;
  return true;
}

}  // namespace mci
