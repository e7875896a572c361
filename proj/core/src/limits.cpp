#include "mci/limits.hpp"

#include <algorithm>

namespace mci {

std::optional<Elem> TupleProduct::index_of(std::span<const Elem> tuple) const {
  std::size_t lo = 0, hi = tuples.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (std::lexicographical_compare(tuples[mid].begin(), tuples[mid].end(), tuple.begin(), tuple.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < tuples.size() && std::equal(tuples[lo].begin(), tuples[lo].end(), tuple.begin(), tuple.end()))
    return static_cast<Elem>(lo);
  return std::nullopt;
}

TupleProduct tuple_product(std::span<const StructurePtr> factors,
                           const std::function<bool(std::span<const Elem>)>& keep, std::string name) {
  if (factors.empty()) throw StructuralError("product of no factors");
  for (const auto& f : factors)
    if (!same_profile(*f, *factors[0]))
      throw StructuralError("product factors " + factors[0]->name + " and " + f->name +
                            " have different profiles");
  const std::size_t k = factors.size();
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > (std::size_t{1} << 24)) throw SizeGuardError("product carrier too large to tabulate");
  }

  // Dense mixed-radix index of every full tuple -> position in the result.
  constexpr Elem kAbsent = ~Elem{0};
  std::vector<Elem> position(total, kAbsent);
  TupleProduct out;
  std::vector<Elem> t(k, 0);
  auto encode = [&](std::span<const Elem> tuple) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < k; ++i) code = code * factors[i]->size() + tuple[i];
    return code;
  };
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<Elem>(rest % factors[i]->size());
      rest /= factors[i]->size();
    }
    if (keep(t)) {
      position[code] = static_cast<Elem>(out.tuples.size());
      out.tuples.push_back(t);
    }
  }

  const std::size_t n = out.tuples.size();
  const ProfilePtr& profile = factors[0]->profile;
  Structure s;
  s.profile = profile;
  s.name = std::move(name);
  s.add = Table(n, n);
  s.neg.resize(n);
  s.star.assign(profile->binary().size(), Table(n, n));
  s.unary.assign(profile->unary().size(), UnaryTable(n));

  std::vector<Elem> scratch(k);
  auto locate = [&](const char* what, std::vector<Elem> witness) -> Elem {
    const Elem p = position[encode(scratch)];
    if (p == kAbsent) {
      Check c;
      c.law = std::string("closure.") + what;
      c.passed = false;
      c.tuple = std::move(witness);
      throw PreconditionError("tuple subset of the product is not closed under " + std::string(what), c);
    }
    return p;
  };

  std::vector<Elem> zero(k);
  for (std::size_t i = 0; i < k; ++i) zero[i] = factors[i]->zero;
  scratch = zero;
  s.zero = locate("zero", {});

  for (std::size_t a = 0; a < n; ++a) {
    const auto& x = out.tuples[a];
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + factors[i]->label(x[i]);
    s.elements.push_back(label + ")");

    for (std::size_t i = 0; i < k; ++i) scratch[i] = factors[i]->minus(x[i]);
    s.neg[a] = locate("neg", {static_cast<Elem>(a)});
    for (std::size_t u = 0; u < s.unary.size(); ++u) {
      for (std::size_t i = 0; i < k; ++i) scratch[i] = factors[i]->apply(u, x[i]);
      s.unary[u][a] = locate("unary", {static_cast<Elem>(a)});
    }
    for (std::size_t b = 0; b < n; ++b) {
      const auto& y = out.tuples[b];
      for (std::size_t i = 0; i < k; ++i) scratch[i] = factors[i]->plus(x[i], y[i]);
      s.add(a, b) = locate("add", {static_cast<Elem>(a), static_cast<Elem>(b)});
      for (std::size_t o = 0; o < s.star.size(); ++o) {
        for (std::size_t i = 0; i < k; ++i) scratch[i] = factors[i]->op(o, x[i], y[i]);
        s.star[o](a, b) = locate("star", {static_cast<Elem>(a), static_cast<Elem>(b)});
      }
    }
  }
  out.object = freeze(std::move(s));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> map(n);
    for (std::size_t a = 0; a < n; ++a) map[a] = out.tuples[a][i];
    out.projections.push_back(Morphism{out.object, factors[i], std::move(map)});
  }
  return out;
}

Product direct_product(StructurePtr p, StructurePtr r) {
  const std::string name = p->name + "_x_" + r->name;
  const StructurePtr factors[] = {std::move(p), std::move(r)};
  auto tp = tuple_product(factors, [](auto) { return true; }, name);
  return {tp.object, tp.projections[0], tp.projections[1]};
}

Product fiber_product(const Morphism& alpha, const Morphism& beta) {
  alpha.validate_shape();
  beta.validate_shape();
  if (!same_structure(*alpha.cod, *beta.cod))
    throw StructuralError("fiber product: codomains " + alpha.cod->name + " and " + beta.cod->name +
                          " differ");
  const StructurePtr factors[] = {alpha.dom, beta.dom};
  auto tp = tuple_product(
      factors, [&](auto t) { return alpha(t[0]) == beta(t[1]); },
      alpha.dom->name + "_x_" + alpha.cod->name + "_" + beta.dom->name);
  return {tp.object, tp.projections[0], tp.projections[1]};
}

Subobject equalizer(const Morphism& f, const Morphism& g) {
  f.validate_shape();
  g.validate_shape();
  if (!same_structure(*f.dom, *g.dom) || !same_structure(*f.cod, *g.cod))
    throw StructuralError("equalizer: morphisms are not parallel");
  std::vector<Elem> elements;
  for (Elem x = 0; x < f.dom->size(); ++x)
    if (f(x) == g(x)) elements.push_back(x);
  return make_subobject(f.dom, std::move(elements), "eq_" + f.dom->name);
}

Morphism pairing(const Morphism& f, const Morphism& g, const Product& target) {
  if (!same_structure(*f.dom, *g.dom)) throw StructuralError("pairing: domains differ");
  std::vector<Elem> map(f.dom->size());
  for (Elem x = 0; x < map.size(); ++x) {
    bool found = false;
    for (Elem y = 0; y < target.object->size() && !found; ++y)
      if (target.pi1(y) == f(x) && target.pi2(y) == g(x)) {
        map[x] = y;
        found = true;
      }
    if (!found) throw StructuralError("pairing: no element of " + target.object->name + " matches");
  }
  return {f.dom, target.object, std::move(map)};
}

}  // namespace mci
