#include "mci/morphism.hpp"

#include <algorithm>
#include <deque>

namespace mci {

void Morphism::validate_shape() const {
  if (!dom || !cod) throw StructuralError("morphism without endpoints");
  if (map.size() != dom->size())
    throw StructuralError("morphism " + dom->name + " -> " + cod->name + ": map has " +
                          std::to_string(map.size()) + " entries, domain has " +
                          std::to_string(dom->size()));
  for (Elem v : map)
    if (v >= cod->size())
      throw StructuralError("morphism " + dom->name + " -> " + cod->name + ": image outside codomain");
  if (!same_profile(*dom, *cod))
    throw StructuralError("morphism " + dom->name + " -> " + cod->name + ": profiles differ");
}

MorphismCheck is_morphism(const Morphism& f) {
  f.validate_shape();
  const Structure& a = *f.dom;
  const Structure& b = *f.cod;
  const Domain d{&a};
  auto fail = [&](std::string law, std::string op, std::vector<LawVariable> vars,
                  std::vector<Elem> tuple) {
    Check c;
    c.law = std::move(law);
    c.op = std::move(op);
    c.passed = false;
    c.witness = mci::bind(vars, tuple);
    c.tuple = std::move(tuple);
    return MorphismCheck{false, std::move(c)};
  };
  if (f(a.zero) != b.zero) return fail("zero", "", {{"x", d}}, {a.zero});
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (f(a.plus(x, y)) != b.plus(f(x), f(y))) return fail("add", "", {{"x", d}, {"y", d}}, {x, y});
  const auto& profile = *a.profile;
  for (std::size_t s = 0; s < profile.binary().size(); ++s)
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y)
        if (f(a.op(s, x, y)) != b.op(s, f(x), f(y)))
          return fail("star", profile.binary()[s].symbol, {{"x", d}, {"y", d}}, {x, y});
  for (std::size_t u = 0; u < profile.unary().size(); ++u)
    for (Elem x = 0; x < a.size(); ++x)
      if (f(a.apply(u, x)) != b.apply(u, f(x)))
        return fail("unary", profile.unary()[u].symbol, {{"x", d}}, {x});
  return {};
}

Morphism identity_morphism(StructurePtr s) {
  std::vector<Elem> map(s->size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = x;
  return {s, s, std::move(map)};
}

Morphism zero_morphism(StructurePtr dom, StructurePtr cod) {
  std::vector<Elem> map(dom->size(), cod->zero);
  return {std::move(dom), std::move(cod), std::move(map)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_structure(*f.cod, *g.dom))
    throw StructuralError("cannot compose: " + f.cod->name + " is not " + g.dom->name);
  std::vector<Elem> map(f.map.size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g(f(static_cast<Elem>(x)));
  return {f.dom, g.cod, std::move(map)};
}

bool is_injective(const Morphism& f) {
  std::vector<bool> seen(f.cod->size(), false);
  for (Elem v : f.map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_bijective(const Morphism& f) { return f.dom->size() == f.cod->size() && is_injective(f); }

std::optional<Morphism> inverse(const Morphism& f) {
  if (!is_bijective(f)) return std::nullopt;
  std::vector<Elem> map(f.map.size());
  for (Elem x = 0; x < f.map.size(); ++x) map[f(x)] = x;
  return Morphism{f.cod, f.dom, std::move(map)};
}

bool same_morphism(const Morphism& f, const Morphism& g) {
  return f.map == g.map && same_structure(*f.dom, *g.dom) && same_structure(*f.cod, *g.cod);
}

bool Subobject::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::optional<Elem> Subobject::local(Elem x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return std::nullopt;
  return static_cast<Elem>(it - elements.begin());
}

std::optional<Check> closure_violation(const Structure& parent, std::span<const Elem> elements) {
  std::vector<bool> in(parent.size(), false);
  for (Elem x : elements) in.at(x) = true;
  const Domain d{&parent};
  auto fail = [&](std::string law, std::string op, std::vector<Elem> tuple) {
    Check c;
    c.law = std::move(law);
    c.op = std::move(op);
    c.passed = false;
    std::vector<LawVariable> vars;
    for (std::size_t i = 0; i < tuple.size(); ++i) vars.push_back({i == 0 ? "x" : "y", d});
    c.witness = mci::bind(vars, tuple);
    c.tuple = std::move(tuple);
    return c;
  };
  if (!in[parent.zero]) return fail("closure.zero", "", {parent.zero});
  for (Elem x : elements) {
    if (!in[parent.minus(x)]) return fail("closure.neg", "", {x});
    for (std::size_t u = 0; u < parent.unary.size(); ++u)
      if (!in[parent.apply(u, x)]) return fail("closure.unary", parent.profile->unary()[u].symbol, {x});
    for (Elem y : elements) {
      if (!in[parent.plus(x, y)]) return fail("closure.add", "", {x, y});
      for (std::size_t s = 0; s < parent.star.size(); ++s)
        if (!in[parent.op(s, x, y)])
          return fail("closure.star", parent.profile->binary()[s].symbol, {x, y});
    }
  }
  return std::nullopt;
}

Subobject make_subobject(StructurePtr parent, std::vector<Elem> elements, std::string name) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elem x : elements)
    if (x >= parent->size()) throw StructuralError("subobject element outside " + parent->name);
  if (auto bad = closure_violation(*parent, elements))
    throw PreconditionError("subset of " + parent->name + " is not closed (" + bad->id() + ")", *bad);

  const std::size_t n = elements.size();
  std::vector<Elem> local(parent->size(), 0);
  for (std::size_t i = 0; i < n; ++i) local[elements[i]] = static_cast<Elem>(i);

  Structure s;
  s.profile = parent->profile;
  s.name = name.empty() ? parent->name + "_sub" : std::move(name);
  s.add = Table(n, n);
  s.neg.resize(n);
  s.star.assign(parent->star.size(), Table(n, n));
  s.unary.assign(parent->unary.size(), UnaryTable(n));
  s.zero = local[parent->zero];
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = elements[i];
    s.elements.push_back(parent->label(x));
    s.neg[i] = local[parent->minus(x)];
    for (std::size_t u = 0; u < s.unary.size(); ++u) s.unary[u][i] = local[parent->apply(u, x)];
    for (std::size_t j = 0; j < n; ++j) {
      const Elem y = elements[j];
      s.add(i, j) = local[parent->plus(x, y)];
      for (std::size_t k = 0; k < s.star.size(); ++k) s.star[k](i, j) = local[parent->op(k, x, y)];
    }
  }
  Subobject out;
  out.induced = freeze(std::move(s));
  out.embed = Morphism{out.induced, parent, elements};
  out.parent = std::move(parent);
  out.elements = std::move(elements);
  return out;
}

Subobject whole(StructurePtr s) {
  std::vector<Elem> all(s->size());
  for (Elem x = 0; x < all.size(); ++x) all[x] = x;
  Subobject out;
  out.parent = s;
  out.elements = std::move(all);
  out.induced = s;
  out.embed = identity_morphism(s);
  return out;
}

Subobject kernel(const Morphism& f) {
  f.validate_shape();
  std::vector<Elem> elements;
  for (Elem x = 0; x < f.dom->size(); ++x)
    if (f(x) == f.cod->zero) elements.push_back(x);
  return make_subobject(f.dom, std::move(elements), "ker_" + f.dom->name);
}

std::optional<Check> ideal_violation(const Subobject& a) {
  const Structure& p = *a.parent;
  const Domain d{&p};
  auto fail = [&](std::string law, std::string op, Elem g, Elem x) {
    Check c;
    c.law = std::move(law);
    c.op = std::move(op);
    c.passed = false;
    c.tuple = {g, x};
    c.witness = mci::bind({{"g", d}, {"a", d}}, c.tuple);
    return c;
  };
  for (Elem x : a.elements) {
    for (Elem g = 0; g < p.size(); ++g) {
      if (!a.contains(p.conjugate(g, x))) return fail("ideal.normal", "", g, x);
      for (std::size_t s = 0; s < p.star.size(); ++s) {
        const auto& sym = p.profile->binary()[s].symbol;
        if (!a.contains(p.op(s, x, g))) return fail("ideal.right", sym, g, x);
        if (!a.contains(p.op(s, g, x))) return fail("ideal.left", sym, g, x);
      }
    }
  }
  return std::nullopt;
}

bool is_ideal(const Subobject& a) { return !ideal_violation(a).has_value(); }

Subobject ideal_closure(StructurePtr parent, std::span<const Elem> generators, std::string name) {
  const Structure& p = *parent;
  std::vector<bool> in(p.size(), false);
  std::deque<Elem> queue;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  push(p.zero);
  for (Elem g : generators) push(g);
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    push(p.minus(x));
    for (std::size_t u = 0; u < p.unary.size(); ++u) push(p.apply(u, x));
    for (Elem g = 0; g < p.size(); ++g) {
      push(p.conjugate(g, x));
      for (std::size_t s = 0; s < p.star.size(); ++s) {
        push(p.op(s, x, g));
        push(p.op(s, g, x));
      }
      if (in[g]) {
        push(p.plus(x, g));
        push(p.plus(g, x));
      }
    }
  }
  std::vector<Elem> elements;
  for (Elem x = 0; x < p.size(); ++x)
    if (in[x]) elements.push_back(x);
  return make_subobject(std::move(parent), std::move(elements), std::move(name));
}

}  // namespace mci
