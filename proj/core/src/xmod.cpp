#include "mci/xmod.hpp"

#include <map>
#include <utility>

#include "checks.hpp"
#include "mci/limits.hpp"
#include "mci/verify.hpp"

namespace mci {

using detail::is_identity;
using detail::reject;
using detail::summarize;
using detail::morphism_line;

namespace {

// Square and equivariance only; the level maps are assumed to be morphisms.
bool compatible(const CrossedModule& a, const CrossedModule& b, const Morphism& mu1, const Morphism& mu0) {
  const std::size_t n1 = a.c1->size(), n0 = a.c0->size();
  for (Elem x = 0; x < n1; ++x)
    if (b.boundary(mu1(x)) != mu0(a.boundary(x))) return false;
  const std::size_t ops = a.action.star.size();
  for (Elem q = 0; q < n0; ++q)
    for (Elem x = 0; x < n1; ++x) {
      if (mu1(a.action.act(q, x)) != b.action.act(mu0(q), mu1(x))) return false;
      for (std::size_t o = 0; o < ops; ++o)
        if (mu1(a.action.left(o, q, x)) != b.action.left(o, mu0(q), mu1(x))) return false;
    }
  return true;
}

DerivedAction diagonal_action(StructurePtr actor, const StructurePtr& carrier,
                              const std::map<std::pair<Elem, Elem>, Elem>& index,
                              const std::vector<std::pair<Elem, Elem>>& pairs, const DerivedAction& left,
                              const DerivedAction& right) {
  DerivedAction act;
  const std::size_t nq = actor->size(), n = carrier->size();
  act.dot = Table(nq, n);
  act.star.assign(left.star.size(), Table(nq, n));
  for (Elem q = 0; q < nq; ++q)
    for (Elem x = 0; x < n; ++x) {
      const auto [p, r] = pairs[x];
      act.dot(q, x) = index.at({left.act(q, p), right.act(q, r)});
      for (std::size_t o = 0; o < act.star.size(); ++o)
        act.star[o](q, x) = index.at({left.left(o, q, p), right.left(o, q, r)});
    }
  act.actor = std::move(actor);
  act.acted = carrier;
  return act;
}

}  // namespace

void CrossedModule::validate_shape() const {
  boundary.validate_shape();
  action.validate_shape();
  if (!c1 || !c0) throw StructuralError("crossed module " + name + " without levels");
  if (!same_structure(*boundary.dom, *c1) || !same_structure(*boundary.cod, *c0))
    throw StructuralError("crossed module " + name + ": boundary is not a map " + c1->name + " -> " + c0->name);
  if (!same_structure(*action.actor, *c0) || !same_structure(*action.acted, *c1))
    throw StructuralError("crossed module " + name + ": action is not an action of " + c0->name + " on " +
                          c1->name);
}

void XModMorphism::validate_shape() const {
  src.validate_shape();
  dst.validate_shape();
  mu1.validate_shape();
  mu0.validate_shape();
  if (!same_structure(*mu1.dom, *src.c1) || !same_structure(*mu1.cod, *dst.c1) ||
      !same_structure(*mu0.dom, *src.c0) || !same_structure(*mu0.cod, *dst.c0))
    throw StructuralError("crossed module morphism " + src.name + " -> " + dst.name +
                          ": level maps have the wrong endpoints");
}

bool same_xmod(const CrossedModule& a, const CrossedModule& b) {
  return same_morphism(a.boundary, b.boundary) && same_action(a.action, b.action);
}

CrossedModule make_xmod(Morphism boundary, DerivedAction action, std::string name) {
  CrossedModule x;
  x.c1 = boundary.dom;
  x.c0 = boundary.cod;
  x.name = name.empty() ? x.c1->name + "_to_" + x.c0->name : std::move(name);
  x.boundary = std::move(boundary);
  x.action = std::move(action);
  x.validate_shape();
  return x;
}

Report verify_xmod(const CrossedModule& x) {
  x.validate_shape();
  Report report("xmod " + x.name);
  report.add(summarize(verify_structure(*x.c1), "c1"));
  report.add(summarize(verify_structure(*x.c0), "c0"));
  report.add(morphism_line(x.boundary, "boundary"));
  report.add(summarize(check_derived_action(x.action), "action"));

  const Structure& C1 = *x.c1;
  const Structure& C0 = *x.c0;
  const auto& d = x.boundary;
  const auto& act = x.action;
  const Domain d1{&C1}, d0{&C0};
  const auto& binary = C1.profile->binary();

  report.add(scan_law("XM1.dot", "", {{"c0", d0}, {"c1", d1}}, [&](auto t) {
    return d(act.act(t[0], t[1])) == C0.conjugate(t[0], d(t[1]));
  }));
  for (std::size_t o = 0; o < binary.size(); ++o)
    report.add(scan_law("XM1.star", binary[o].symbol, {{"c0", d0}, {"c1", d1}}, [&](auto t) {
      return d(act.left(o, t[0], t[1])) == C0.op(o, t[0], d(t[1]));
    }));
  report.add(scan_law("XM2.dot", "", {{"c1", d1}, {"c1'", d1}}, [&](auto t) {
    return act.act(d(t[0]), t[1]) == C1.conjugate(t[0], t[1]);
  }));
  for (std::size_t o = 0; o < binary.size(); ++o)
    report.add(scan_law("XM2.star", binary[o].symbol, {{"c1", d1}, {"c1'", d1}}, [&](auto t) {
      return act.left(o, d(t[0]), t[1]) == C1.op(o, t[0], t[1]);
    }));
  return report;
}

Report verify_xmod_morphism(const XModMorphism& m) {
  m.validate_shape();
  Report report("xmod-morphism " + m.src.name + " -> " + m.dst.name);
  report.add(summarize(verify_xmod(m.src), "src"));
  report.add(summarize(verify_xmod(m.dst), "dst"));
  report.add(morphism_line(m.mu1, "mu1"));
  report.add(morphism_line(m.mu0, "mu0"));

  const Domain d1{m.src.c1.get()}, d0{m.src.c0.get()};
  const auto& a = m.src.action;
  const auto& b = m.dst.action;
  report.add(scan_law("square", "", {{"c1", d1}}, [&](auto t) {
    return m.dst.boundary(m.mu1(t[0])) == m.mu0(m.src.boundary(t[0]));
  }));
  report.add(scan_law("equiv.dot", "", {{"c0", d0}, {"c1", d1}}, [&](auto t) {
    return m.mu1(a.act(t[0], t[1])) == b.act(m.mu0(t[0]), m.mu1(t[1]));
  }));
  const auto& binary = m.src.c1->profile->binary();
  for (std::size_t o = 0; o < binary.size(); ++o)
    report.add(scan_law("equiv.star", binary[o].symbol, {{"c0", d0}, {"c1", d1}}, [&](auto t) {
      return m.mu1(a.left(o, t[0], t[1])) == b.left(o, m.mu0(t[0]), m.mu1(t[1]));
    }));
  return report;
}

XModMorphism identity_xmod_morphism(const CrossedModule& x) {
  return {x, x, identity_morphism(x.c1), identity_morphism(x.c0)};
}

XModMorphism compose(const XModMorphism& g, const XModMorphism& f) {
  if (!same_xmod(f.dst, g.src)) throw StructuralError("cannot compose: " + f.dst.name + " is not " + g.src.name);
  return {f.src, g.dst, compose(g.mu1, f.mu1), compose(g.mu0, f.mu0)};
}

XModProduct xmod_fiber_product(const CrossedModule& a, const CrossedModule& b) {
  if (!same_structure(*a.c0, *b.c0))
    throw StructuralError("fiber product: bases " + a.c0->name + " and " + b.c0->name + " differ");
  Product fp = fiber_product(a.boundary, b.boundary);
  const std::size_t n = fp.object->size();
  std::map<std::pair<Elem, Elem>, Elem> index;
  std::vector<std::pair<Elem, Elem>> pairs(n);
  std::vector<Elem> boundary(n);
  for (Elem x = 0; x < n; ++x) {
    pairs[x] = {fp.pi1(x), fp.pi2(x)};
    index[pairs[x]] = x;
    boundary[x] = a.boundary(fp.pi1(x));
  }
  DerivedAction act = diagonal_action(a.c0, fp.object, index, pairs, a.action, b.action);
  XModProduct out;
  out.object = make_xmod(Morphism{fp.object, a.c0, std::move(boundary)}, std::move(act),
                         a.name + "_x_" + b.name);
  out.pi1 = {out.object, a, fp.pi1, identity_morphism(a.c0)};
  out.pi2 = {out.object, b, fp.pi2, identity_morphism(a.c0)};
  return out;
}

CrossedModule induced_xmod(const XModMorphism& m) {
  const Report r = verify_xmod_morphism(m);
  if (!r.passed()) reject(r, "induced crossed module: input is not a crossed module morphism");
  if (!is_identity(m.mu0)) {
    Check c;
    c.law = "mu0.identity";
    c.passed = false;
    throw PreconditionError("induced crossed module: base component is not the identity", c);
  }
  return make_xmod(m.mu1, pull_back_action(m.src.action, m.dst.boundary),
                   m.src.c1->name + "_over_" + m.dst.c1->name);
}

CrossedModule compose_xmod(const CrossedModule& ab, const CrossedModule& bc, const DerivedAction& act_c) {
  ab.validate_shape();
  bc.validate_shape();
  act_c.validate_shape();
  if (!same_structure(*ab.c0, *bc.c1) || !same_structure(*act_c.actor, *bc.c0) ||
      !same_structure(*act_c.acted, *ab.c1))
    throw StructuralError("compose_xmod: " + ab.name + ", " + bc.name + " and the action do not chain");
  const Domain da{ab.c1.get()}, db{ab.c0.get()};
  Report compat("compatibility");
  compat.add(scan_law("compat.dot", "", {{"b", db}, {"a", da}}, [&](auto t) {
    return act_c.act(bc.boundary(t[0]), t[1]) == ab.action.act(t[0], t[1]);
  }));
  const auto& binary = ab.c1->profile->binary();
  for (std::size_t o = 0; o < binary.size(); ++o)
    compat.add(scan_law("compat.star", binary[o].symbol, {{"b", db}, {"a", da}}, [&](auto t) {
      return act_c.left(o, bc.boundary(t[0]), t[1]) == ab.action.left(o, t[0], t[1]);
    }));
  if (!compat.passed()) reject(compat, "compose_xmod: action of " + bc.c0->name + " is not compatible");
  CrossedModule out = make_xmod(compose(bc.boundary, ab.boundary), act_c, ab.c1->name + "_to_" + bc.c0->name);
  const Report r = verify_xmod(out);
  if (!r.passed()) reject(r, "compose_xmod: composite is not a crossed module");
  return out;
}

XModCone slice_pullback(const XModMorphism& f, const XModMorphism& g) {
  if (!same_xmod(f.dst, g.dst))
    throw StructuralError("slice pullback: " + f.dst.name + " and " + g.dst.name + " differ");
  const CrossedModule& s = f.dst;
  const CrossedModule ip = induced_xmod(f);
  const CrossedModule ir = induced_xmod(g);
  const XModProduct fp = xmod_fiber_product(ip, ir);

  const StructurePtr& carrier = fp.object.c1;
  const std::size_t n = carrier->size();
  std::map<std::pair<Elem, Elem>, Elem> index;
  std::vector<std::pair<Elem, Elem>> pairs(n);
  for (Elem x = 0; x < n; ++x) {
    pairs[x] = {fp.pi1.mu1(x), fp.pi2.mu1(x)};
    index[pairs[x]] = x;
  }
  DerivedAction act_x = diagonal_action(s.c0, carrier, index, pairs, f.src.action, g.src.action);
  XModCone out;
  out.object = compose_xmod(fp.object, s, act_x);
  out.object.name = f.src.name + "_x_" + g.src.name;
  const Morphism id = identity_morphism(s.c0);
  out.legs.push_back({out.object, f.src, fp.pi1.mu1, id});
  out.legs.push_back({out.object, g.src, fp.pi2.mu1, id});
  return out;
}

CrossedModule slice_terminal(StructurePtr x) {
  const std::string name = "terminal_" + x->name;
  return make_xmod(identity_morphism(x), conjugation_action(x), name);
}

CrossedModule slice_initial(StructurePtr x) {
  StructurePtr zero = zero_structure(x->profile);
  const std::string name = "initial_" + x->name;
  return make_xmod(zero_morphism(zero, x), trivial_action(x, zero), name);
}

XModMorphism to_terminal(const CrossedModule& a) {
  return {a, slice_terminal(a.c0), a.boundary, identity_morphism(a.c0)};
}

XModMorphism from_initial(const CrossedModule& a) {
  CrossedModule init = slice_initial(a.c0);
  Morphism mu1 = zero_morphism(init.c1, a.c1);
  return {std::move(init), a, std::move(mu1), identity_morphism(a.c0)};
}

XModCone slice_product(const CrossedModule& a, const CrossedModule& b) {
  if (!same_structure(*a.c0, *b.c0))
    throw StructuralError("slice product: bases " + a.c0->name + " and " + b.c0->name + " differ");
  return slice_pullback(to_terminal(a), to_terminal(b));
}

XModCone xmod_equalizer(const XModMorphism& f, const XModMorphism& g) {
  if (!same_xmod(f.src, g.src) || !same_xmod(f.dst, g.dst))
    throw StructuralError("equalizer: morphisms are not parallel");
  for (const XModMorphism* m : {&f, &g})
    if (const Report r = verify_xmod_morphism(*m); !r.passed())
      reject(r, "equalizer: input is not a crossed module morphism");
  const Subobject e1 = equalizer(f.mu1, g.mu1);
  const Subobject e0 = equalizer(f.mu0, g.mu0);
  const CrossedModule& x = f.src;
  std::vector<Elem> boundary(e1.elements.size());
  for (Elem i = 0; i < boundary.size(); ++i) boundary[i] = *e0.local(x.boundary(e1.elements[i]));
  DerivedAction act;
  act.actor = e0.induced;
  act.acted = e1.induced;
  act.dot = Table(e0.elements.size(), e1.elements.size());
  act.star.assign(x.action.star.size(), act.dot);
  for (Elem q = 0; q < e0.elements.size(); ++q)
    for (Elem k = 0; k < e1.elements.size(); ++k) {
      const Elem c0 = e0.elements[q], c1 = e1.elements[k];
      act.dot(q, k) = *e1.local(x.action.act(c0, c1));
      for (std::size_t o = 0; o < act.star.size(); ++o) act.star[o](q, k) = *e1.local(x.action.left(o, c0, c1));
    }
  XModCone out;
  out.object = make_xmod(Morphism{e1.induced, e0.induced, std::move(boundary)}, std::move(act), "eq_" + x.name);
  out.legs.push_back({out.object, x, e1.embed, e0.embed});
  return out;
}

CrossedModule ideal_inclusion_xmod(const Subobject& ideal, std::string name) {
  if (auto bad = ideal_violation(ideal))
    throw PreconditionError("subobject of " + ideal.parent->name + " is not an ideal (" + bad->id() + ")", *bad);
  return make_xmod(ideal.embed, ideal_action(ideal), std::move(name));
}

void for_each_xmod_morphism(const CrossedModule& a, const CrossedModule& b, HomScope scope,
                            const std::function<bool(const XModMorphism&)>& visit, std::size_t max_size) {
  check_size_guard(*a.c1, max_size, "crossed module morphism enumeration");
  check_size_guard(*a.c0, max_size, "crossed module morphism enumeration");
  std::vector<Morphism> base;
  if (scope == HomScope::OverIdentity) {
    if (!same_structure(*a.c0, *b.c0)) return;
    base.push_back(identity_morphism(a.c0));
  } else {
    base = enumerate_morphisms(a.c0, b.c0, max_size);
  }
  if (base.empty()) return;
  const std::vector<Morphism> top = enumerate_morphisms(a.c1, b.c1, max_size);
  for (const Morphism& mu0 : base)
    for (const Morphism& mu1 : top)
      if (compatible(a, b, mu1, mu0))
        if (!visit(XModMorphism{a, b, mu1, mu0})) return;
}

std::vector<XModMorphism> enumerate_xmod_morphisms(const CrossedModule& a, const CrossedModule& b,
                                                   HomScope scope, std::size_t max_size) {
  std::vector<XModMorphism> out;
  for_each_xmod_morphism(
      a, b, scope,
      [&](const XModMorphism& m) {
        out.push_back(m);
        return true;
      },
      max_size);
  return out;
}

std::optional<XModMorphism> find_xmod_isomorphism(const CrossedModule& a, const CrossedModule& b,
                                                  std::size_t max_size) {
  if (a.c1->size() != b.c1->size() || a.c0->size() != b.c0->size()) return std::nullopt;
  std::optional<XModMorphism> found;
  for_each_xmod_morphism(
      a, b, HomScope::All,
      [&](const XModMorphism& m) {
        if (!is_bijective(m.mu1) || !is_bijective(m.mu0)) return true;
        const Morphism inv1 = *inverse(m.mu1), inv0 = *inverse(m.mu0);
        if (!is_morphism(inv1) || !is_morphism(inv0) || !compatible(b, a, inv1, inv0)) return true;
        found = m;
        return false;
      },
      max_size);
  return found;
}

}  // namespace mci
