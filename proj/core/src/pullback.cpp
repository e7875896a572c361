#include "mci/pullback.hpp"

#include <map>
#include <utility>

#include "checks.hpp"
#include "mci/limits.hpp"

namespace mci {

using detail::is_identity;
using detail::reject;
using detail::summarize;

PullbackXMod pullback_xmod(const CrossedModule& p, const Morphism& phi) {
  p.validate_shape();
  phi.validate_shape();
  if (!same_structure(*phi.cod, *p.c0))
    throw StructuralError("pullback: " + phi.cod->name + " is not the base " + p.c0->name);
  const Product fp = fiber_product(p.boundary, phi);
  const Structure& S = *phi.dom;
  const std::size_t n = fp.object->size(), ns = S.size();
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (Elem x = 0; x < n; ++x) index[{fp.pi1(x), fp.pi2(x)}] = x;

  DerivedAction act;
  act.actor = phi.dom;
  act.acted = fp.object;
  act.dot = Table(ns, n);
  act.star.assign(p.action.star.size(), Table(ns, n));
  for (Elem t = 0; t < ns; ++t)
    for (Elem x = 0; x < n; ++x) {
      const Elem a = fp.pi1(x), s = fp.pi2(x);
      act.dot(t, x) = index.at({p.action.act(phi(t), a), S.conjugate(t, s)});
      for (std::size_t o = 0; o < act.star.size(); ++o)
        act.star[o](t, x) = index.at({p.action.left(o, phi(t), a), S.op(o, t, s)});
    }
  PullbackXMod out;
  out.object = make_xmod(fp.pi2, std::move(act), p.name + "_along_" + S.name);
  out.projection = {out.object, p, fp.pi1, phi};
  return out;
}

XModMediator xmod_pullback_mediator(const Morphism& f, const CrossedModule& mu, const Morphism& phi,
                                    const CrossedModule& p, std::size_t max_size) {
  const XModMorphism cone{mu, p, f, phi};
  if (const Report r = verify_xmod_morphism(cone); !r.passed())
    reject(r, "pullback mediator: (f, phi) is not a crossed module morphism");
  const PullbackXMod pb = pullback_xmod(p, phi);
  const CrossedModule& target = pb.object;

  std::map<std::pair<Elem, Elem>, Elem> index;
  for (Elem x = 0; x < target.c1->size(); ++x) index[{pb.projection.mu1(x), target.boundary(x)}] = x;
  std::vector<Elem> map(mu.c1->size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = index.at({f(x), mu.boundary(x)});

  XModMediator out;
  out.mediator = {mu, target, Morphism{mu.c1, target.c1, std::move(map)}, identity_morphism(mu.c0)};
  out.report = Report("pullback mediator " + mu.name + " -> " + target.name);
  out.report.add(summarize(verify_xmod_morphism(out.mediator), "mediator"));
  const Domain dx{mu.c1.get()};
  const Morphism& fs = out.mediator.mu1;
  out.report.add(scan_law("composite.boundary", "", {{"x", dx}},
                          [&](auto t) { return target.boundary(fs(t[0])) == mu.boundary(t[0]); }));
  out.report.add(scan_law("composite.projection", "", {{"x", dx}},
                          [&](auto t) { return pb.projection.mu1(fs(t[0])) == f(t[0]); }));
  for_each_xmod_morphism(
      mu, target, HomScope::OverIdentity,
      [&](const XModMorphism& g) {
        if (compose(pb.projection.mu1, g.mu1).map == f.map && compose(target.boundary, g.mu1).map == mu.boundary.map)
          ++out.count;
        return true;
      },
      max_size);
  out.report.note("unique", out.count == 1, "count " + std::to_string(out.count));
  return out;
}

CrossedModule preimage_xmod(const Subobject& ideal, const Morphism& phi) {
  const CrossedModule incl = ideal_inclusion_xmod(ideal);
  CrossedModule out = pullback_xmod(incl, phi).object;
  out.name = "preimage_" + incl.name;
  return out;
}

XModMorphism pullback_xmod_morphism(const XModMorphism& m, const Morphism& phi) {
  m.validate_shape();
  if (!is_identity(m.mu0)) {
    Check c;
    c.law = "mu0.identity";
    c.passed = false;
    throw PreconditionError("pullback of a morphism: base component is not the identity", c);
  }
  const PullbackXMod a = pullback_xmod(m.src, phi);
  const PullbackXMod b = pullback_xmod(m.dst, phi);
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (Elem x = 0; x < b.object.c1->size(); ++x) index[{b.projection.mu1(x), b.object.boundary(x)}] = x;
  std::vector<Elem> map(a.object.c1->size());
  for (Elem x = 0; x < map.size(); ++x) {
    auto it = index.find({m.mu1(a.projection.mu1(x)), a.object.boundary(x)});
    if (it == index.end()) {
      Check c;
      c.law = "pullback.morphism";
      c.passed = false;
      c.tuple = {x};
      c.witness = {{"x", a.object.c1->label(x)}};
      throw PreconditionError("pullback of a morphism leaves the target carrier", c);
    }
    map[x] = it->second;
  }
  return {a.object, b.object, Morphism{a.object.c1, b.object.c1, std::move(map)}, identity_morphism(phi.dom)};
}

PullbackCat1 pullback_cat1(const Cat1Object& c, const Morphism& phi) {
  c.validate_shape();
  phi.validate_shape();
  if (!same_structure(*phi.cod, *c.base))
    throw StructuralError("pullback: " + phi.cod->name + " is not the base " + c.base->name);
  const StructurePtr& Q = phi.dom;
  const std::vector<StructurePtr> factors{Q, c.big, Q};
  TupleProduct tp = tuple_product(
      factors,
      [&](std::span<const Elem> t) { return phi(t[0]) == c.source(t[1]) && phi(t[2]) == c.target(t[1]); },
      c.name + "_along_" + Q->name);
  std::vector<Elem> embed(Q->size());
  for (Elem q = 0; q < embed.size(); ++q) {
    const std::vector<Elem> t{q, c.embed(phi(q)), q};
    embed[q] = *tp.index_of(t);
  }
  PullbackCat1 out;
  out.object.name = tp.object->name;
  out.object.big = tp.object;
  out.object.base = Q;
  out.object.embed = Morphism{Q, tp.object, std::move(embed)};
  out.object.source = tp.projections[0];
  out.object.target = tp.projections[2];
  out.projection = {out.object, c, tp.projections[1], phi};
  return out;
}

Cat1Mediator cat1_pullback_mediator(const Cat1Morphism& varphi, const PullbackCat1& target, std::size_t max_size) {
  if (!same_cat1(varphi.dst, target.projection.dst) || !same_morphism(varphi.phi_base, target.projection.phi_base))
    throw StructuralError("pullback mediator: target was not pulled back along this morphism");
  if (const Report r = verify_cat1_morphism(varphi); !r.passed())
    reject(r, "pullback mediator: input is not a cat1-morphism");
  const Cat1Object& test = varphi.src;
  const Cat1Object& pb = target.object;
  std::vector<Elem> psi(test.big->size());
  std::map<std::vector<Elem>, Elem> index;
  for (Elem x = 0; x < pb.big->size(); ++x)
    index[{pb.source(x), target.projection.phi(x), pb.target(x)}] = x;
  for (Elem p = 0; p < psi.size(); ++p) psi[p] = index.at({test.source(p), varphi.phi(p), test.target(p)});

  Cat1Mediator out;
  out.mediator = {test, pb, Morphism{test.big, pb.big, std::move(psi)}, identity_morphism(test.base)};
  out.report = Report("cat1 pullback mediator " + test.name + " -> " + pb.name);
  out.report.add(summarize(verify_cat1_morphism(out.mediator), "mediator"));
  const Domain dp{test.big.get()};
  out.report.add(scan_law("composite.projection", "", {{"p", dp}}, [&](auto t) {
    return target.projection.phi(out.mediator.phi(t[0])) == varphi.phi(t[0]);
  }));
  for (const Cat1Morphism& g : enumerate_cat1_morphisms(test, pb, max_size))
    if (is_identity(g.phi_base) && compose(target.projection.phi, g.phi).map == varphi.phi.map) ++out.count;
  out.report.note("unique", out.count == 1, "count " + std::to_string(out.count));
  return out;
}

SquareResult square_commutes(const CrossedModule& x, const Morphism& phi, std::size_t max_size) {
  SquareResult out;
  out.via_xmod = xmod_to_cat1(pullback_xmod(x, phi).object);
  out.via_cat1 = pullback_cat1(xmod_to_cat1(x), phi).object;
  check_size_guard(*out.via_xmod.big, max_size, "square check");
  check_size_guard(*out.via_cat1.big, max_size, "square check");
  out.report = Report("square " + x.name + " along " + phi.dom->name);
  out.iso = find_cat1_isomorphism(out.via_xmod, out.via_cat1, max_size);
  out.report.note("square.iso", out.iso.has_value(),
                  out.via_xmod.name + " ~ " + out.via_cat1.name);
  return out;
}

}  // namespace mci
