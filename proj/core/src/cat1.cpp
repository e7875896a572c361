#include "mci/cat1.hpp"

#include <utility>

#include "checks.hpp"
#include "mci/verify.hpp"

namespace mci {

using detail::morphism_line;
using detail::summarize;

void Cat1Object::validate_shape() const {
  if (!big || !base) throw StructuralError("cat1-object " + name + " without structures");
  embed.validate_shape();
  source.validate_shape();
  target.validate_shape();
  if (!same_structure(*embed.dom, *base) || !same_structure(*embed.cod, *big))
    throw StructuralError("cat1-object " + name + ": e is not a map " + base->name + " -> " + big->name);
  for (const Morphism* f : {&source, &target})
    if (!same_structure(*f->dom, *big) || !same_structure(*f->cod, *base))
      throw StructuralError("cat1-object " + name + ": s and t must map " + big->name + " -> " + base->name);
}

void Cat1Morphism::validate_shape() const {
  src.validate_shape();
  dst.validate_shape();
  phi.validate_shape();
  phi_base.validate_shape();
  if (!same_structure(*phi.dom, *src.big) || !same_structure(*phi.cod, *dst.big) ||
      !same_structure(*phi_base.dom, *src.base) || !same_structure(*phi_base.cod, *dst.base))
    throw StructuralError("cat1-morphism " + src.name + " -> " + dst.name + ": components have the wrong endpoints");
}

bool same_cat1(const Cat1Object& a, const Cat1Object& b) {
  return same_morphism(a.embed, b.embed) && same_morphism(a.source, b.source) &&
         same_morphism(a.target, b.target);
}

Cat1Object identity_cat1(StructurePtr s, std::string name) {
  Cat1Object c;
  c.name = name.empty() ? "id_" + s->name : std::move(name);
  c.big = s;
  c.base = s;
  c.embed = identity_morphism(s);
  c.source = c.embed;
  c.target = c.embed;
  return c;
}

Report verify_cat1(const Cat1Object& c) {
  c.validate_shape();
  if (!is_injective(c.embed)) throw StructuralError("cat1-object " + c.name + ": e is not injective");
  Report report("cat1 " + c.name);
  report.add(summarize(verify_structure(*c.big), "big"));
  report.add(summarize(verify_structure(*c.base), "base"));
  report.add(morphism_line(c.embed, "embed"));
  report.add(morphism_line(c.source, "source"));
  report.add(morphism_line(c.target, "target"));

  const Structure& R = *c.big;
  const Domain dr{&R}, ds{c.base.get()};
  report.add(scan_law("section.source", "", {{"q", ds}}, [&](auto t) { return c.source(c.embed(t[0])) == t[0]; }));
  report.add(scan_law("section.target", "", {{"q", ds}}, [&](auto t) { return c.target(c.embed(t[0])) == t[0]; }));
  const Elem zs = c.base->zero;
  auto in_kernels = [&](auto t) { return c.source(t[0]) == zs && c.target(t[1]) == zs; };
  const auto& binary = R.profile->binary();
  for (std::size_t o = 0; o < binary.size(); ++o)
    report.add(scan_law("kernel.star", binary[o].symbol, {{"x", dr}, {"y", dr}},
                        [&](auto t) { return !in_kernels(t) || R.op(o, t[0], t[1]) == R.zero; }));
  report.add(scan_law("kernel.commutator", "", {{"x", dr}, {"y", dr}}, [&](auto t) {
    return !in_kernels(t) || R.plus(R.plus(t[0], t[1]), R.plus(R.minus(t[0]), R.minus(t[1]))) == R.zero;
  }));
  return report;
}

Report verify_cat1_morphism(const Cat1Morphism& m) {
  m.validate_shape();
  Report report("cat1-morphism " + m.src.name + " -> " + m.dst.name);
  report.add(summarize(verify_cat1(m.src), "src"));
  report.add(summarize(verify_cat1(m.dst), "dst"));
  report.add(morphism_line(m.phi, "phi"));
  report.add(morphism_line(m.phi_base, "phi_base"));
  const Domain dr{m.src.big.get()}, ds{m.src.base.get()};
  report.add(scan_law("square.source", "", {{"r", dr}},
                      [&](auto t) { return m.dst.source(m.phi(t[0])) == m.phi_base(m.src.source(t[0])); }));
  report.add(scan_law("square.target", "", {{"r", dr}},
                      [&](auto t) { return m.dst.target(m.phi(t[0])) == m.phi_base(m.src.target(t[0])); }));
  report.add(scan_law("square.embed", "", {{"q", ds}},
                      [&](auto t) { return m.phi(m.src.embed(t[0])) == m.dst.embed(m.phi_base(t[0])); }));
  return report;
}

Cat1Morphism identity_cat1_morphism(const Cat1Object& c) {
  return {c, c, identity_morphism(c.big), identity_morphism(c.base)};
}

Cat1Morphism compose(const Cat1Morphism& g, const Cat1Morphism& f) {
  if (!same_cat1(f.dst, g.src)) throw StructuralError("cannot compose: " + f.dst.name + " is not " + g.src.name);
  return {f.src, g.dst, compose(g.phi, f.phi), compose(g.phi_base, f.phi_base)};
}

Cat1Object xmod_to_cat1(const CrossedModule& x) {
  x.validate_shape();
  SemidirectProduct sd = semidirect_product(x.action);
  const std::size_t n = sd.object->size(), n0 = x.c0->size();
  std::vector<Elem> target(n);
  for (Elem r = 0; r < n; ++r) {
    const Elem c1 = static_cast<Elem>(r / n0), c0 = static_cast<Elem>(r % n0);
    target[r] = x.c0->plus(x.boundary(c1), c0);
  }
  Cat1Object c;
  c.name = x.name + "_cat1";
  c.big = sd.object;
  c.base = x.c0;
  c.embed = std::move(sd.section);
  c.source = std::move(sd.project);
  c.target = Morphism{c.big, c.base, std::move(target)};
  return c;
}

CrossedModule cat1_to_xmod(const Cat1Object& c) {
  c.validate_shape();
  const Subobject ker = kernel(c.source);
  const Structure& R = *c.big;
  const std::size_t nk = ker.elements.size(), nq = c.base->size();
  std::vector<Elem> boundary(nk);
  for (Elem k = 0; k < nk; ++k) boundary[k] = c.target(ker.elements[k]);

  auto inside = [&](Elem v, const char* law, Elem q, Elem k) {
    auto local = ker.local(v);
    if (!local) {
      Check fail;
      fail.law = law;
      fail.passed = false;
      fail.tuple = {q, k};
      fail.witness = {{"q", c.base->label(q)}, {"k", ker.induced->label(k)}};
      throw PreconditionError("cat1-object " + c.name + ": action leaves ker s", fail);
    }
    return *local;
  };
  DerivedAction act;
  act.actor = c.base;
  act.acted = ker.induced;
  act.dot = Table(nq, nk);
  act.star.assign(R.star.size(), Table(nq, nk));
  for (Elem q = 0; q < nq; ++q) {
    const Elem e = c.embed(q);
    for (Elem k = 0; k < nk; ++k) {
      const Elem x = ker.elements[k];
      act.dot(q, k) = inside(R.conjugate(e, x), "kernel.dot", q, k);
      for (std::size_t o = 0; o < R.star.size(); ++o) act.star[o](q, k) = inside(R.op(o, e, x), "kernel.star", q, k);
    }
  }
  return make_xmod(Morphism{ker.induced, c.base, std::move(boundary)}, std::move(act), c.name + "_xmod");
}

Cat1Morphism xmod_morphism_to_cat1(const XModMorphism& m) {
  m.validate_shape();
  Cat1Object a = xmod_to_cat1(m.src);
  Cat1Object b = xmod_to_cat1(m.dst);
  const std::size_t n0 = m.src.c0->size(), m0 = m.dst.c0->size();
  std::vector<Elem> phi(a.big->size());
  for (Elem r = 0; r < phi.size(); ++r) {
    const Elem c1 = static_cast<Elem>(r / n0), c0 = static_cast<Elem>(r % n0);
    phi[r] = static_cast<Elem>(m.mu1(c1) * m0 + m.mu0(c0));
  }
  Morphism phi_map{a.big, b.big, std::move(phi)};
  return {std::move(a), std::move(b), std::move(phi_map), m.mu0};
}

namespace {

bool squares_commute(const Cat1Object& a, const Cat1Object& b, const Morphism& phi, const Morphism& phi_base) {
  for (Elem r = 0; r < a.big->size(); ++r) {
    if (b.source(phi(r)) != phi_base(a.source(r))) return false;
    if (b.target(phi(r)) != phi_base(a.target(r))) return false;
  }
  for (Elem q = 0; q < a.base->size(); ++q)
    if (phi(a.embed(q)) != b.embed(phi_base(q))) return false;
  return true;
}

template <class Visit>
void for_each_cat1_morphism(const Cat1Object& a, const Cat1Object& b, std::size_t max_size, Visit visit) {
  a.validate_shape();
  b.validate_shape();
  for_each_morphism(
      a.big, b.big,
      [&](const Morphism& phi) {
        Morphism phi_base = compose(b.source, compose(phi, a.embed));
        if (!squares_commute(a, b, phi, phi_base)) return true;
        return visit(phi, std::move(phi_base));
      },
      max_size);
}

}  // namespace

std::vector<Cat1Morphism> enumerate_cat1_morphisms(const Cat1Object& a, const Cat1Object& b, std::size_t max_size) {
  std::vector<Cat1Morphism> out;
  for_each_cat1_morphism(a, b, max_size, [&](const Morphism& phi, Morphism phi_base) {
    out.push_back({a, b, phi, std::move(phi_base)});
    return true;
  });
  return out;
}

std::optional<Cat1Morphism> find_cat1_isomorphism(const Cat1Object& a, const Cat1Object& b, std::size_t max_size) {
  if (a.big->size() != b.big->size() || a.base->size() != b.base->size()) return std::nullopt;
  std::optional<Cat1Morphism> found;
  for_each_cat1_morphism(a, b, max_size, [&](const Morphism& phi, Morphism phi_base) {
    if (!is_bijective(phi) || !is_bijective(phi_base)) return true;
    const Morphism inv = *inverse(phi), inv_base = *inverse(phi_base);
    if (!is_morphism(inv) || !is_morphism(inv_base) || !squares_commute(b, a, inv, inv_base)) return true;
    found = Cat1Morphism{a, b, phi, std::move(phi_base)};
    return false;
  });
  return found;
}

Report roundtrip_check(const CrossedModule& x, std::size_t max_size) {
  check_size_guard(*x.c1, max_size, "roundtrip");
  check_size_guard(*x.c0, max_size, "roundtrip");
  Report report("roundtrip " + x.name);
  const CrossedModule back = cat1_to_xmod(xmod_to_cat1(x));
  report.note("roundtrip.xmod", find_xmod_isomorphism(back, x, max_size).has_value());
  return report;
}

Report roundtrip_check(const Cat1Object& c, std::size_t max_size) {
  check_size_guard(*c.big, max_size, "roundtrip");
  Report report("roundtrip " + c.name);
  const Cat1Object back = xmod_to_cat1(cat1_to_xmod(c));
  report.note("roundtrip.cat1", find_cat1_isomorphism(back, c, max_size).has_value());
  return report;
}

}  // namespace mci
