#include "mci/zoo.hpp"

#include <algorithm>
#include <string>

namespace mci::zoo {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

// "2x^3"-style monomial with coefficient c of x^i; empty when c = 0.
std::string monomial(unsigned c, const std::string& var, bool power_suffix, unsigned i) {
  if (c == 0) return {};
  std::string v = var;
  if (power_suffix && i > 1) v += "^" + std::to_string(i);
  if (v.empty()) return std::to_string(c);
  return c == 1 ? v : std::to_string(c) + v;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.empty()) continue;
    if (!out.empty()) out += "+";
    out += t;
  }
  return out.empty() ? "0" : out;
}

// A vector space F_p^dim with coordinates at index sum c_i p^i.
struct Coords {
  unsigned p;
  unsigned dim;
  std::size_t size() const {
    std::size_t n = 1;
    for (unsigned i = 0; i < dim; ++i) n *= p;
    return n;
  }
  std::vector<unsigned> split(Elem x) const {
    std::vector<unsigned> c(dim);
    for (unsigned i = 0; i < dim; ++i, x /= p) c[i] = x % p;
    return c;
  }
  Elem join(const std::vector<unsigned>& c) const {
    Elem x = 0;
    for (unsigned i = dim; i-- > 0;) x = x * p + c[i] % p;
    return x;
  }
};

// Additive group and scalar unaries of F_p^dim; stars left zero.
Structure vector_space(ProfilePtr profile, std::string name, const Coords& v,
                       const std::function<std::string(const std::vector<unsigned>&)>& label) {
  const std::size_t n = v.size();
  Structure s;
  s.profile = std::move(profile);
  s.name = std::move(name);
  s.zero = 0;
  s.add = Table(n, n);
  s.neg.resize(n);
  s.star.assign(s.profile->binary().size(), Table(n, n, 0));
  s.unary.assign(s.profile->unary().size(), UnaryTable(n));
  for (Elem x = 0; x < n; ++x) {
    const auto cx = v.split(x);
    s.elements.push_back(label(cx));
    std::vector<unsigned> neg(v.dim);
    for (unsigned i = 0; i < v.dim; ++i) neg[i] = (v.p - cx[i]) % v.p;
    s.neg[x] = v.join(neg);
    for (unsigned k = 0; k < s.unary.size(); ++k) {
      std::vector<unsigned> scaled(v.dim);
      for (unsigned i = 0; i < v.dim; ++i) scaled[i] = k * cx[i];
      s.unary[k][x] = v.join(scaled);
    }
    for (Elem y = 0; y < n; ++y) {
      const auto cy = v.split(y);
      std::vector<unsigned> sum(v.dim);
      for (unsigned i = 0; i < v.dim; ++i) sum[i] = cx[i] + cy[i];
      s.add(x, y) = v.join(sum);
    }
  }
  return s;
}

// Fills the primary star `op` from a bilinear formula and the opposites.
void set_star(Structure& s, std::size_t op, const Coords& v,
              const std::function<std::vector<unsigned>(const std::vector<unsigned>&, const std::vector<unsigned>&)>& f) {
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y) s.star[op](x, y) = v.join(f(v.split(x), v.split(y)));
}

bool is_prime_in(unsigned p, std::initializer_list<unsigned> allowed) {
  return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
}

}  // namespace

StructurePtr make_cyclic(unsigned n) {
  require(n >= 1 && n <= kConstructionSizeGuard, "make_cyclic: n must lie in 1.." + std::to_string(kConstructionSizeGuard));
  Structure s;
  s.profile = group_profile();
  s.name = "Z" + std::to_string(n);
  s.add = Table(n, n);
  s.neg.resize(n);
  for (Elem x = 0; x < n; ++x) {
    s.elements.push_back(std::to_string(x));
    s.neg[x] = (n - x) % n;
    for (Elem y = 0; y < n; ++y) s.add(x, y) = (x + y) % n;
  }
  return freeze(std::move(s));
}

StructurePtr make_symmetric3() {
  // r^i s^j at index 3j + i; (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l).
  Structure s;
  s.profile = group_profile();
  s.name = "S3";
  s.elements = {"e", "r", "r2", "s", "rs", "r2s"};
  s.add = Table(6, 6);
  s.neg.resize(6);
  for (Elem x = 0; x < 6; ++x) {
    const unsigned i = x % 3, j = x / 3;
    for (Elem y = 0; y < 6; ++y) {
      const unsigned k = y % 3, l = y / 3;
      const unsigned ri = (j == 0 ? i + k : i + 3 - k) % 3;
      s.add(x, y) = 3 * ((j + l) % 2) + ri;
    }
  }
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      if (s.add(x, y) == 0) s.neg[x] = y;
  return freeze(std::move(s));
}

StructurePtr make_truncated_poly(unsigned p, unsigned k) {
  require(is_prime_in(p, {2, 3, 5}), "make_truncated_poly: p must be 2, 3 or 5");
  const Coords v{p, k};
  require(k >= 1 && v.size() <= kConstructionSizeGuard, "make_truncated_poly: carrier exceeds the size guard");
  std::string name = k == 1 ? "F" + std::to_string(p) : "F" + std::to_string(p) + "x" + std::to_string(k);
  Structure s = vector_space(comm_algebra_profile(p), std::move(name), v, [&](const std::vector<unsigned>& c) {
    std::vector<std::string> terms;
    for (unsigned i = 0; i < k; ++i) terms.push_back(monomial(c[i], i == 0 ? "" : "x", true, i));
    return join_terms(terms);
  });
  set_star(s, 0, v, [&](const auto& a, const auto& b) {
    std::vector<unsigned> c(k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; i + j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
  });
  return freeze(std::move(s));
}

StructurePtr make_lie2(unsigned p) {
  require(is_prime_in(p, {3, 5}), "make_lie2: p must be 3 or 5");
  const Coords v{p, 2};
  auto label = [](const std::vector<unsigned>& c) {
    return join_terms({monomial(c[0], "e1", false, 0), monomial(c[1], "e2", false, 0)});
  };
  Structure s = vector_space(lie_profile(p), "L" + std::to_string(p), v, label);
  // [a e1 + b e2, c e1 + d e2] = (ad - bc) e1
  set_star(s, 0, v, [&](const auto& x, const auto& y) {
    const unsigned det = (x[0] * y[1] + p * p - x[1] * y[0]) % p;
    return std::vector<unsigned>{det, 0};
  });
  s.fill_opposites();
  return freeze(std::move(s));
}

StructurePtr make_leibniz2(unsigned p) {
  require(is_prime_in(p, {2, 3}), "make_leibniz2: p must be 2 or 3");
  const Coords v{p, 2};
  auto label = [](const std::vector<unsigned>& c) {
    return join_terms({monomial(c[0], "a", false, 0), monomial(c[1], "b", false, 0)});
  };
  Structure s = vector_space(leibniz_profile(p), "Lb" + std::to_string(p), v, label);
  set_star(s, 0, v, [&](const auto& x, const auto& y) { return std::vector<unsigned>{0, x[0] * y[0] % p}; });
  s.fill_opposites();
  return freeze(std::move(s));
}

StructurePtr make_dialgebra(unsigned p) {
  require(p == 2, "make_dialgebra: p must be 2");
  const Coords v{p, 2};
  Structure s = vector_space(dialgebra_profile(p), "D2", v, [&](const std::vector<unsigned>& c) {
    return join_terms({monomial(c[0], "", true, 0), monomial(c[1], "x", true, 1)});
  });
  auto product = [&](const auto& a, const auto& b) {
    return std::vector<unsigned>{a[0] * b[0] % p, (a[0] * b[1] + a[1] * b[0]) % p};
  };
  set_star(s, *s.profile->binary_index("dl"), v, product);
  set_star(s, *s.profile->binary_index("dr"), v, product);
  s.fill_opposites();
  return freeze(std::move(s));
}

std::vector<StructurePtr> standard_structures() {
  return {make_cyclic(1),          make_cyclic(2),         make_cyclic(3),          make_cyclic(4),
          make_cyclic(6),          make_symmetric3(),      make_truncated_poly(2),  make_truncated_poly(3),
          make_truncated_poly(5, 1), make_lie2(3),         make_lie2(5),            make_leibniz2(2),
          make_leibniz2(3),        make_dialgebra(2)};
}

namespace {

CrossedModule ideal_xmod(const StructurePtr& r, const std::vector<std::string>& generators, std::string name) {
  std::vector<Elem> ids;
  for (const auto& g : generators) ids.push_back(*r->find(g));
  return ideal_inclusion_xmod(ideal_closure(r, ids, name + "_c1"), std::move(name));
}

}  // namespace

std::vector<CrossedModule> standard_xmods() {
  std::vector<CrossedModule> out;
  const auto z2 = make_cyclic(2), z4 = make_cyclic(4);
  out.push_back(make_xmod(Morphism{z2, z4, {0, 2}}, trivial_action(z4, z2), "z2_z4"));
  out.push_back(ideal_xmod(make_truncated_poly(2), {"x"}, "ideal_f2"));
  out.push_back(ideal_xmod(make_truncated_poly(3), {"x"}, "ideal_f3"));
  out.push_back(ideal_xmod(make_lie2(3), {"e1"}, "ideal_lie3"));
  out.push_back(ideal_xmod(make_leibniz2(2), {"b"}, "ideal_leibniz2"));
  out.push_back(ideal_xmod(make_leibniz2(3), {"b"}, "ideal_leibniz3"));
  out.push_back(ideal_xmod(make_dialgebra(2), {"x"}, "ideal_dialgebra2"));
  out.push_back(ideal_xmod(make_symmetric3(), {"r"}, "a3_s3"));
  CrossedModule terminal = slice_terminal(z4);
  terminal.name = "terminal_z4";
  out.push_back(std::move(terminal));
  CrossedModule initial = slice_initial(z4);
  initial.name = "initial_z4";
  out.push_back(std::move(initial));
  return out;
}

std::vector<Cat1Object> standard_cat1s() {
  std::vector<Cat1Object> out;
  for (const auto& x : standard_xmods()) out.push_back(xmod_to_cat1(x));
  out.push_back(identity_cat1(make_cyclic(4), "id_z4"));
  return out;
}

std::vector<CrossedModule> slice_testers(const StructurePtr& x, std::size_t max_size) {
  std::vector<CrossedModule> out;
  if (x->size() > max_size) return out;
  std::vector<std::vector<Elem>> seen;
  std::vector<Subobject> ideals;
  for (Elem g = 0; g < x->size(); ++g) {
    const std::vector<Elem> gens{g};
    Subobject n = ideal_closure(x, gens, x->name + "_gen_" + x->label(g));
    if (std::find(seen.begin(), seen.end(), n.elements) != seen.end()) continue;
    seen.push_back(n.elements);
    ideals.push_back(std::move(n));
  }
  std::sort(ideals.begin(), ideals.end(),
            [](const Subobject& a, const Subobject& b) { return a.elements.size() < b.elements.size() ||
                                                                (a.elements.size() == b.elements.size() && a.elements < b.elements); });
  auto keep = [&](CrossedModule c) {
    if (!verify_xmod(c).passed()) return;
    for (const auto& o : out)
      if (same_xmod(o, c)) return;
    c.name = "t" + std::to_string(out.size()) + "_" + x->name;
    out.push_back(std::move(c));
  };
  for (const auto& n : ideals) {
    const StructurePtr top = n.elements.size() == x->size() ? x : n.induced;
    for (const Morphism& d : enumerate_morphisms(top, x, max_size)) {
      keep(make_xmod(d, trivial_action(x, top)));
      keep(make_xmod(d, n.elements.size() == x->size() ? conjugation_action(x) : ideal_action(n)));
    }
  }
  return out;
}

}  // namespace mci::zoo
