#include "mci/action.hpp"

#include <utility>

#include "mci/verify.hpp"

namespace mci {

void DerivedAction::validate_shape() const {
  if (!actor || !acted) throw StructuralError("action without structures");
  if (!same_profile(*actor, *acted))
    throw StructuralError("action of " + actor->name + " on " + acted->name + ": profiles differ");
  const std::size_t nb = actor->size(), na = acted->size();
  auto check = [&](const Table& t, const std::string& what) {
    if (t.rows() != nb || t.cols() != na)
      throw StructuralError("action table " + what + " is not " + std::to_string(nb) + "x" +
                            std::to_string(na));
    for (Elem v : t.values())
      if (v >= na) throw StructuralError("action table " + what + " has an entry outside " + acted->name);
  };
  check(dot, "dot");
  if (star.size() != actor->profile->binary().size())
    throw StructuralError("action needs one star table per binary symbol");
  for (std::size_t s = 0; s < star.size(); ++s) check(star[s], actor->profile->binary()[s].symbol);
}

bool same_action(const DerivedAction& x, const DerivedAction& y) {
  return same_structure(*x.actor, *y.actor) && same_structure(*x.acted, *y.acted) && x.dot == y.dot &&
         x.star == y.star;
}

DerivedAction trivial_action(StructurePtr actor, StructurePtr acted) {
  DerivedAction act;
  act.dot = Table(actor->size(), acted->size());
  for (Elem b = 0; b < actor->size(); ++b)
    for (Elem a = 0; a < acted->size(); ++a) act.dot(b, a) = a;
  act.star.assign(actor->profile->binary().size(), Table(actor->size(), acted->size(), acted->zero));
  act.actor = std::move(actor);
  act.acted = std::move(acted);
  return act;
}

DerivedAction conjugation_action(StructurePtr s) {
  const std::size_t n = s->size();
  DerivedAction act;
  act.dot = Table(n, n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) act.dot(x, y) = s->conjugate(x, y);
  act.star = s->star;
  act.actor = s;
  act.acted = std::move(s);
  return act;
}

DerivedAction ideal_action(const Subobject& ideal) {
  const Structure& r = *ideal.parent;
  DerivedAction act;
  act.actor = ideal.parent;
  act.acted = ideal.induced;
  act.dot = Table(r.size(), ideal.elements.size());
  act.star.assign(r.star.size(), Table(r.size(), ideal.elements.size()));
  for (Elem g = 0; g < r.size(); ++g) {
    for (Elem i = 0; i < ideal.elements.size(); ++i) {
      const Elem x = ideal.elements[i];
      auto inside = [&](Elem v, const char* law) {
        auto local = ideal.local(v);
        if (!local) {
          Check c;
          c.law = law;
          c.passed = false;
          c.tuple = {g, x};
          throw PreconditionError("subobject of " + r.name + " is not an ideal", c);
        }
        return *local;
      };
      act.dot(g, i) = inside(r.conjugate(g, x), "ideal.normal");
      for (std::size_t s = 0; s < r.star.size(); ++s) act.star[s](g, i) = inside(r.op(s, g, x), "ideal.left");
    }
  }
  return act;
}

DerivedAction action_from_section(const Morphism& p, const Subobject& i, const Morphism& sec) {
  p.validate_shape();
  sec.validate_shape();
  if (!same_structure(*i.parent, *p.dom) || !same_structure(*sec.cod, *p.dom) ||
      !same_structure(*sec.dom, *p.cod))
    throw StructuralError("split extension: endpoints of p, i and the section do not match");
  const Subobject ker = kernel(p);
  if (ker.elements != i.elements) {
    Check c;
    c.law = "extension.kernel";
    c.passed = false;
    throw PreconditionError("A is not the kernel of p", c);
  }
  const Structure& e = *p.dom;
  const Structure& b = *p.cod;
  for (Elem x = 0; x < b.size(); ++x) {
    if (p(sec(x)) != x) {
      Check c;
      c.law = "extension.section";
      c.passed = false;
      c.tuple = {x};
      c.witness = {{"b", b.label(x)}};
      throw PreconditionError("p after the section is not the identity", c);
    }
  }
  DerivedAction act;
  act.actor = p.cod;
  act.acted = i.induced;
  act.dot = Table(b.size(), i.elements.size());
  act.star.assign(e.star.size(), Table(b.size(), i.elements.size()));
  for (Elem y = 0; y < b.size(); ++y) {
    const Elem s = sec(y);
    for (Elem k = 0; k < i.elements.size(); ++k) {
      const Elem a = i.elements[k];
      auto inside = [&](Elem v, std::string law) {
        auto local = i.local(v);
        if (!local) {
          Check c;
          c.law = std::move(law);
          c.passed = false;
          c.tuple = {y, k};
          c.witness = {{"b", b.label(y)}, {"a", i.induced->label(k)}};
          throw PreconditionError("induced action leaves A", c);
        }
        return *local;
      };
      act.dot(y, k) = inside(e.conjugate(s, a), "extension.dot");
      for (std::size_t o = 0; o < e.star.size(); ++o) act.star[o](y, k) = inside(e.op(o, s, a), "extension.star");
    }
  }
  return act;
}

DerivedAction pull_back_action(const DerivedAction& act, const Morphism& along) {
  along.validate_shape();
  if (!same_structure(*along.cod, *act.actor))
    throw StructuralError("cannot pull the action of " + act.actor->name + " back along a map into " +
                          along.cod->name);
  DerivedAction out;
  out.actor = along.dom;
  out.acted = act.acted;
  out.dot = Table(along.dom->size(), act.acted->size());
  out.star.assign(act.star.size(), Table(along.dom->size(), act.acted->size()));
  for (Elem s = 0; s < along.dom->size(); ++s)
    for (Elem a = 0; a < act.acted->size(); ++a) {
      out.dot(s, a) = act.act(along(s), a);
      for (std::size_t o = 0; o < act.star.size(); ++o) out.star[o](s, a) = act.left(o, along(s), a);
    }
  return out;
}

namespace {

// Runs `scan` for every combination of operation indices and keeps the
// first failure. With no combinations the condition holds vacuously.
template <class Scan>
Check over_ops(const std::string& law, const std::vector<std::vector<std::size_t>>& combos,
               const std::vector<std::string>& names, Scan scan) {
  for (std::size_t c = 0; c < combos.size(); ++c) {
    Check check = scan(combos[c]);
    if (!check.passed) {
      check.law = law;
      check.op = names[c];
      return check;
    }
  }
  Check pass;
  pass.law = law;
  if (combos.empty()) pass.note = "vacuous";
  return pass;
}

}  // namespace

Report check_derived_action(const DerivedAction& act) {
  act.validate_shape();
  const Structure& A = *act.acted;
  const Structure& B = *act.actor;
  const auto& profile = *B.profile;
  Report report("action " + B.name + " on " + A.name);

  const Domain da{&A}, db{&B};
  const std::size_t nops = profile.binary().size();
  std::vector<std::vector<std::size_t>> singles, pairs, unary_ops, unary_pairs;
  std::vector<std::string> single_names, pair_names, unary_names, unary_pair_names;
  for (std::size_t o = 0; o < nops; ++o) {
    singles.push_back({o});
    single_names.push_back(profile.binary()[o].symbol);
    for (std::size_t p = 0; p < nops; ++p) {
      pairs.push_back({o, p});
      pair_names.push_back(profile.binary()[o].symbol + "," + profile.binary()[p].symbol);
    }
  }
  for (std::size_t u = 0; u < profile.unary().size(); ++u) {
    unary_ops.push_back({u});
    unary_names.push_back(profile.unary()[u].symbol);
    for (std::size_t o = 0; o < nops; ++o) {
      unary_pairs.push_back({u, o});
      unary_pair_names.push_back(profile.unary()[u].symbol + "," + profile.binary()[o].symbol);
    }
  }

  report.add(scan_law("cond1", "", {{"a", da}}, [&](auto t) { return act.act(B.zero, t[0]) == t[0]; }));
  report.add(scan_law("cond2", "", {{"b", db}, {"a1", da}, {"a2", da}}, [&](auto t) {
    return act.act(t[0], A.plus(t[1], t[2])) == A.plus(act.act(t[0], t[1]), act.act(t[0], t[2]));
  }));
  report.add(scan_law("cond3", "", {{"b1", db}, {"b2", db}, {"a", da}}, [&](auto t) {
    return act.act(B.plus(t[0], t[1]), t[2]) == act.act(t[0], act.act(t[1], t[2]));
  }));
  report.add(over_ops("cond4", singles, single_names, [&](const auto& ops) {
    const std::size_t o = ops[0];
    return scan_law("", "", {{"b", db}, {"a1", da}, {"a2", da}}, [&](auto t) {
      return act.left(o, t[0], A.plus(t[1], t[2])) == A.plus(act.left(o, t[0], t[1]), act.left(o, t[0], t[2]));
    });
  }));
  report.add(over_ops("cond5", singles, single_names, [&](const auto& ops) {
    const std::size_t o = ops[0];
    return scan_law("", "", {{"b1", db}, {"b2", db}, {"a", da}}, [&](auto t) {
      return act.left(o, B.plus(t[0], t[1]), t[2]) == A.plus(act.left(o, t[0], t[2]), act.left(o, t[1], t[2]));
    });
  }));
  report.add(over_ops("cond6", pairs, pair_names, [&](const auto& ops) {
    return scan_law("", "", {{"b1", db}, {"b2", db}, {"a1", da}, {"a2", da}}, [&](auto t) {
      const Elem p = A.op(ops[1], t[2], t[3]);
      return act.act(B.op(ops[0], t[0], t[1]), p) == p;
    });
  }));
  report.add(over_ops("cond7", pairs, pair_names, [&](const auto& ops) {
    return scan_law("", "", {{"b1", db}, {"b2", db}, {"a", da}, {"b", db}}, [&](auto t) {
      const Elem p = act.right(ops[1], t[2], t[3]);
      return act.act(B.op(ops[0], t[0], t[1]), p) == p;
    });
  }));
  report.add(over_ops("cond8", singles, single_names, [&](const auto& ops) {
    const std::size_t o = ops[0];
    return scan_law("", "", {{"a1", da}, {"b", db}, {"a2", da}}, [&](auto t) {
      return A.op(o, t[0], act.act(t[1], t[2])) == A.op(o, t[0], t[2]);
    });
  }));
  report.add(over_ops("cond9", singles, single_names, [&](const auto& ops) {
    const std::size_t o = ops[0];
    return scan_law("", "", {{"b", db}, {"b1", db}, {"a", da}}, [&](auto t) {
      return act.left(o, t[0], act.act(t[1], t[2])) == act.left(o, t[0], t[2]);
    });
  }));
  report.add(over_ops("cond10", unary_ops, unary_names, [&](const auto& ops) {
    const std::size_t u = ops[0];
    return scan_law("", "", {{"b", db}, {"a", da}}, [&](auto t) {
      return A.apply(u, act.act(t[0], t[1])) == act.act(B.apply(u, t[0]), A.apply(u, t[1]));
    });
  }));
  // a in A on the left of the star.
  report.add(over_ops("cond11", unary_pairs, unary_pair_names, [&](const auto& ops) {
    const std::size_t u = ops[0], o = ops[1];
    const bool scalar = profile.unary()[u].cls == UnaryClass::Scalar;
    return scan_law("", "", {{"a", da}, {"b", db}}, [&](auto t) {
      const Elem lhs = A.apply(u, act.right(o, t[0], t[1]));
      if (scalar)
        return lhs == act.right(o, A.apply(u, t[0]), t[1]) && lhs == act.right(o, t[0], B.apply(u, t[1]));
      return lhs == act.right(o, A.apply(u, t[0]), B.apply(u, t[1]));
    });
  }));
  // b in B on the left of the star.
  report.add(over_ops("cond11.sym", unary_pairs, unary_pair_names, [&](const auto& ops) {
    const std::size_t u = ops[0], o = ops[1];
    const bool scalar = profile.unary()[u].cls == UnaryClass::Scalar;
    return scan_law("", "", {{"b", db}, {"a", da}}, [&](auto t) {
      const Elem lhs = A.apply(u, act.left(o, t[0], t[1]));
      if (scalar)
        return lhs == act.left(o, B.apply(u, t[0]), t[1]) && lhs == act.left(o, t[0], A.apply(u, t[1]));
      return lhs == act.left(o, B.apply(u, t[0]), A.apply(u, t[1]));
    });
  }));

  // Condition 12 in A x| B: A-values sit at (u,0), B-values at (0,v).
  const Domain dab{&A, &B};
  const Elem na = static_cast<Elem>(A.size());
  using Pair = std::pair<Elem, Elem>;
  auto product = [&](std::size_t o, Elem x, Elem y) -> Pair {
    const bool xa = x < na, ya = y < na;
    if (xa && ya) return {A.op(o, x, y), B.zero};
    if (!xa && ya) return {act.left(o, x - na, y), B.zero};
    if (xa && !ya) return {act.right(o, x, y - na), B.zero};
    return {A.zero, B.op(o, x - na, y - na)};
  };
  auto sum = [&](Pair p, Pair q) -> Pair {
    return {A.plus(p.first, act.act(p.second, q.first)), B.plus(p.second, q.second)};
  };
  report.add(over_ops("cond12", pairs, pair_names, [&](const auto& ops) {
    return scan_law("", "", {{"x", dab}, {"y", dab}, {"z", dab}, {"t", dab}}, [&](auto t) {
      const Pair p = product(ops[0], t[0], t[1]);
      const Pair q = product(ops[1], t[2], t[3]);
      return sum(p, q) == sum(q, p);
    });
  }));
  return report;
}

SemidirectProduct semidirect_product(const DerivedAction& act) {
  act.validate_shape();
  const Structure& A = *act.acted;
  const Structure& B = *act.actor;
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  auto index = [nb](Elem a, Elem b) { return static_cast<Elem>(a * nb + b); };

  Structure s;
  s.profile = B.profile;
  s.name = A.name + "_sd_" + B.name;
  s.zero = index(A.zero, B.zero);
  s.add = Table(n, n);
  s.neg.resize(n);
  s.star.assign(B.star.size(), Table(n, n));
  s.unary.assign(B.unary.size(), UnaryTable(n));
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < nb; ++b) {
      const Elem x = index(a, b);
      s.elements.push_back("(" + A.label(a) + "," + B.label(b) + ")");
      // (a,b)^-1 = ((-b).(-a), -b)
      s.neg[x] = index(act.act(B.minus(b), A.minus(a)), B.minus(b));
      for (std::size_t u = 0; u < s.unary.size(); ++u) s.unary[u][x] = index(A.apply(u, a), B.apply(u, b));
    }
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1)
      for (Elem a = 0; a < na; ++a)
        for (Elem b = 0; b < nb; ++b) {
          const Elem x = index(a1, b1), y = index(a, b);
          s.add(x, y) = index(A.plus(a1, act.act(b1, a)), B.plus(b1, b));
          for (std::size_t o = 0; o < s.star.size(); ++o) {
            const Elem first = A.plus(A.plus(A.op(o, a1, a), act.right(o, a1, b)), act.left(o, b1, a));
            s.star[o](x, y) = index(first, B.op(o, b1, b));
          }
        }

  SemidirectProduct out;
  out.object = freeze(std::move(s));
  std::vector<Elem> inject(na), project(n), section(nb);
  for (Elem a = 0; a < na; ++a) inject[a] = index(a, B.zero);
  for (Elem x = 0; x < n; ++x) project[x] = static_cast<Elem>(x % nb);
  for (Elem b = 0; b < nb; ++b) section[b] = index(A.zero, b);
  out.inject = Morphism{act.acted, out.object, std::move(inject)};
  out.project = Morphism{out.object, act.actor, std::move(project)};
  out.section = Morphism{act.actor, out.object, std::move(section)};
  return out;
}

}  // namespace mci
