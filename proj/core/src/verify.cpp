#include "mci/verify.hpp"

namespace mci {

Report verify_structure(const Structure& s, VerifyOptions options) {
  s.validate_shape();
  Report report("structure " + s.name);
  const Domain d{&s};
  const std::vector<LawVariable> x{{"x", d}};
  const std::vector<LawVariable> xy{{"x", d}, {"y", d}};
  const std::vector<LawVariable> xyz{{"x", d}, {"y", d}, {"z", d}};
  const auto& profile = *s.profile;

  report.add(scan_law("group.identity", "", x, [&](auto t) {
    return s.plus(s.zero, t[0]) == t[0] && s.plus(t[0], s.zero) == t[0];
  }));
  report.add(scan_law("group.inverse", "", x, [&](auto t) {
    return s.plus(t[0], s.minus(t[0])) == s.zero && s.plus(s.minus(t[0]), t[0]) == s.zero;
  }));
  report.add(scan_law("group.assoc", "", xyz, [&](auto t) {
    return s.plus(s.plus(t[0], t[1]), t[2]) == s.plus(t[0], s.plus(t[1], t[2]));
  }));

  for (std::size_t b = 0; b < profile.binary().size(); ++b) {
    const auto& sym = profile.binary()[b].symbol;
    report.add(scan_law("distrib", sym, xyz, [&](auto t) {
      return s.op(b, t[0], s.plus(t[1], t[2])) == s.plus(s.op(b, t[0], t[1]), s.op(b, t[0], t[2]));
    }));
  }

  for (std::size_t u = 0; u < profile.unary().size(); ++u) {
    const auto& w = profile.unary()[u];
    report.add(scan_law("unary.additive", w.symbol, xy, [&](auto t) {
      return s.apply(u, s.plus(t[0], t[1])) == s.plus(s.apply(u, t[0]), s.apply(u, t[1]));
    }));
    for (std::size_t b = 0; b < profile.binary().size(); ++b) {
      const std::string op = w.symbol + "," + profile.binary()[b].symbol;
      if (w.cls == UnaryClass::Scalar) {
        report.add(scan_law("unary.scalar", op, xy, [&](auto t) {
          return s.apply(u, s.op(b, t[0], t[1])) == s.op(b, s.apply(u, t[0]), t[1]);
        }));
      } else {
        report.add(scan_law("unary.mult", op, xy, [&](auto t) {
          return s.apply(u, s.op(b, t[0], t[1])) == s.op(b, s.apply(u, t[0]), s.apply(u, t[1]));
        }));
      }
    }
  }

  for (std::size_t b = 0; b < profile.binary().size(); ++b) {
    const auto& sym = profile.binary()[b].symbol;
    report.add(scan_law("central", sym, xyz, [&](auto t) {
      const Elem p = s.op(b, t[1], t[2]);
      return s.plus(t[0], p) == s.plus(p, t[0]);
    }));
  }

  for (std::size_t b = 0; b < profile.binary().size(); ++b) {
    const std::size_t o = profile.opposite(b);
    report.add(scan_law("opposite", profile.binary()[b].symbol, xy, [&](auto t) {
      return s.op(o, t[0], t[1]) == s.op(b, t[1], t[0]);
    }));
  }

  if (options.identities) {
    for (const auto& identity : profile.identities()) {
      std::vector<LawVariable> vars;
      for (const auto& v : identity.variables) vars.push_back({v, d});
      report.add(scan_law("identity", identity.name, vars, [&](auto t) {
        return evaluate(s, identity.lhs, t) == evaluate(s, identity.rhs, t);
      }));
    }
  }
  return report;
}

}  // namespace mci
