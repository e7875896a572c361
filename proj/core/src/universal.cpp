#include "mci/universal.hpp"

#include <algorithm>
#include <map>

namespace mci {

namespace {

using Key = std::vector<Elem>;

void append(Key& key, const XModMorphism& m) {
  key.insert(key.end(), m.mu1.map.begin(), m.mu1.map.end());
  key.insert(key.end(), m.mu0.map.begin(), m.mu0.map.end());
}

bool same_maps(const XModMorphism& a, const XModMorphism& b) {
  return a.mu1.map == b.mu1.map && a.mu0.map == b.mu0.map;
}

// Legs composed with every morphism tester -> candidate, tallied.
std::map<Key, std::size_t> tally(const LimitProblem& problem, const CrossedModule& tester, std::size_t max_size) {
  std::map<Key, std::size_t> out;
  for_each_xmod_morphism(
      tester, problem.candidate.object, problem.scope,
      [&](const XModMorphism& m) {
        Key key;
        for (const auto& leg : problem.candidate.legs) append(key, compose(leg, m));
        ++out[key];
        return true;
      },
      max_size);
  return out;
}

}  // namespace

std::string_view to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::Product: return "product";
    case LimitKind::Pullback: return "pullback";
    case LimitKind::Equalizer: return "equalizer";
    case LimitKind::Terminal: return "terminal";
    case LimitKind::Initial: return "initial";
  }
  return "?";
}

std::vector<std::size_t> mediator_counts(const LimitProblem& problem, const CrossedModule& tester,
                                         std::size_t max_size) {
  check_size_guard(*tester.c1, max_size, "universal-property tester");
  check_size_guard(*tester.c0, max_size, "universal-property tester");
  const XModCone& cand = problem.candidate;
  switch (problem.kind) {
    case LimitKind::Terminal:
      return {enumerate_xmod_morphisms(tester, cand.object, problem.scope, max_size).size()};
    case LimitKind::Initial:
      return {enumerate_xmod_morphisms(cand.object, tester, problem.scope, max_size).size()};
    case LimitKind::Product:
    case LimitKind::Pullback: {
      if (cand.legs.size() != 2) throw StructuralError("product/pullback candidate needs two legs");
      if (problem.kind == LimitKind::Pullback && problem.diagram.size() != 2)
        throw StructuralError("pullback problem needs two diagram morphisms");
      const auto table = tally(problem, tester, max_size);
      const auto us = enumerate_xmod_morphisms(tester, cand.legs[0].dst, problem.scope, max_size);
      const auto vs = enumerate_xmod_morphisms(tester, cand.legs[1].dst, problem.scope, max_size);
      std::vector<std::size_t> counts;
      for (const auto& u : us)
        for (const auto& v : vs) {
          if (problem.kind == LimitKind::Pullback &&
              !same_maps(compose(problem.diagram[0], u), compose(problem.diagram[1], v)))
            continue;
          Key key;
          append(key, u);
          append(key, v);
          auto it = table.find(key);
          counts.push_back(it == table.end() ? 0 : it->second);
        }
      return counts;
    }
    case LimitKind::Equalizer: {
      if (cand.legs.size() != 1 || problem.diagram.size() != 2)
        throw StructuralError("equalizer problem needs one leg and two diagram morphisms");
      const auto table = tally(problem, tester, max_size);
      std::vector<std::size_t> counts;
      for (const auto& u : enumerate_xmod_morphisms(tester, cand.legs[0].dst, problem.scope, max_size)) {
        if (!same_maps(compose(problem.diagram[0], u), compose(problem.diagram[1], u))) continue;
        Key key;
        append(key, u);
        auto it = table.find(key);
        counts.push_back(it == table.end() ? 0 : it->second);
      }
      return counts;
    }
  }
  return {};
}

Report verify_universal_cone(const LimitProblem& problem, const std::vector<CrossedModule>& testers,
                             std::size_t max_size) {
  Report report(std::string(to_string(problem.kind)) + " " + problem.candidate.object.name);
  for (const auto& tester : testers) {
    const auto counts = mediator_counts(problem, tester, max_size);
    Check c;
    c.law = "universal";
    c.op = tester.name;
    c.note = std::to_string(counts.size()) + (counts.size() == 1 ? " cone" : " cones");
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] != 1) {
        c.passed = false;
        c.witness = {{"cone", std::to_string(i)}, {"mediators", std::to_string(counts[i])}};
        break;
      }
    report.add(std::move(c));
  }
  return report;
}

}  // namespace mci
