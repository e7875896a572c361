#include "checks.hpp"

namespace mci::detail {

Check summarize(const Report& r, std::string law) {
  Check c;
  c.law = std::move(law);
  c.precondition = true;
  if (auto failures = r.failures(); !failures.empty()) {
    c.passed = false;
    c.witness = failures.front()->witness;
    c.tuple = failures.front()->tuple;
    c.note = failures.front()->id();
  }
  return c;
}

Check morphism_line(const Morphism& f, std::string law) {
  Check c;
  c.law = std::move(law);
  c.precondition = true;
  if (auto m = is_morphism(f); !m) {
    c.passed = false;
    c.witness = m.violation->witness;
    c.tuple = m.violation->tuple;
    c.note = m.violation->id();
  }
  return c;
}

[[noreturn]] void reject(const Report& r, const std::string& what) {
  const Check* first = r.failures().front();
  throw PreconditionError(what + " (" + first->id() + ")", *first);
}

bool is_identity(const Morphism& f) {
  if (!same_structure(*f.dom, *f.cod)) return false;
  for (Elem x = 0; x < f.map.size(); ++x)
    if (f(x) != x) return false;
  return true;
}

}  // namespace mci::detail
