#include "mci/report.hpp"

#include <ostream>
#include <sstream>

namespace mci {

void Report::add_preconditions(const Report& other, std::string_view prefix) {
  for (Check c : other.checks_) {
    c.law = std::string(prefix) + c.law;
    c.precondition = true;
    checks_.push_back(std::move(c));
  }
}

void Report::note(std::string law, bool passed, std::string note) {
  Check c;
  c.law = std::move(law);
  c.passed = passed;
  c.note = std::move(note);
  checks_.push_back(std::move(c));
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

bool Report::preconditions_passed() const {
  for (const auto& c : checks_)
    if (c.precondition && !c.passed) return false;
  return true;
}

std::vector<const Check*> Report::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(&c);
  return out;
}

const Check* Report::find(std::string_view id) const {
  for (const auto& c : checks_)
    if (c.id() == id || c.law == id) return &c;
  return nullptr;
}

void Report::render(std::ostream& out) const {
  std::size_t failed = 0;
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << subject_ << ": " << (c.precondition ? "pre " : "")
        << c.id();
    if (!c.passed) {
      ++failed;
      for (const auto& b : c.witness) out << ' ' << b.label << '=' << b.value;
    }
    if (!c.note.empty()) out << " (" << c.note << ')';
    out << '\n';
  }
  if (failed == 0)
    out << "PASS " << subject_ << '\n';
  else
    out << "FAIL " << subject_ << ": " << failed << " of " << checks_.size() << " checks failed\n";
}

std::string Report::str() const {
  std::ostringstream out;
  render(out);
  return out.str();
}

std::string Domain::label(Elem x) const {
  if (!second) return first->label(x);
  if (x < first->size()) return first->name + ":" + first->label(x);
  return second->name + ":" + second->label(static_cast<Elem>(x - first->size()));
}

std::vector<Binding> bind(const std::vector<LawVariable>& vars, std::span<const Elem> tuple) {
  std::vector<Binding> out;
  out.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size() && i < tuple.size(); ++i)
    out.push_back({vars[i].label, vars[i].domain.label(tuple[i])});
  return out;
}

Check scan_law(std::string law, std::string op, const std::vector<LawVariable>& vars,
               const std::function<bool(std::span<const Elem>)>& holds) {
  Check check;
  check.law = std::move(law);
  check.op = std::move(op);
  std::vector<Elem> tuple(vars.size(), 0);
  for (const auto& v : vars)
    if (v.domain.size() == 0) return check;
  for (;;) {
    if (!holds(tuple)) {
      check.passed = false;
      check.tuple = tuple;
      check.witness = mci::bind(vars, tuple);
      return check;
    }
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++tuple[k] < vars[k].domain.size()) break;
      tuple[k] = 0;
      if (k == 0) return check;
    }
    if (vars.empty()) return check;
  }
}

}  // namespace mci
