#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mci/error.hpp"
#include "mci/structure.hpp"

namespace mci {

struct Binding {
  std::string label;
  std::string value;
};

/// One itemized law check. `tuple` holds the raw witness ids in the order
/// the law declares its variables; `witness` is the rendered form.
struct Check {
  std::string law;
  std::string op;
  bool passed = true;
  bool precondition = false;
  std::vector<Elem> tuple;
  std::vector<Binding> witness;
  std::string note;

  std::string id() const { return op.empty() ? law : law + "[" + op + "]"; }
};

/// Deterministic verification record. Rendering yields one line per check,
/// prefixed PASS or FAIL, followed by a summary line.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }

  void add(Check check) { checks_.push_back(std::move(check)); }
  /// Appends every check of `other`, flagged as a precondition of this one.
  void add_preconditions(const Report& other, std::string_view prefix);
  void note(std::string law, bool passed, std::string note = {});

  bool passed() const;
  bool preconditions_passed() const;
  std::vector<const Check*> failures() const;
  const Check* find(std::string_view id) const;

  void render(std::ostream& out) const;
  std::string str() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

/// A mathematical precondition failed; carries the witness.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, Check witness)
      : Error(what), witness_(std::move(witness)) {}
  const Check& witness() const noexcept { return witness_; }

 private:
  Check witness_;
};

/// Range of a law variable: a structure's carrier or the disjoint union of
/// two carriers (ids of `second` are shifted by |first|).
struct Domain {
  const Structure* first = nullptr;
  const Structure* second = nullptr;

  std::size_t size() const { return first->size() + (second ? second->size() : 0); }
  std::string label(Elem x) const;
};

struct LawVariable {
  std::string label;
  Domain domain;
};

/// Scans every tuple over the variables' domains (first variable slowest)
/// and records the first tuple where `holds` is false.
Check scan_law(std::string law, std::string op, const std::vector<LawVariable>& vars,
               const std::function<bool(std::span<const Elem>)>& holds);

/// Renders ids against explicit domains.
std::vector<Binding> bind(const std::vector<LawVariable>& vars, std::span<const Elem> tuple);

}  // namespace mci
