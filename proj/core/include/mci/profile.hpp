#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mci {

/// Term over a profile's signature. Variables are slots into the owning
/// identity's variable list; operation indices refer to the profile.
struct Term {
  enum class Kind { Variable, Zero, Add, Negate, Binary, Unary };

  Kind kind = Kind::Zero;
  std::size_t index = 0;
  std::vector<Term> args;

  static Term variable(std::size_t slot) { return {Kind::Variable, slot, {}}; }
  static Term zero() { return {Kind::Zero, 0, {}}; }
  static Term add(Term l, Term r) { return {Kind::Add, 0, {std::move(l), std::move(r)}}; }
  static Term negate(Term t) { return {Kind::Negate, 0, {std::move(t)}}; }
  static Term binary(std::size_t op, Term l, Term r) {
    return {Kind::Binary, op, {std::move(l), std::move(r)}};
  }
  static Term unary(std::size_t op, Term t) { return {Kind::Unary, op, {std::move(t)}}; }
};

/// How a unary operation interacts with the stars.
///   Scalar:         w(x*y) = w(x)*y          (scalar multiplications live here)
///   Multiplicative: w(x*y) = w(x)*w(y)
enum class UnaryClass { Scalar, Multiplicative };

std::string_view to_string(UnaryClass c);
std::optional<UnaryClass> unary_class_from(std::string_view token);

/// Signature plus declared identities of one variety of groups with
/// operations. Group operations (0, -, +) are implicit.
class VarietyProfile {
 public:
  struct Binary {
    std::string symbol;
    std::size_t opposite = 0;  // index of the symbol for x *° y = y * x
    bool primary = true;       // first of its pair, or its own opposite
  };
  struct Unary {
    std::string symbol;
    UnaryClass cls = UnaryClass::Scalar;
  };
  struct Identity {
    std::string name;
    std::vector<std::string> variables;
    Term lhs;
    Term rhs;
  };

  explicit VarietyProfile(std::string name) : name_(std::move(name)) {}

  /// Declares a star and its opposite. Pass the same symbol twice for a
  /// star that is its own opposite (the commutative case).
  void add_binary(std::string symbol, std::string opposite);
  void add_unary(std::string symbol, UnaryClass cls);
  /// Parses both sides in prefix syntax, e.g. "(* x (+ y z))".
  void add_identity(std::string name, std::string_view lhs, std::string_view rhs);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Binary>& binary() const noexcept { return binary_; }
  const std::vector<Unary>& unary() const noexcept { return unary_; }
  const std::vector<Identity>& identities() const noexcept { return identities_; }

  std::size_t opposite(std::size_t op) const { return binary_.at(op).opposite; }
  std::optional<std::size_t> binary_index(std::string_view symbol) const;
  std::optional<std::size_t> unary_index(std::string_view symbol) const;

  Term parse_term(std::string_view text, std::vector<std::string>& variables) const;
  std::string format_term(const Term& term, const std::vector<std::string>& variables) const;

  bool operator==(const VarietyProfile& other) const;

 private:
  void check_fresh(const std::string& symbol) const;

  std::string name_;
  std::vector<Binary> binary_;
  std::vector<Unary> unary_;
  std::vector<Identity> identities_;
};

using ProfilePtr = std::shared_ptr<const VarietyProfile>;

/// Symbols that cannot name operations (reserved by the text format).
bool is_reserved_symbol(std::string_view symbol);

// Built-in profiles. Each call returns the same shared instance.
ProfilePtr group_profile();
/// Commutative associative algebras over F_p: star "*" (self-opposite),
/// one scalar unary "s<k>" per k in F_p.
ProfilePtr comm_algebra_profile(unsigned p);
/// Lie algebras over F_p (p odd): bracket "br"/"br_op", antisymmetry, Jacobi.
ProfilePtr lie_profile(unsigned p);
/// Leibniz algebras over F_p: bracket "br"/"br_op", Leibniz identity.
ProfilePtr leibniz_profile(unsigned p);
/// Dialgebras over F_p: "dl" (left), "dr" (right) and opposites, five axioms.
ProfilePtr dialgebra_profile(unsigned p);

/// Looks up group, comm-algebra-f2/f3/f5, lie-f3/f5, leibniz-f2/f3, dialgebra-f2.
ProfilePtr builtin_profile(std::string_view name);
std::vector<std::string> builtin_profile_names();

}  // namespace mci
