#include "mci/profile.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>

#include "mci/error.hpp"

namespace mci {

std::string_view to_string(UnaryClass c) {
  return c == UnaryClass::Scalar ? "S" : "D";
}

std::optional<UnaryClass> unary_class_from(std::string_view token) {
  if (token == "S") return UnaryClass::Scalar;
  if (token == "D") return UnaryClass::Multiplicative;
  return std::nullopt;
}

bool is_reserved_symbol(std::string_view symbol) {
  static constexpr std::array<std::string_view, 12> kReserved = {
      "add", "neg", "zero", "end", "profile", "elements", "structure", "+", "-", "0", "(", ")"};
  return std::find(kReserved.begin(), kReserved.end(), symbol) != kReserved.end();
}

void VarietyProfile::check_fresh(const std::string& symbol) const {
  if (symbol.empty() || is_reserved_symbol(symbol))
    throw Error("invalid operation symbol '" + symbol + "'");
  if (symbol.find_first_of(" \t()") != std::string::npos)
    throw Error("operation symbol '" + symbol + "' contains whitespace or parentheses");
  if (binary_index(symbol) || unary_index(symbol))
    throw Error("operation symbol '" + symbol + "' declared twice");
}

void VarietyProfile::add_binary(std::string symbol, std::string opposite) {
  check_fresh(symbol);
  const std::size_t first = binary_.size();
  if (opposite == symbol) {
    binary_.push_back({std::move(symbol), first, true});
    return;
  }
  check_fresh(opposite);
  binary_.push_back({std::move(symbol), first + 1, true});
  binary_.push_back({std::move(opposite), first, false});
}

void VarietyProfile::add_unary(std::string symbol, UnaryClass cls) {
  check_fresh(symbol);
  unary_.push_back({std::move(symbol), cls});
}

void VarietyProfile::add_identity(std::string name, std::string_view lhs, std::string_view rhs) {
  Identity id;
  id.name = std::move(name);
  id.lhs = parse_term(lhs, id.variables);
  id.rhs = parse_term(rhs, id.variables);
  identities_.push_back(std::move(id));
}

std::optional<std::size_t> VarietyProfile::binary_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < binary_.size(); ++i)
    if (binary_[i].symbol == symbol) return i;
  return std::nullopt;
}

std::optional<std::size_t> VarietyProfile::unary_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < unary_.size(); ++i)
    if (unary_[i].symbol == symbol) return i;
  return std::nullopt;
}

namespace {

class TermReader {
 public:
  TermReader(const VarietyProfile& profile, std::string_view text, std::vector<std::string>& vars)
      : profile_(profile), text_(text), vars_(vars) {}

  Term read_all() {
    Term t = read();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("term '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a symbol");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') {
      std::string name = atom();
      if (name == "0") return Term::zero();
      if (name == "+" || name == "-" || profile_.binary_index(name) || profile_.unary_index(name))
        fail("operation '" + name + "' used as a variable");
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        vars_.push_back(name);
        return Term::variable(vars_.size() - 1);
      }
      return Term::variable(static_cast<std::size_t>(it - vars_.begin()));
    }
    ++pos_;
    const std::string head = atom();
    std::vector<Term> args;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(read());
    }
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        fail("'" + head + "' expects " + std::to_string(n) + " arguments, got " +
             std::to_string(args.size()));
    };
    if (head == "+") {
      arity(2);
      return Term::add(std::move(args[0]), std::move(args[1]));
    }
    if (head == "-") {
      arity(1);
      return Term::negate(std::move(args[0]));
    }
    if (auto b = profile_.binary_index(head)) {
      arity(2);
      return Term::binary(*b, std::move(args[0]), std::move(args[1]));
    }
    if (auto u = profile_.unary_index(head)) {
      arity(1);
      return Term::unary(*u, std::move(args[0]));
    }
    fail("unknown operation '" + head + "'");
  }

  const VarietyProfile& profile_;
  std::string_view text_;
  std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Term VarietyProfile::parse_term(std::string_view text, std::vector<std::string>& variables) const {
  return TermReader(*this, text, variables).read_all();
}

std::string VarietyProfile::format_term(const Term& term,
                                        const std::vector<std::string>& variables) const {
  switch (term.kind) {
    case Term::Kind::Variable:
      return variables.at(term.index);
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::Add:
      return "(+ " + format_term(term.args[0], variables) + " " +
             format_term(term.args[1], variables) + ")";
    case Term::Kind::Negate:
      return "(- " + format_term(term.args[0], variables) + ")";
    case Term::Kind::Binary:
      return "(" + binary_.at(term.index).symbol + " " + format_term(term.args[0], variables) +
             " " + format_term(term.args[1], variables) + ")";
    case Term::Kind::Unary:
      return "(" + unary_.at(term.index).symbol + " " + format_term(term.args[0], variables) + ")";
  }
  return {};
}

bool VarietyProfile::operator==(const VarietyProfile& other) const {
  if (name_ != other.name_ || binary_.size() != other.binary_.size() ||
      unary_.size() != other.unary_.size() || identities_.size() != other.identities_.size())
    return false;
  for (std::size_t i = 0; i < binary_.size(); ++i)
    if (binary_[i].symbol != other.binary_[i].symbol ||
        binary_[i].opposite != other.binary_[i].opposite)
      return false;
  for (std::size_t i = 0; i < unary_.size(); ++i)
    if (unary_[i].symbol != other.unary_[i].symbol || unary_[i].cls != other.unary_[i].cls)
      return false;
  for (std::size_t i = 0; i < identities_.size(); ++i) {
    const auto& a = identities_[i];
    const auto& b = other.identities_[i];
    if (a.name != b.name || format_term(a.lhs, a.variables) != other.format_term(b.lhs, b.variables) ||
        format_term(a.rhs, a.variables) != other.format_term(b.rhs, b.variables))
      return false;
  }
  return true;
}

namespace {

void add_scalars(VarietyProfile& profile, unsigned p) {
  for (unsigned k = 0; k < p; ++k) profile.add_unary("s" + std::to_string(k), UnaryClass::Scalar);
}

void require_prime(unsigned p, std::initializer_list<unsigned> allowed, const char* what) {
  if (std::find(allowed.begin(), allowed.end(), p) == allowed.end())
    throw Error(std::string(what) + ": unsupported characteristic " + std::to_string(p));
}

ProfilePtr cached(const std::string& key, ProfilePtr (*make)(unsigned), unsigned p) {
  static std::mutex mutex;
  static std::map<std::string, ProfilePtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = make(p);
  return slot;
}

ProfilePtr make_comm_algebra(unsigned p) {
  auto profile = std::make_shared<VarietyProfile>("comm-algebra-f" + std::to_string(p));
  profile->add_binary("*", "*");
  add_scalars(*profile, p);
  profile->add_identity("assoc", "(* (* x y) z)", "(* x (* y z))");
  return profile;
}

ProfilePtr make_lie(unsigned p) {
  auto profile = std::make_shared<VarietyProfile>("lie-f" + std::to_string(p));
  profile->add_binary("br", "br_op");
  add_scalars(*profile, p);
  profile->add_identity("antisymmetry", "(br x y)", "(- (br y x))");
  profile->add_identity("jacobi", "(+ (+ (br x (br y z)) (br y (br z x))) (br z (br x y)))", "0");
  return profile;
}

ProfilePtr make_leibniz(unsigned p) {
  auto profile = std::make_shared<VarietyProfile>("leibniz-f" + std::to_string(p));
  profile->add_binary("br", "br_op");
  add_scalars(*profile, p);
  profile->add_identity("leibniz", "(br x (br y z))", "(+ (br (br x y) z) (- (br (br x z) y)))");
  return profile;
}

ProfilePtr make_dialgebra(unsigned p) {
  auto profile = std::make_shared<VarietyProfile>("dialgebra-f" + std::to_string(p));
  profile->add_binary("dl", "dl_op");
  profile->add_binary("dr", "dr_op");
  add_scalars(*profile, p);
  profile->add_identity("dias1", "(dl (dl x y) z)", "(dl x (dl y z))");
  profile->add_identity("dias2", "(dl (dl x y) z)", "(dl x (dr y z))");
  profile->add_identity("dias3", "(dl (dr x y) z)", "(dr x (dl y z))");
  profile->add_identity("dias4", "(dr (dl x y) z)", "(dr x (dr y z))");
  profile->add_identity("dias5", "(dr (dr x y) z)", "(dr x (dr y z))");
  return profile;
}

}  // namespace

ProfilePtr group_profile() {
  static const ProfilePtr profile = std::make_shared<VarietyProfile>("group");
  return profile;
}

ProfilePtr comm_algebra_profile(unsigned p) {
  require_prime(p, {2, 3, 5}, "comm-algebra");
  return cached("comm-algebra-f" + std::to_string(p), make_comm_algebra, p);
}

ProfilePtr lie_profile(unsigned p) {
  require_prime(p, {3, 5}, "lie");
  return cached("lie-f" + std::to_string(p), make_lie, p);
}

ProfilePtr leibniz_profile(unsigned p) {
  require_prime(p, {2, 3}, "leibniz");
  return cached("leibniz-f" + std::to_string(p), make_leibniz, p);
}

ProfilePtr dialgebra_profile(unsigned p) {
  require_prime(p, {2}, "dialgebra");
  return cached("dialgebra-f" + std::to_string(p), make_dialgebra, p);
}

ProfilePtr builtin_profile(std::string_view name) {
  if (name == "group") return group_profile();
  auto suffix = [&](std::string_view prefix) -> std::optional<unsigned> {
    if (name.substr(0, prefix.size()) != prefix || name.size() != prefix.size() + 1) return std::nullopt;
    const char c = name.back();
    if (c < '0' || c > '9') return std::nullopt;
    return static_cast<unsigned>(c - '0');
  };
  try {
    if (auto p = suffix("comm-algebra-f")) return comm_algebra_profile(*p);
    if (auto p = suffix("lie-f")) return lie_profile(*p);
    if (auto p = suffix("leibniz-f")) return leibniz_profile(*p);
    if (auto p = suffix("dialgebra-f")) return dialgebra_profile(*p);
  } catch (const Error&) {
    return nullptr;
  }
  return nullptr;
}

std::vector<std::string> builtin_profile_names() {
  return {"group",     "comm-algebra-f2", "comm-algebra-f3", "comm-algebra-f5", "lie-f3",
          "lie-f5",    "leibniz-f2",      "leibniz-f3",      "dialgebra-f2"};
}

}  // namespace mci
