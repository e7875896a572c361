#include "text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace mci::text {

namespace fs = std::filesystem;

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Profile: return "profile";
    case Kind::Structure: return "structure";
    case Kind::Morphism: return "morphism";
    case Kind::Action: return "action";
    case Kind::XMod: return "xmod";
    case Kind::XModMorphism: return "xmod-morphism";
    case Kind::Cat1: return "cat1";
    case Kind::Cat1Morphism: return "cat1-morphism";
  }
  return "?";
}

std::string_view extension(Kind kind) {
  switch (kind) {
    case Kind::Profile: return ".profile";
    case Kind::Structure: return ".mci";
    case Kind::Morphism: return ".mor";
    case Kind::Action: return ".act";
    case Kind::XMod: return ".xm";
    case Kind::XModMorphism: return ".xmm";
    case Kind::Cat1: return ".cat1";
    case Kind::Cat1Morphism: return ".c1m";
  }
  return "";
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
  std::string raw;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}, std::string(raw)};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

class Workspace::Parser {
 public:
  Parser(Workspace& ws, std::string_view text, fs::path dir) : ws_(ws), lines_(tokenize(text)), dir_(std::move(dir)) {}

  std::vector<std::pair<Kind, std::string>> run() {
    std::vector<std::pair<Kind, std::string>> defined;
    while (pos_ < lines_.size()) {
      const Line& head = lines_[pos_];
      const std::string& word = head.tokens[0].text;
      if (word == "profile") defined.emplace_back(Kind::Profile, parse_profile());
      else if (word == "structure") defined.emplace_back(Kind::Structure, parse_structure());
      else if (word == "morphism") defined.emplace_back(Kind::Morphism, parse_morphism());
      else if (word == "action") defined.emplace_back(Kind::Action, parse_action());
      else if (word == "xmod") defined.emplace_back(Kind::XMod, parse_xmod());
      else if (word == "xmod-morphism") defined.emplace_back(Kind::XModMorphism, parse_xmod_morphism());
      else if (word == "cat1") defined.emplace_back(Kind::Cat1, parse_cat1());
      else if (word == "cat1-morphism") defined.emplace_back(Kind::Cat1Morphism, parse_cat1_morphism());
      else fail(head, 0, "unknown block '" + word + "'");
    }
    return defined;
  }

 private:
  [[noreturn]] void fail(const Line& line, std::size_t token, const std::string& message) const {
    const std::size_t column = token < line.tokens.size() ? line.tokens[token].column : line.raw.size() + 1;
    throw ParseError(message, line.number, column);
  }

  [[noreturn]] void fail_eof(const std::string& message) const {
    const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
    throw ParseError(message, line, 1);
  }

  const Line& next(const std::string& expecting) {
    if (pos_ >= lines_.size()) fail_eof("unexpected end of input, expected " + expecting);
    return lines_[pos_++];
  }

  void expect_arity(const Line& line, std::size_t n, const std::string& form) const {
    if (line.tokens.size() != n) fail(line, std::min(n, line.tokens.size()), "expected '" + form + "'");
  }

  // `<kind> NAME : A -> B` or `action NAME : A on B`.
  std::array<std::string, 3> arrow_header(const Line& line, const std::string& joiner, const std::string& form) {
    if (line.tokens.size() != 6 || line.tokens[2].text != ":" || line.tokens[4].text != joiner)
      fail(line, 1, "expected '" + form + "'");
    return {line.tokens[1].text, line.tokens[3].text, line.tokens[5].text};
  }

  template <class F>
  auto resolve(const Line& line, std::size_t token, F&& get) -> decltype(get()) {
    try {
      return get();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(line, token, e.what());
    }
  }

  std::vector<Elem> row(const Line& line, const Structure& s, std::size_t n) const {
    if (line.tokens.size() != n)
      fail(line, std::min(line.tokens.size(), n),
           "row has " + std::to_string(line.tokens.size()) + " entries, expected " + std::to_string(n));
    std::vector<Elem> out;
    for (std::size_t i = 0; i < n; ++i) {
      auto id = s.find(line.tokens[i].text);
      if (!id) fail(line, i, "undeclared element '" + line.tokens[i].text + "' of " + s.name);
      out.push_back(*id);
    }
    return out;
  }

  Table table(const Structure& entries, std::size_t rows, std::size_t cols, const std::string& what) {
    Table t(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Line& line = next(std::to_string(rows) + " rows for " + what);
      const auto values = row(line, entries, cols);
      for (std::size_t c = 0; c < cols; ++c) t(r, c) = values[c];
    }
    return t;
  }

  template <class Map, class Same>
  void define(Map& map, const std::string& name, typename Map::mapped_type value, const Line& head, Same same) {
    auto it = map.find(name);
    if (it != map.end()) {
      if (!same(it->second, value)) fail(head, 1, "conflicting definition of '" + name + "'");
      return;
    }
    map.emplace(name, std::move(value));
  }

  std::string parse_profile() {
    const Line& head = next("profile");
    expect_arity(head, 2, "profile NAME");
    auto profile = std::make_shared<VarietyProfile>(head.tokens[1].text);
    for (;;) {
      const Line& line = next("end");
      const std::string& word = line.tokens[0].text;
      if (word == "end") {
        expect_arity(line, 1, "end");
        break;
      }
      try {
        if (word == "binary") {
          expect_arity(line, 3, "binary SYMBOL OPPOSITE");
          profile->add_binary(line.tokens[1].text, line.tokens[2].text);
        } else if (word == "unary") {
          expect_arity(line, 3, "unary SYMBOL S|D");
          auto cls = unary_class_from(line.tokens[2].text);
          if (!cls) fail(line, 2, "unary class must be S or D");
          profile->add_unary(line.tokens[1].text, *cls);
        } else if (word == "identity") {
          std::size_t eq = 0;
          for (std::size_t i = 2; i < line.tokens.size(); ++i)
            if (line.tokens[i].text == "=") eq = i;
          if (line.tokens.size() < 5 || eq < 3 || eq + 1 >= line.tokens.size())
            fail(line, 1, "expected 'identity NAME LHS = RHS'");
          const std::string& raw = line.raw;
          const std::size_t lhs_from = line.tokens[2].column - 1, lhs_to = line.tokens[eq].column - 1;
          const std::size_t rhs_from = line.tokens[eq + 1].column - 1;
          profile->add_identity(line.tokens[1].text, raw.substr(lhs_from, lhs_to - lhs_from),
                                raw.substr(rhs_from));
        } else {
          fail(line, 0, "expected binary, unary, identity or end");
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(line, 1, e.what());
      }
    }
    const std::string name = head.tokens[1].text;
    if (builtin_profile(name)) fail(head, 1, "'" + name + "' is a built-in profile");
    define(ws_.profiles_, name, profile, head, [](const ProfilePtr& a, const ProfilePtr& b) { return *a == *b; });
    return name;
  }

  std::string parse_structure() {
    const Line& head = next("structure");
    expect_arity(head, 2, "structure NAME");
    Structure s;
    s.name = head.tokens[1].text;

    const Line& pline = next("profile");
    if (pline.tokens[0].text != "profile") fail(pline, 0, "expected 'profile NAME'");
    expect_arity(pline, 2, "profile NAME");
    s.profile = resolve(pline, 1, [&] { return ws_.profile_from(pline.tokens[1].text, dir_); });

    const Line& eline = next("elements");
    if (eline.tokens[0].text != "elements" || eline.tokens.size() < 2) fail(eline, 0, "expected 'elements ID...'");
    for (std::size_t i = 1; i < eline.tokens.size(); ++i) {
      const std::string& id = eline.tokens[i].text;
      for (const auto& seen : s.elements)
        if (seen == id) fail(eline, i, "duplicate element '" + id + "'");
      s.elements.push_back(id);
    }
    const std::size_t n = s.size();
    const auto& profile = *s.profile;
    std::optional<Elem> zero;
    bool have_add = false, have_neg = false;
    std::vector<bool> have_star(profile.binary().size(), false), have_unary(profile.unary().size(), false);
    s.add = Table(n, n);
    s.neg.assign(n, 0);
    s.star.assign(profile.binary().size(), Table(n, n));
    s.unary.assign(profile.unary().size(), UnaryTable(n));
    for (;;) {
      const Line& line = next("end");
      const std::string& word = line.tokens[0].text;
      if (word == "end") {
        expect_arity(line, 1, "end");
        break;
      }
      if (word == "zero") {
        expect_arity(line, 2, "zero ID");
        auto id = s.find(line.tokens[1].text);
        if (!id) fail(line, 1, "undeclared element '" + line.tokens[1].text + "'");
        zero = *id;
        continue;
      }
      expect_arity(line, 1, word);
      if (word == "add") {
        if (have_add) fail(line, 0, "duplicate table 'add'");
        have_add = true;
        s.add = table(s, n, n, "add");
      } else if (word == "neg") {
        if (have_neg) fail(line, 0, "duplicate table 'neg'");
        have_neg = true;
        s.neg = row(next("neg row"), s, n);
      } else if (auto b = profile.binary_index(word)) {
        if (!profile.binary()[*b].primary)
          fail(line, 0, "'" + word + "' is the opposite of '" + profile.binary()[profile.opposite(*b)].symbol +
                            "' and is derived from it");
        if (have_star[*b]) fail(line, 0, "duplicate table '" + word + "'");
        have_star[*b] = true;
        s.star[*b] = table(s, n, n, word);
      } else if (auto u = profile.unary_index(word)) {
        if (have_unary[*u]) fail(line, 0, "duplicate table '" + word + "'");
        have_unary[*u] = true;
        s.unary[*u] = row(next(word + " row"), s, n);
      } else {
        fail(line, 0, "'" + word + "' is not an operation of profile " + profile.name());
      }
    }
    const Line& end = lines_[pos_ - 1];
    if (!have_add) fail(end, 0, "missing table 'add'");
    for (std::size_t b = 0; b < have_star.size(); ++b)
      if (profile.binary()[b].primary && !have_star[b]) fail(end, 0, "missing table '" + profile.binary()[b].symbol + "'");
    for (std::size_t u = 0; u < have_unary.size(); ++u)
      if (!have_unary[u]) fail(end, 0, "missing table '" + profile.unary()[u].symbol + "'");
    if (!zero) {
      std::vector<Elem> idempotents;
      for (Elem x = 0; x < n; ++x)
        if (s.add(x, x) == x) idempotents.push_back(x);
      if (idempotents.size() != 1) fail(end, 0, "cannot infer the zero element; add a 'zero ID' line");
      zero = idempotents.front();
    }
    s.zero = *zero;
    if (!have_neg)
      for (Elem x = 0; x < n; ++x) {
        s.neg[x] = s.zero;
        for (Elem y = 0; y < n; ++y)
          if (s.add(x, y) == s.zero) {
            s.neg[x] = y;
            break;
          }
      }
    s.fill_opposites();
    const std::string name = s.name;
    StructurePtr frozen = resolve(head, 1, [&] { return freeze(std::move(s)); });
    define(ws_.structures_, name, frozen, head,
           [](const StructurePtr& a, const StructurePtr& b) { return same_structure(*a, *b); });
    return name;
  }

  std::string parse_morphism() {
    const Line& head = next("morphism");
    const auto [name, dom_name, cod_name] = arrow_header(head, "->", "morphism NAME : DOM -> COD");
    StructurePtr dom = resolve(head, 3, [&] { return ws_.structure_from(dom_name, dir_); });
    StructurePtr cod = resolve(head, 5, [&] { return ws_.structure_from(cod_name, dir_); });
    Morphism f{dom, cod, row(next("image row"), *cod, dom->size())};
    expect_end();
    resolve(head, 1, [&] {
      f.validate_shape();
      return 0;
    });
    define(ws_.morphisms_, name, f, head, [](const Morphism& a, const Morphism& b) { return same_morphism(a, b); });
    return name;
  }

  void expect_end() {
    const Line& line = next("end");
    if (line.tokens[0].text != "end") fail(line, 0, "expected 'end'");
    expect_arity(line, 1, "end");
  }

  std::string parse_action() {
    const Line& head = next("action");
    const auto [name, actor_name, acted_name] = arrow_header(head, "on", "action NAME : ACTOR on ACTED");
    DerivedAction act;
    act.actor = resolve(head, 3, [&] { return ws_.structure_from(actor_name, dir_); });
    act.acted = resolve(head, 5, [&] { return ws_.structure_from(acted_name, dir_); });
    const auto& profile = *act.actor->profile;
    const std::size_t nb = act.actor->size(), na = act.acted->size();
    bool have_dot = false;
    std::vector<bool> have(profile.binary().size(), false);
    act.star.assign(profile.binary().size(), Table(nb, na));
    for (;;) {
      const Line& line = next("end");
      const std::string& word = line.tokens[0].text;
      if (word == "end") {
        expect_arity(line, 1, "end");
        break;
      }
      if (word == "dot") {
        expect_arity(line, 1, "dot");
        if (have_dot) fail(line, 0, "duplicate table 'dot'");
        have_dot = true;
        act.dot = table(*act.acted, nb, na, "dot");
      } else if (word == "star") {
        expect_arity(line, 2, "star SYMBOL");
        auto b = profile.binary_index(line.tokens[1].text);
        if (!b) fail(line, 1, "'" + line.tokens[1].text + "' is not a binary operation of " + profile.name());
        if (have[*b]) fail(line, 1, "duplicate table 'star " + line.tokens[1].text + "'");
        have[*b] = true;
        act.star[*b] = table(*act.acted, nb, na, "star " + line.tokens[1].text);
      } else {
        fail(line, 0, "expected dot, star or end");
      }
    }
    const Line& end = lines_[pos_ - 1];
    if (!have_dot) fail(end, 0, "missing table 'dot'");
    for (std::size_t b = 0; b < have.size(); ++b)
      if (!have[b]) fail(end, 0, "missing table 'star " + profile.binary()[b].symbol + "'");
    resolve(head, 1, [&] {
      act.validate_shape();
      return 0;
    });
    define(ws_.actions_, name, act, head, [](const DerivedAction& a, const DerivedAction& b) { return same_action(a, b); });
    return name;
  }

  // Reads `key VALUE` lines until `end`; every key must appear once.
  std::map<std::string, std::pair<std::string, const Line*>> fields(const std::vector<std::string>& required,
                                                                     const std::vector<std::string>& optional) {
    std::map<std::string, std::pair<std::string, const Line*>> out;
    for (;;) {
      const Line& line = next("end");
      const std::string& word = line.tokens[0].text;
      if (word == "end") {
        expect_arity(line, 1, "end");
        break;
      }
      const bool known = std::find(required.begin(), required.end(), word) != required.end() ||
                         std::find(optional.begin(), optional.end(), word) != optional.end();
      if (!known) fail(line, 0, "unexpected field '" + word + "'");
      expect_arity(line, 2, word + " NAME");
      if (out.count(word)) fail(line, 0, "duplicate field '" + word + "'");
      out[word] = {line.tokens[1].text, &line};
    }
    for (const auto& key : required)
      if (!out.count(key)) fail(lines_[pos_ - 1], 0, "missing field '" + key + "'");
    return out;
  }

  void check_level(const std::map<std::string, std::pair<std::string, const Line*>>& f, const std::string& key,
                   const StructurePtr& actual) {
    auto it = f.find(key);
    if (it == f.end()) return;
    StructurePtr named = resolve(*it->second.second, 1, [&] { return ws_.structure_from(it->second.first, dir_); });
    if (!same_structure(*named, *actual))
      fail(*it->second.second, 1, "'" + it->second.first + "' does not match the maps of this block");
  }

  std::string parse_xmod() {
    const Line& head = next("xmod");
    expect_arity(head, 2, "xmod NAME");
    auto f = fields({"boundary", "action"}, {"c1", "c0"});
    const auto& [bname, bline] = f["boundary"];
    const auto& [aname, aline] = f["action"];
    Morphism boundary = resolve(*bline, 1, [&] { return ws_.morphism_from(bname, dir_); });
    DerivedAction action = resolve(*aline, 1, [&] { return ws_.action_from(aname, dir_); });
    check_level(f, "c1", boundary.dom);
    check_level(f, "c0", boundary.cod);
    CrossedModule x = resolve(head, 1, [&] { return make_xmod(boundary, action, head.tokens[1].text); });
    define(ws_.xmods_, x.name, x, head, [](const CrossedModule& a, const CrossedModule& b) { return same_xmod(a, b); });
    return head.tokens[1].text;
  }

  std::string parse_xmod_morphism() {
    const Line& head = next("xmod-morphism");
    const auto [name, src, dst] = arrow_header(head, "->", "xmod-morphism NAME : SRC -> DST");
    XModMorphism m;
    m.src = resolve(head, 3, [&] { return ws_.xmod_from(src, dir_); });
    m.dst = resolve(head, 5, [&] { return ws_.xmod_from(dst, dir_); });
    auto f = fields({"mu1", "mu0"}, {});
    m.mu1 = resolve(*f["mu1"].second, 1, [&] { return ws_.morphism_from(f["mu1"].first, dir_); });
    m.mu0 = resolve(*f["mu0"].second, 1, [&] { return ws_.morphism_from(f["mu0"].first, dir_); });
    resolve(head, 1, [&] {
      m.validate_shape();
      return 0;
    });
    define(ws_.xmod_morphisms_, name, m, head, [](const XModMorphism& a, const XModMorphism& b) {
      return same_xmod(a.src, b.src) && same_xmod(a.dst, b.dst) && same_morphism(a.mu1, b.mu1) &&
             same_morphism(a.mu0, b.mu0);
    });
    return name;
  }

  std::string parse_cat1() {
    const Line& head = next("cat1");
    expect_arity(head, 2, "cat1 NAME");
    auto f = fields({"embed", "source", "target"}, {"big", "base"});
    Cat1Object c;
    c.name = head.tokens[1].text;
    c.embed = resolve(*f["embed"].second, 1, [&] { return ws_.morphism_from(f["embed"].first, dir_); });
    c.source = resolve(*f["source"].second, 1, [&] { return ws_.morphism_from(f["source"].first, dir_); });
    c.target = resolve(*f["target"].second, 1, [&] { return ws_.morphism_from(f["target"].first, dir_); });
    c.big = c.embed.cod;
    c.base = c.embed.dom;
    check_level(f, "big", c.big);
    check_level(f, "base", c.base);
    resolve(head, 1, [&] {
      c.validate_shape();
      return 0;
    });
    define(ws_.cat1s_, c.name, c, head, [](const Cat1Object& a, const Cat1Object& b) { return same_cat1(a, b); });
    return c.name;
  }

  std::string parse_cat1_morphism() {
    const Line& head = next("cat1-morphism");
    const auto [name, src, dst] = arrow_header(head, "->", "cat1-morphism NAME : SRC -> DST");
    Cat1Morphism m;
    m.src = resolve(head, 3, [&] { return ws_.cat1_from(src, dir_); });
    m.dst = resolve(head, 5, [&] { return ws_.cat1_from(dst, dir_); });
    auto f = fields({"phi", "phi_base"}, {});
    m.phi = resolve(*f["phi"].second, 1, [&] { return ws_.morphism_from(f["phi"].first, dir_); });
    m.phi_base = resolve(*f["phi_base"].second, 1, [&] { return ws_.morphism_from(f["phi_base"].first, dir_); });
    resolve(head, 1, [&] {
      m.validate_shape();
      return 0;
    });
    define(ws_.cat1_morphisms_, name, m, head, [](const Cat1Morphism& a, const Cat1Morphism& b) {
      return same_cat1(a.src, b.src) && same_cat1(a.dst, b.dst) && same_morphism(a.phi, b.phi) &&
             same_morphism(a.phi_base, b.phi_base);
    });
    return name;
  }

  Workspace& ws_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  fs::path dir_;
};

Workspace::Workspace(fs::path dir) : dir_(std::move(dir)) {}

std::vector<std::pair<Kind, std::string>> Workspace::load_file(const fs::path& path) {
  const fs::path canonical = fs::weakly_canonical(path);
  if (loading_.count(canonical)) throw Error("circular reference through " + path.string());
  loading_.insert(canonical);
  try {
    auto defined = Parser(*this, read_file(path), path.parent_path()).run();
    loading_.erase(canonical);
    return defined;
  } catch (...) {
    loading_.erase(canonical);
    throw;
  }
}

std::vector<std::pair<Kind, std::string>> Workspace::load_text(std::string_view text, const fs::path& dir) {
  return Parser(*this, text, dir.empty() ? dir_ : dir).run();
}

bool Workspace::has(Kind kind, const std::string& name) const {
  switch (kind) {
    case Kind::Profile: return profiles_.count(name) > 0;
    case Kind::Structure: return structures_.count(name) > 0;
    case Kind::Morphism: return morphisms_.count(name) > 0;
    case Kind::Action: return actions_.count(name) > 0;
    case Kind::XMod: return xmods_.count(name) > 0;
    case Kind::XModMorphism: return xmod_morphisms_.count(name) > 0;
    case Kind::Cat1: return cat1s_.count(name) > 0;
    case Kind::Cat1Morphism: return cat1_morphisms_.count(name) > 0;
  }
  return false;
}

void Workspace::ensure(Kind kind, const std::string& name, const fs::path& dir) {
  if (has(kind, name)) return;
  for (const fs::path& base : {dir, dir_}) {
    const fs::path candidate = base / (name + std::string(extension(kind)));
    if (fs::exists(candidate)) {
      load_file(candidate);
      if (has(kind, name)) return;
    }
  }
  throw Error("unknown " + std::string(to_string(kind)) + " '" + name + "'");
}

ProfilePtr Workspace::profile_from(const std::string& name, const fs::path& dir) {
  if (auto p = builtin_profile(name)) return p;
  ensure(Kind::Profile, name, dir);
  return profiles_.at(name);
}
StructurePtr Workspace::structure_from(const std::string& name, const fs::path& dir) {
  ensure(Kind::Structure, name, dir);
  return structures_.at(name);
}
Morphism Workspace::morphism_from(const std::string& name, const fs::path& dir) {
  ensure(Kind::Morphism, name, dir);
  return morphisms_.at(name);
}
DerivedAction Workspace::action_from(const std::string& name, const fs::path& dir) {
  ensure(Kind::Action, name, dir);
  return actions_.at(name);
}
CrossedModule Workspace::xmod_from(const std::string& name, const fs::path& dir) {
  ensure(Kind::XMod, name, dir);
  return xmods_.at(name);
}
Cat1Object Workspace::cat1_from(const std::string& name, const fs::path& dir) {
  ensure(Kind::Cat1, name, dir);
  return cat1s_.at(name);
}

ProfilePtr Workspace::profile(const std::string& name) { return profile_from(name, dir_); }
StructurePtr Workspace::structure(const std::string& name) { return structure_from(name, dir_); }
Morphism Workspace::morphism(const std::string& name) { return morphism_from(name, dir_); }
DerivedAction Workspace::action(const std::string& name) { return action_from(name, dir_); }
CrossedModule Workspace::xmod(const std::string& name) { return xmod_from(name, dir_); }
XModMorphism Workspace::xmod_morphism(const std::string& name) {
  ensure(Kind::XModMorphism, name, dir_);
  return xmod_morphisms_.at(name);
}
Cat1Object Workspace::cat1(const std::string& name) { return cat1_from(name, dir_); }
Cat1Morphism Workspace::cat1_morphism(const std::string& name) {
  ensure(Kind::Cat1Morphism, name, dir_);
  return cat1_morphisms_.at(name);
}

// ---------------------------------------------------------------------------

namespace {

void write_row(std::string& out, const Structure& s, std::span<const Elem> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += s.label(values[i]);
  }
  out += '\n';
}

void write_table(std::string& out, const Structure& entries, const Table& t) {
  for (std::size_t r = 0; r < t.rows(); ++r) write_row(out, entries, t.row(r));
}

bool is_builtin(const ProfilePtr& p) {
  auto b = builtin_profile(p->name());
  return b && *b == *p;
}

}  // namespace

std::string Writer::fresh(Kind kind, const std::string& wanted) {
  auto& used = used_[kind];
  std::string name = wanted.empty() ? std::string(to_string(kind)) : wanted;
  if (used.count(name)) {
    for (std::size_t k = 2;; ++k) {
      const std::string candidate = name + "_" + std::to_string(k);
      if (!used.count(candidate)) {
        name = candidate;
        break;
      }
    }
  }
  used.insert(name);
  return name;
}

void Writer::add_profile(const ProfilePtr& p) {
  if (is_builtin(p)) return;
  for (const auto& seen : profiles_)
    if (*seen == *p) return;
  profiles_.push_back(p);
  out_ += "profile " + p->name() + "\n";
  for (const auto& b : p->binary())
    if (b.primary) out_ += "binary " + b.symbol + " " + p->binary()[b.opposite].symbol + "\n";
  for (const auto& u : p->unary()) out_ += "unary " + u.symbol + " " + std::string(mci::to_string(u.cls)) + "\n";
  for (const auto& id : p->identities())
    out_ += "identity " + id.name + " " + p->format_term(id.lhs, id.variables) + " = " +
            p->format_term(id.rhs, id.variables) + "\n";
  out_ += "end\n\n";
}

std::string Writer::add(const StructurePtr& s) {
  for (const auto& [seen, name] : structures_)
    if (same_structure(*seen, *s)) return name;
  add_profile(s->profile);
  const std::string name = fresh(Kind::Structure, s->name);
  structures_.emplace_back(s, name);
  const auto& profile = *s->profile;
  out_ += "structure " + name + "\n";
  out_ += "profile " + profile.name() + "\n";
  out_ += "elements";
  for (const auto& e : s->elements) out_ += " " + e;
  out_ += "\n";
  std::vector<Elem> idempotents;
  for (Elem x = 0; x < s->size(); ++x)
    if (s->plus(x, x) == x) idempotents.push_back(x);
  if (idempotents != std::vector<Elem>{s->zero}) out_ += "zero " + s->label(s->zero) + "\n";
  out_ += "add\n";
  write_table(out_, *s, s->add);
  out_ += "neg\n";
  write_row(out_, *s, s->neg);
  for (std::size_t b = 0; b < profile.binary().size(); ++b) {
    if (!profile.binary()[b].primary) continue;
    out_ += profile.binary()[b].symbol + "\n";
    write_table(out_, *s, s->star[b]);
  }
  for (std::size_t u = 0; u < profile.unary().size(); ++u) {
    out_ += profile.unary()[u].symbol + "\n";
    write_row(out_, *s, s->unary[u]);
  }
  out_ += "end\n\n";
  return name;
}

std::string Writer::add(const Morphism& f, const std::string& wanted) {
  for (const auto& [seen, name] : morphisms_)
    if (same_morphism(seen, f)) return name;
  const std::string dom = add(f.dom), cod = add(f.cod);
  const std::string name = fresh(Kind::Morphism, wanted);
  morphisms_.emplace_back(f, name);
  out_ += "morphism " + name + " : " + dom + " -> " + cod + "\n";
  write_row(out_, *f.cod, f.map);
  out_ += "end\n\n";
  return name;
}

std::string Writer::add(const DerivedAction& a, const std::string& wanted) {
  for (const auto& [seen, name] : actions_)
    if (same_action(seen, a)) return name;
  const std::string actor = add(a.actor), acted = add(a.acted);
  const std::string name = fresh(Kind::Action, wanted);
  actions_.emplace_back(a, name);
  out_ += "action " + name + " : " + actor + " on " + acted + "\n";
  out_ += "dot\n";
  write_table(out_, *a.acted, a.dot);
  const auto& profile = *a.actor->profile;
  for (std::size_t b = 0; b < profile.binary().size(); ++b) {
    out_ += "star " + profile.binary()[b].symbol + "\n";
    write_table(out_, *a.acted, a.star[b]);
  }
  out_ += "end\n\n";
  return name;
}

std::string Writer::add(const CrossedModule& x) {
  for (const auto& [seen, name] : xmods_)
    if (same_xmod(seen, x)) return name;
  const std::string c1 = add(x.c1), c0 = add(x.c0);
  const std::string boundary = add(x.boundary, x.name + "_boundary");
  const std::string action = add(x.action, x.name + "_action");
  const std::string name = fresh(Kind::XMod, x.name);
  xmods_.emplace_back(x, name);
  out_ += "xmod " + name + "\nc1 " + c1 + "\nc0 " + c0 + "\nboundary " + boundary + "\naction " + action + "\nend\n\n";
  return name;
}

std::string Writer::add(const XModMorphism& m, const std::string& wanted) {
  const std::string src = add(m.src), dst = add(m.dst);
  const std::string mu1 = add(m.mu1, wanted + "_mu1"), mu0 = add(m.mu0, wanted + "_mu0");
  const std::string name = fresh(Kind::XModMorphism, wanted);
  out_ += "xmod-morphism " + name + " : " + src + " -> " + dst + "\nmu1 " + mu1 + "\nmu0 " + mu0 + "\nend\n\n";
  return name;
}

std::string Writer::add(const Cat1Object& c) {
  for (const auto& [seen, name] : cat1s_)
    if (same_cat1(seen, c)) return name;
  const std::string big = add(c.big), base = add(c.base);
  const std::string embed = add(c.embed, c.name + "_embed");
  const std::string source = add(c.source, c.name + "_source");
  const std::string target = add(c.target, c.name + "_target");
  const std::string name = fresh(Kind::Cat1, c.name);
  cat1s_.emplace_back(c, name);
  out_ += "cat1 " + name + "\nbig " + big + "\nbase " + base + "\nembed " + embed + "\nsource " + source +
          "\ntarget " + target + "\nend\n\n";
  return name;
}

std::string Writer::add(const Cat1Morphism& m, const std::string& wanted) {
  const std::string src = add(m.src), dst = add(m.dst);
  const std::string phi = add(m.phi, wanted + "_phi"), phi_base = add(m.phi_base, wanted + "_phi_base");
  const std::string name = fresh(Kind::Cat1Morphism, wanted);
  out_ += "cat1-morphism " + name + " : " + src + " -> " + dst + "\nphi " + phi + "\nphi_base " + phi_base +
          "\nend\n\n";
  return name;
}

std::string serialize(const StructurePtr& s) {
  Writer w;
  w.add(s);
  return w.str();
}

}  // namespace mci::text
