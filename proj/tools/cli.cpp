#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "mci/limits.hpp"
#include "mci/pullback.hpp"
#include "mci/universal.hpp"
#include "mci/verify.hpp"
#include "mci/zoo.hpp"
#include "text.hpp"

namespace mci::cli {

namespace fs = std::filesystem;
using text::Kind;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

int status(const Report& r) { return r.passed() ? kPass : kFail; }
int status(std::initializer_list<const Report*> reports) {
  for (const Report* r : reports)
    if (!r->passed()) return kFail;
  return kPass;
}

// A `file[#name]` reference loaded into its own workspace.
class Loader {
 public:
  text::Workspace& load(const std::string& ref, Kind kind, std::string& name) {
    const auto hash = ref.find('#');
    const fs::path file = ref.substr(0, hash);
    name = hash == std::string::npos ? std::string() : ref.substr(hash + 1);
    text::Workspace& ws = ensure_loaded(file);
    const auto& defined = defined_[file.string()];
    if (name.empty()) {
      for (auto d = defined.rbegin(); d != defined.rend(); ++d)
        if (d->first == kind) {
          name = d->second;
          break;
        }
      if (name.empty()) throw Error(file.string() + " defines no " + std::string(text::to_string(kind)));
    }
    return ws;
  }

  text::Workspace& ensure_loaded(const fs::path& file) {
    auto [it, fresh] = workspaces_.try_emplace(file.string(), file.parent_path());
    if (fresh) defined_[file.string()] = it->second.load_file(file);
    return it->second;
  }

  StructurePtr structure(const std::string& ref) {
    std::string name;
    auto& ws = load(ref, Kind::Structure, name);
    return ws.structure(name);
  }
  Morphism morphism(const std::string& ref) {
    std::string name;
    auto& ws = load(ref, Kind::Morphism, name);
    return ws.morphism(name);
  }
  DerivedAction action(const std::string& ref) {
    std::string name;
    auto& ws = load(ref, Kind::Action, name);
    return ws.action(name);
  }
  CrossedModule xmod(const std::string& ref) {
    std::string name;
    auto& ws = load(ref, Kind::XMod, name);
    return ws.xmod(name);
  }
  XModMorphism xmod_morphism(const std::string& ref) {
    std::string name;
    auto& ws = load(ref, Kind::XModMorphism, name);
    return ws.xmod_morphism(name);
  }
  Cat1Object cat1(const std::string& ref) {
    std::string name;
    auto& ws = load(ref, Kind::Cat1, name);
    return ws.cat1(name);
  }
  Cat1Morphism cat1_morphism(const std::string& ref) {
    std::string name;
    auto& ws = load(ref, Kind::Cat1Morphism, name);
    return ws.cat1_morphism(name);
  }

  /// The kind of the object a reference without a name picks among `kinds`
  /// (the last such block), or of the named object.
  Kind pick(const std::string& ref, std::initializer_list<Kind> kinds) {
    const auto hash = ref.find('#');
    const fs::path file = ref.substr(0, hash);
    ensure_loaded(file);
    const auto& defined = defined_[file.string()];
    const std::string wanted = hash == std::string::npos ? std::string() : ref.substr(hash + 1);
    for (auto d = defined.rbegin(); d != defined.rend(); ++d)
      if (std::find(kinds.begin(), kinds.end(), d->first) != kinds.end() && (wanted.empty() || d->second == wanted))
        return d->first;
    throw Error(ref + " names no morphism");
  }

 private:
  std::map<std::string, text::Workspace> workspaces_;
  std::map<std::string, std::vector<std::pair<Kind, std::string>>> defined_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("cannot write " + path);
}

void print_map(std::ostream& out, const std::string& title, const Morphism& f) {
  out << title << ":";
  for (Elem x = 0; x < f.map.size(); ++x) out << ' ' << f.dom->label(x) << "->" << f.cod->label(f(x));
  out << '\n';
}

void print_precondition(std::ostream& out, const PreconditionError& e) {
  const Check& c = e.witness();
  out << "FAIL " << e.what() << ": " << c.id();
  for (const auto& b : c.witness) out << ' ' << b.label << '=' << b.value;
  out << '\n';
}

struct Options {
  std::size_t max_size = kConstructionSizeGuard;
  std::size_t universal_max = kUniversalSizeGuard;
  std::string input;
  std::string output;
  std::string left;
  std::string right;
  std::string base;
  std::string xmod;
  std::string cat1;
  std::string along;
  std::string kind;
  std::string dir;
  bool slice = false;
  bool no_identities = false;
  std::vector<std::string> testers;
};

int cmd_verify(Loader& ld, const Options& o, std::ostream& out) {
  const Report r = verify_structure(*ld.structure(o.input), VerifyOptions{!o.no_identities});
  r.render(out);
  return status(r);
}

int cmd_check_action(Loader& ld, const Options& o, std::ostream& out) {
  const Report r = check_derived_action(ld.action(o.input));
  r.render(out);
  return status(r);
}

int cmd_semidirect(Loader& ld, const Options& o, std::ostream& out) {
  const DerivedAction act = ld.action(o.input);
  const Report conditions = check_derived_action(act);
  const SemidirectProduct sd = semidirect_product(act);
  const Report object = verify_structure(*sd.object);
  conditions.render(out);
  object.render(out);
  if (!o.output.empty()) {
    text::Writer w;
    w.add(sd.object);
    w.add(sd.inject, sd.object->name + "_inject");
    w.add(sd.project, sd.object->name + "_project");
    w.add(sd.section, sd.object->name + "_section");
    write_file(o.output, w.str());
  }
  return status({&conditions, &object});
}

int cmd_check_xmod(Loader& ld, const Options& o, std::ostream& out) {
  const Report r = verify_xmod(ld.xmod(o.input));
  r.render(out);
  return status(r);
}

int cmd_check_cat1(Loader& ld, const Options& o, std::ostream& out) {
  const Report r = verify_cat1(ld.cat1(o.input));
  r.render(out);
  return status(r);
}

int cmd_check_morphism(Loader& ld, const Options& o, std::ostream& out) {
  switch (ld.pick(o.input, {Kind::Morphism, Kind::XModMorphism, Kind::Cat1Morphism})) {
    case Kind::XModMorphism: {
      const Report r = verify_xmod_morphism(ld.xmod_morphism(o.input));
      r.render(out);
      return status(r);
    }
    case Kind::Cat1Morphism: {
      const Report r = verify_cat1_morphism(ld.cat1_morphism(o.input));
      r.render(out);
      return status(r);
    }
    default: {
      const Morphism f = ld.morphism(o.input);
      Report r("morphism " + f.dom->name + " -> " + f.cod->name);
      if (auto m = is_morphism(f); !m) r.add(*m.violation);
      else r.note("morphism", true);
      r.render(out);
      return status(r);
    }
  }
}

int cmd_to_cat1(Loader& ld, const Options& o, std::ostream& out) {
  const CrossedModule x = ld.xmod(o.input);
  const Report pre = verify_xmod(x);
  if (!pre.passed()) {
    pre.render(out);
    return kFail;
  }
  const Cat1Object c = xmod_to_cat1(x);
  const Report r = verify_cat1(c);
  r.render(out);
  if (!o.output.empty()) {
    text::Writer w;
    w.add(c);
    write_file(o.output, w.str());
  }
  return status(r);
}

int cmd_to_xmod(Loader& ld, const Options& o, std::ostream& out) {
  const Cat1Object c = ld.cat1(o.input);
  const Report pre = verify_cat1(c);
  if (!pre.passed()) {
    pre.render(out);
    return kFail;
  }
  const CrossedModule x = cat1_to_xmod(c);
  const Report r = verify_xmod(x);
  r.render(out);
  if (!o.output.empty()) {
    text::Writer w;
    w.add(x);
    write_file(o.output, w.str());
  }
  return status(r);
}

int cmd_limit(Loader& ld, const Options& o, std::ostream& out) {
  if (o.slice) {
    XModCone cone;
    if (o.kind == "product") cone = slice_product(ld.xmod(o.left), ld.xmod(o.right));
    else if (o.kind == "pullback") cone = slice_pullback(ld.xmod_morphism(o.left), ld.xmod_morphism(o.right));
    else cone = xmod_equalizer(ld.xmod_morphism(o.left), ld.xmod_morphism(o.right));
    std::vector<Report> reports{verify_xmod(cone.object)};
    for (const auto& leg : cone.legs) reports.push_back(verify_xmod_morphism(leg));
    int code = kPass;
    for (const auto& r : reports) {
      r.render(out);
      if (!r.passed()) code = kFail;
    }
    if (!o.output.empty()) {
      text::Writer w;
      w.add(cone.object);
      for (std::size_t i = 0; i < cone.legs.size(); ++i)
        w.add(cone.legs[i], cone.object.name + "_leg" + std::to_string(i + 1));
      write_file(o.output, w.str());
    }
    return code;
  }
  StructurePtr object;
  std::vector<std::pair<Morphism, std::string>> legs;
  if (o.kind == "product") {
    Product p = direct_product(ld.structure(o.left), ld.structure(o.right));
    object = p.object;
    legs = {{p.pi1, "pi1"}, {p.pi2, "pi2"}};
  } else if (o.kind == "pullback") {
    Product p = fiber_product(ld.morphism(o.left), ld.morphism(o.right));
    object = p.object;
    legs = {{p.pi1, "pi1"}, {p.pi2, "pi2"}};
  } else {
    Subobject e = equalizer(ld.morphism(o.left), ld.morphism(o.right));
    object = e.induced;
    legs = {{e.embed, "incl"}};
  }
  const Report r = verify_structure(*object);
  r.render(out);
  if (!o.output.empty()) {
    text::Writer w;
    w.add(object);
    for (const auto& [f, n] : legs) w.add(f, object->name + "_" + n);
    write_file(o.output, w.str());
  }
  return status(r);
}

int cmd_pullback_xmod(Loader& ld, const Options& o, std::ostream& out) {
  const PullbackXMod pb = pullback_xmod(ld.xmod(o.xmod), ld.morphism(o.along));
  const Report object = verify_xmod(pb.object);
  const Report projection = verify_xmod_morphism(pb.projection);
  object.render(out);
  projection.render(out);
  if (!o.output.empty()) {
    text::Writer w;
    w.add(pb.object);
    w.add(pb.projection, pb.object.name + "_projection");
    write_file(o.output, w.str());
  }
  return status({&object, &projection});
}

int cmd_pullback_cat1(Loader& ld, const Options& o, std::ostream& out) {
  const PullbackCat1 pb = pullback_cat1(ld.cat1(o.cat1), ld.morphism(o.along));
  const Report object = verify_cat1(pb.object);
  const Report projection = verify_cat1_morphism(pb.projection);
  object.render(out);
  projection.render(out);
  if (!o.output.empty()) {
    text::Writer w;
    w.add(pb.object);
    w.add(pb.projection, pb.object.name + "_projection");
    write_file(o.output, w.str());
  }
  return status({&object, &projection});
}

int cmd_check_universal(Loader& ld, const Options& o, std::ostream& out) {
  LimitProblem problem;
  StructurePtr base;
  if (o.kind == "terminal" || o.kind == "initial") {
    base = ld.structure(o.base);
    problem.kind = o.kind == "terminal" ? LimitKind::Terminal : LimitKind::Initial;
    problem.candidate.object = o.kind == "terminal" ? slice_terminal(base) : slice_initial(base);
  } else if (o.kind == "product") {
    problem.kind = LimitKind::Product;
    problem.candidate = slice_product(ld.xmod(o.left), ld.xmod(o.right));
  } else {
    const XModMorphism f = ld.xmod_morphism(o.left), g = ld.xmod_morphism(o.right);
    problem.kind = o.kind == "pullback" ? LimitKind::Pullback : LimitKind::Equalizer;
    problem.candidate = o.kind == "pullback" ? slice_pullback(f, g) : xmod_equalizer(f, g);
    problem.diagram = {f, g};
  }
  if (!base) base = problem.candidate.object.c0;
  std::vector<CrossedModule> testers;
  if (o.testers.empty()) {
    testers = zoo::slice_testers(base, o.universal_max);
  } else {
    for (const auto& t : o.testers) testers.push_back(ld.xmod(t));
  }
  const Report candidate = verify_xmod(problem.candidate.object);
  candidate.render(out);
  const Report r = verify_universal_cone(problem, testers, o.universal_max);
  r.render(out);
  return status({&candidate, &r});
}

int cmd_square(Loader& ld, const Options& o, std::ostream& out) {
  const CrossedModule x = ld.xmod(o.xmod);
  const Report pre = verify_xmod(x);
  if (!pre.passed()) {
    pre.render(out);
    return kFail;
  }
  const SquareResult sq = square_commutes(x, ld.morphism(o.along), o.max_size);
  sq.report.render(out);
  if (sq.iso) {
    print_map(out, "iso phi", sq.iso->phi);
    print_map(out, "iso phi_base", sq.iso->phi_base);
  }
  return status(sq.report);
}

int cmd_zoo(const Options& o, std::ostream& out) {
  const auto structures = zoo::standard_structures();
  const auto xmods = zoo::standard_xmods();
  const auto cat1s = zoo::standard_cat1s();
  if (o.dir.empty()) {
    for (const auto& s : structures) out << "structure " << s->name << ' ' << s->size() << '\n';
    for (const auto& x : xmods) out << "xmod " << x.name << ' ' << x.c1->size() << ' ' << x.c0->size() << '\n';
    for (const auto& c : cat1s) out << "cat1 " << c.name << ' ' << c.big->size() << ' ' << c.base->size() << '\n';
    return kPass;
  }
  fs::create_directories(o.dir);
  for (const auto& s : structures) write_file((fs::path(o.dir) / (s->name + ".mci")).string(), text::serialize(s));
  for (const auto& x : xmods) {
    text::Writer w;
    w.add(x);
    write_file((fs::path(o.dir) / (x.name + ".xm")).string(), w.str());
  }
  for (const auto& c : cat1s) {
    text::Writer w;
    w.add(c);
    write_file((fs::path(o.dir) / (c.name + ".cat1")).string(), w.str());
  }
  out << "PASS zoo: wrote " << structures.size() + xmods.size() + cat1s.size() << " files to " << o.dir << '\n';
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groups with operations, crossed modules and cat1-objects", "mci"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-size", o.max_size, "carrier bound for constructions and enumeration")->capture_default_str();

  auto input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("file", o.input, what + " as FILE or FILE#NAME")->required();
  };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "write the result to this file"); };

  auto* verify = app.add_subcommand("verify", "check a structure against its profile");
  input(verify, "structure");
  verify->add_flag("--no-identities", o.no_identities, "skip the profile's declared identities");
  auto* check_action = app.add_subcommand("check-action", "check conditions 1-12 of a derived action");
  input(check_action, "action");
  auto* semidirect = app.add_subcommand("semidirect", "build and verify the semidirect product of an action");
  input(semidirect, "action");
  output(semidirect);
  auto* check_xmod = app.add_subcommand("check-xmod", "verify a crossed module");
  input(check_xmod, "crossed module");
  auto* check_cat1 = app.add_subcommand("check-cat1", "verify a cat1-object");
  input(check_cat1, "cat1-object");
  auto* check_morphism = app.add_subcommand("check-morphism", "verify a morphism, crossed module morphism or cat1-morphism");
  input(check_morphism, "morphism");
  auto* to_cat1 = app.add_subcommand("to-cat1", "cat1-object of a crossed module");
  input(to_cat1, "crossed module");
  output(to_cat1);
  auto* to_xmod = app.add_subcommand("to-xmod", "crossed module of a cat1-object");
  input(to_xmod, "cat1-object");
  output(to_xmod);

  auto* limit = app.add_subcommand("limit", "product, pullback or equalizer of structures or of crossed X-modules");
  limit->add_option("kind", o.kind)->required()->check(CLI::IsMember({"product", "pullback", "equalizer"}));
  limit->add_option("--left", o.left, "first factor or morphism")->required();
  limit->add_option("--right", o.right, "second factor or morphism")->required();
  limit->add_flag("--slice", o.slice, "work with crossed X-modules over a fixed X");
  output(limit);

  auto* pb_xmod = app.add_subcommand("pullback-xmod", "pull a crossed module back along a morphism");
  pb_xmod->add_option("--xmod", o.xmod)->required();
  pb_xmod->add_option("--along", o.along)->required();
  output(pb_xmod);
  auto* pb_cat1 = app.add_subcommand("pullback-cat1", "pull a cat1-object back along a morphism");
  pb_cat1->add_option("--cat1", o.cat1)->required();
  pb_cat1->add_option("--along", o.along)->required();
  output(pb_cat1);

  auto* universal = app.add_subcommand("check-universal", "count mediating morphisms for a slice limit");
  universal->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"product", "pullback", "equalizer", "terminal", "initial"}));
  universal->add_option("--left", o.left, "crossed module (product) or morphism (pullback, equalizer)");
  universal->add_option("--right", o.right);
  universal->add_option("--base", o.base, "structure X (terminal, initial)");
  universal->add_option("--tester", o.testers, "crossed module to test against (default: generated testers)");
  universal->add_option("--tester-max-size", o.universal_max, "carrier bound for testers")->capture_default_str();

  auto* square = app.add_subcommand("square-check", "compare both routes of the pullback square");
  square->add_option("--xmod", o.xmod)->required();
  square->add_option("--along", o.along)->required();

  auto* zoo_cmd = app.add_subcommand("zoo", "list the standard examples or export them as files");
  zoo_cmd->add_option("--export", o.dir, "directory to write the examples to");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  Loader ld;
  try {
    if (verify->parsed()) return cmd_verify(ld, o, out);
    if (check_action->parsed()) return cmd_check_action(ld, o, out);
    if (semidirect->parsed()) return cmd_semidirect(ld, o, out);
    if (check_xmod->parsed()) return cmd_check_xmod(ld, o, out);
    if (check_cat1->parsed()) return cmd_check_cat1(ld, o, out);
    if (check_morphism->parsed()) return cmd_check_morphism(ld, o, out);
    if (to_cat1->parsed()) return cmd_to_cat1(ld, o, out);
    if (to_xmod->parsed()) return cmd_to_xmod(ld, o, out);
    if (limit->parsed()) return cmd_limit(ld, o, out);
    if (pb_xmod->parsed()) return cmd_pullback_xmod(ld, o, out);
    if (pb_cat1->parsed()) return cmd_pullback_cat1(ld, o, out);
    if (universal->parsed()) {
      const bool needs_base = o.kind == "terminal" || o.kind == "initial";
      if (needs_base ? o.base.empty() : (o.left.empty() || o.right.empty()))
        throw Error(needs_base ? "--base is required for " + o.kind : "--left and --right are required for " + o.kind);
      return cmd_check_universal(ld, o, out);
    }
    if (square->parsed()) return cmd_square(ld, o, out);
    if (zoo_cmd->parsed()) return cmd_zoo(o, out);
  } catch (const PreconditionError& e) {
    print_precondition(out, e);
    return kFail;
  } catch (const std::exception& e) {
    out << "ERROR " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace mci::cli
