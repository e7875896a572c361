#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mci/cat1.hpp"

namespace mci::text {

enum class Kind { Profile, Structure, Morphism, Action, XMod, XModMorphism, Cat1, Cat1Morphism };

std::string_view to_string(Kind kind);
/// File extension used when a name is looked up on disk.
std::string_view extension(Kind kind);

/// Named objects parsed from text. Names not yet defined are looked up as
/// `<dir>/<name><ext>` next to the file that refers to them.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path dir = ".");

  /// Parses every block of a file and returns the (kind, name) pairs it
  /// defined, in order. Throws ParseError, StructuralError or Error.
  std::vector<std::pair<Kind, std::string>> load_file(const std::filesystem::path& path);
  std::vector<std::pair<Kind, std::string>> load_text(std::string_view text,
                                                      const std::filesystem::path& dir = {});

  ProfilePtr profile(const std::string& name);
  StructurePtr structure(const std::string& name);
  Morphism morphism(const std::string& name);
  DerivedAction action(const std::string& name);
  CrossedModule xmod(const std::string& name);
  XModMorphism xmod_morphism(const std::string& name);
  Cat1Object cat1(const std::string& name);
  Cat1Morphism cat1_morphism(const std::string& name);

  bool has(Kind kind, const std::string& name) const;

 private:
  class Parser;
  void ensure(Kind kind, const std::string& name, const std::filesystem::path& dir);
  ProfilePtr profile_from(const std::string& name, const std::filesystem::path& dir);
  StructurePtr structure_from(const std::string& name, const std::filesystem::path& dir);
  Morphism morphism_from(const std::string& name, const std::filesystem::path& dir);
  DerivedAction action_from(const std::string& name, const std::filesystem::path& dir);
  CrossedModule xmod_from(const std::string& name, const std::filesystem::path& dir);
  Cat1Object cat1_from(const std::string& name, const std::filesystem::path& dir);

  std::filesystem::path dir_;
  std::set<std::filesystem::path> loading_;
  std::map<std::string, ProfilePtr> profiles_;
  std::map<std::string, StructurePtr> structures_;
  std::map<std::string, Morphism> morphisms_;
  std::map<std::string, DerivedAction> actions_;
  std::map<std::string, CrossedModule> xmods_;
  std::map<std::string, XModMorphism> xmod_morphisms_;
  std::map<std::string, Cat1Object> cat1s_;
  std::map<std::string, Cat1Morphism> cat1_morphisms_;
};

/// Serializes objects with their dependencies into one self-contained text,
/// each dependency once. Distinct objects sharing a name are renamed with a
/// numeric suffix.
class Writer {
 public:
  std::string add(const StructurePtr& s);
  std::string add(const Morphism& f, const std::string& name);
  std::string add(const DerivedAction& a, const std::string& name);
  std::string add(const CrossedModule& x);
  std::string add(const XModMorphism& m, const std::string& name);
  std::string add(const Cat1Object& c);
  std::string add(const Cat1Morphism& m, const std::string& name);

  const std::string& str() const noexcept { return out_; }

 private:
  std::string fresh(Kind kind, const std::string& wanted);
  void add_profile(const ProfilePtr& p);

  std::string out_;
  std::map<Kind, std::set<std::string>> used_;
  std::vector<ProfilePtr> profiles_;
  std::vector<std::pair<StructurePtr, std::string>> structures_;
  std::vector<std::pair<Morphism, std::string>> morphisms_;
  std::vector<std::pair<DerivedAction, std::string>> actions_;
  std::vector<std::pair<CrossedModule, std::string>> xmods_;
  std::vector<std::pair<Cat1Object, std::string>> cat1s_;
};

/// Canonical text of a single structure (with a profile block first when
/// the profile is not built in).
std::string serialize(const StructurePtr& s);

}  // namespace mci::text
