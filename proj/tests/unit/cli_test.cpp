#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mci::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& file) { return (fs::path(MCI_GOLDEN_DIR) / file).string(); }

}  // namespace

TEST_CASE("passing checks exit 0") {
  const Result r = run({"verify", golden("z4.mci")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS structure Z4", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("failing checks exit 1 with a witness") {
  const Result r = run({"check-xmod", golden("broken.xm")});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL xmod broken: XM1.dot") != std::string::npos);
}

TEST_CASE("input problems exit 2") {
  CHECK(run({"verify", golden("nosuch.mci")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"check-xmod", golden("z4.mci")}).code == 2);
  CHECK(run({"--max-size", "2", "square-check", "--xmod", golden("z2z4.xm"), "--along", golden("phi_z2_z4.mor")})
            .code == 2);
}

TEST_CASE("construction output re-verifies") {
  const fs::path dir = fs::temp_directory_path() / "mci_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cat1 = (dir / "z2z4.cat1").string();
  CHECK(run({"to-cat1", golden("z2z4.xm"), "-o", cat1}).code == 0);
  CHECK(run({"check-cat1", cat1}).code == 0);
  const std::string back = (dir / "back.xm").string();
  CHECK(run({"to-xmod", cat1, "-o", back}).code == 0);
  CHECK(run({"check-xmod", back}).code == 0);
  const std::string sd = (dir / "sd.mci").string();
  CHECK(run({"semidirect", golden("inversion.act"), "-o", sd}).code == 0);
  CHECK(run({"verify", sd}).code == 0);
  fs::remove_all(dir);
}

TEST_CASE("named blocks inside bundles") {
  CHECK(run({"check-morphism", golden("slice.xmm") + "#to_terminal"}).code == 0);
  CHECK(run({"check-xmod", golden("slice.xmm") + "#terminal_z4"}).code == 0);
  CHECK(run({"check-xmod", golden("slice.xmm") + "#nosuch"}).code == 2);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"check-universal", "--kind", "terminal", "--base", golden("f2x.mci")};
  const Result a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
