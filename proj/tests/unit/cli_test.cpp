#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "ltlwb/cli/cli.hpp"
#include "ltlwb/cli/verify.hpp"

namespace fs = std::filesystem;
using namespace ltlwb;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ltlwb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("ltlwb_cli_test_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze a formula") {
    Result r = run({"analyze", "F p"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "td=1 nvar=1 fragment=F tw=1 pw=1\n");
  }

  TEST_CASE("analyze a generated two-variable assignment structure") {
    TempDir dir;
    std::string cnf = dir.file("two.cnf", "p cnf 2 1\n1 -2 2 0\n");
    REQUIRE(run({"reduce", "3sat-f", cnf, dir.path("out")}).code == 0);
    Result r = run({"analyze", dir.path("out/structure.kripke")});
    CHECK(r.code == 0);
    CHECK(r.out == "worlds=5 delta=2 tw=2 pw=2\n");
  }

  TEST_CASE("analyze falls back to upper bounds above the limit") {
    Result r = run({"analyze", "(p & q) | (p & r)", "--limit", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("upper-bound") != std::string::npos);
    CHECK(r.out.find("tw<=") != std::string::npos);
  }

  TEST_CASE("analyze a malformed file exits with 2") {
    TempDir dir;
    std::string bad = dir.file("bad.kripke", "world a\nedge a\n");
    CHECK(run({"analyze", bad}).code == cli::kExitUsage);
    CHECK(run({"analyze", "p &"}).code == cli::kExitUsage);
  }

  TEST_CASE("reduce writes the target files") {
    TempDir dir;
    std::string in = dir.file("uniform.sq", "colors a\ntile a a a a\nk 11\n");
    Result r = run({"reduce", "sqtile-x", in, dir.path("out")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("cert td=6 ", 0) == 0);
    for (const char* f : {"formula.ltl", "structure.kripke", "witness.dec", "cert.txt"})
      CHECK_MESSAGE(fs::exists(dir.path(std::string("out/") + f)), f);
    CHECK(slurp(dir.path("out/cert.txt")) == r.out);
    CHECK(slurp(dir.path("out/witness.dec")).rfind("# graph: syntax\n", 0) == 0);
  }

  TEST_CASE("reduce 3sat-f certifies width three") {
    TempDir dir;
    std::string in = dir.file("two.cnf", "p cnf 2 2\n1 2 2 0\n-1 -2 1 0\n");
    Result r = run({"reduce", "3sat-f", in, dir.path("out")});
    CHECK(r.code == 0);
    CHECK(r.out == "cert td=1 delta=2 nvar=4 width=3\n");
    CHECK(slurp(dir.path("out/witness.dec")).rfind("# graph: structure\n", 0) == 0);
  }

  TEST_CASE("reduce rejects invalid input") {
    TempDir dir;
    std::string overlap = dir.file("o.pw", "p cnf 2 1\n1 2 0\npartition 1 1 2\npartition 2 2\n"
                                           "capacity 1 1\ncapacity 2 1\n");
    CHECK(run({"reduce", "pwsat", overlap, dir.path("out")}).code == cli::kExitUsage);
    std::string ok = dir.file("ok.pw", "p cnf 2 1\n1 2 0\npartition 1 1 2\ncapacity 1 1\n");
    CHECK(run({"reduce", "nosuch", ok, dir.path("out")}).code == cli::kExitUsage);
    CHECK(run({"reduce", "pwsat", ok, dir.path("out"), "--target", "X"}).code == cli::kExitUsage);
    Result r = run({"reduce", "pwsat", ok, dir.path("out"), "--target", "U"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("cert td=3 delta=- ", 0) == 0);
    CHECK_FALSE(fs::exists(dir.path("out/structure.kripke")));
  }

  TEST_CASE("check modes") {
    TempDir dir;
    std::string loop = dir.file("loop.kripke", "world w p\nedge w w\ninit w\n");
    CHECK(run({"check", "sat", "p & !p"}).out == "unsat\n");
    CHECK(run({"check", "sat", "F p"}).out == "sat\n");
    CHECK(run({"check", "mc", loop, "G p"}).out == "true\n");
    CHECK(run({"check", "mc", loop, "F !p"}).out == "false\n");
    CHECK(run({"check", "brute", loop, "G p", "--bound", "3"}).out == "true\n");
    CHECK(run({"check", "mc-x", loop, "X X p"}).out == "true\n");
    CHECK(run({"check", "sat-x", "X p & X !p"}).out == "unsat\n");
    CHECK(run({"check", "mc-x", loop, "F p"}).code == cli::kExitUsage);
    CHECK(run({"check", "sat-x", "p U q"}).code == cli::kExitUsage);
    CHECK(run({"check", "mc", loop}).code == cli::kExitUsage);
    CHECK(run({"check", "mc", loop, "p", "--world", "nowhere"}).code == cli::kExitUsage);
  }

  TEST_CASE("check writes witness lassos") {
    TempDir dir;
    std::string two = dir.file("two.kripke", "world a p\nworld b\nedge a b\nedge b a\nedge a a\ninit a\n");
    Result r = run({"check", "mc", two, "G p", "--witness", dir.path("cex.lasso")});
    CHECK(r.out == "false\n");
    CHECK(fs::exists(dir.path("cex.lasso")));
    Result s = run({"check", "sat", "F p & G !q", "--witness", dir.path("w.lasso")});
    CHECK(s.out == "sat\n");
    CHECK(fs::exists(dir.path("w.lasso")));
    CHECK(fs::exists(dir.path("w.lasso.kripke")));
  }

  TEST_CASE("oracle command") {
    TempDir dir;
    CHECK(run({"oracle", "cnf", dir.file("a.cnf", "p cnf 1 2\n1 0\n-1 0\n")}).out == "unsat\n");
    CHECK(run({"oracle", "pwsat", dir.file("a.pw", "p cnf 2 1\n1 2 0\npartition 1 1 2\ncapacity 1 2\n")}).out ==
          "sat\nassign 1 1\nassign 2 1\n");
    CHECK(run({"oracle", "sqtile", dir.file("b.sq", "colors a b\ntile a b a a\nk 11\n")}).out == "no\n");
    Result r = run({"oracle", "recttile", dir.file("c.rt", "colors a b\ntile a b b b\ntile b a b b\nbounds a a\n")});
    CHECK(r.out.rfind("yes\nm 2\n", 0) == 0);
  }

  TEST_CASE("verify examples") {
    Result ok = run({"verify", "3sat-f", "--exhaustive", "vars=2", "clauses=2"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.out.find("disagree=0 invalid-witness=0") != std::string::npos);
    Result sq = run({"verify", "sqtile-u", "--colors", "2", "--tiles", "2", "--k", "2", "--exhaustive"});
    CHECK(sq.code == cli::kExitOk);
    CHECK(sq.out.find("instances=136 ") != std::string::npos);
    Result mut = run({"verify", "3sat-f", "--exhaustive", "vars=2", "clauses=2", "--mutate", "drop-conjunct"});
    CHECK(mut.code == cli::kExitDisagreement);
  }

  TEST_CASE("verify reports are deterministic and timings stay on stderr") {
    Result a = run({"verify", "recttile-u", "count=20", "tiles=2", "--seed", "7"});
    Result b = run({"verify", "recttile-u", "count=20", "tiles=2", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("_ms") == std::string::npos);
    CHECK(a.err.find("time family=recttile-u") != std::string::npos);
    Result c = run({"verify", "recttile-u", "count=20", "tiles=2", "--seed", "8"});
    CHECK(c.out != a.out);
  }

  TEST_CASE("verify usage errors") {
    CHECK(run({"verify", "nosuch"}).code == cli::kExitUsage);
    CHECK(run({"verify", "pwsat", "vars"}).code == cli::kExitUsage);
    CHECK(run({"verify", "pwsat", "bogus=1"}).code == cli::kExitUsage);
    CHECK(run({"verify", "pwsat", "--mutate", "other"}).code == cli::kExitUsage);
  }

  TEST_CASE("usage errors and help") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({"check", "--help"}).code == cli::kExitOk);
  }

  TEST_CASE("verify families and generators") {
    CHECK(cli::all_families().size() == 10);
    for (cli::Family f : cli::all_families()) CHECK(cli::parse_family(cli::family_name(f)) == f);
    CHECK(cli::all_3cnfs(3, 2).size() == 1896);
    CHECK(cli::all_square_tilings(2, 2, 2).size() == 136);
    CHECK(cli::all_rect_tilings(2, 2).size() == 544);
    CHECK(cli::all_pwsat(3, 2, 2).size() == 7980);
  }

  TEST_CASE("the installed binary honours the exit code contract") {
    std::string bin = LTLWB_BINARY;
    auto status = [&](const std::string& args) {
      int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
      return WEXITSTATUS(raw);
    };
    CHECK(status("analyze 'F p'") == 0);
    CHECK(status("analyze 'p &'") == 2);
    CHECK(status("verify 3sat-x --exhaustive vars=2 clauses=2 --mutate drop-conjunct") == 1);
  }
}
