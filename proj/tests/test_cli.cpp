#include "doctest.h"
#include "testutil.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("GSPLINE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "GSPLINE_BIN must point at the gspline binary");
  return bin;
}

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

std::string write_file(const std::string& name, const std::string& text) {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("gspline_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string c4_file() { return write_file("c4.json", testutil::c4_json()); }

}  // namespace

TEST_CASE("flowup emits the expected json for the contracted square") {
  auto r2 = run("flowup " + c4_file() + " --index 2 --format json");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "{\"index\":2,\"values\":[\"0\",\"8\",\"5\",\"17\"]}\n");
  auto r4 = run("flowup " + c4_file() + " --index 4 --format json");
  CHECK(r4.out == "{\"index\":4,\"values\":[\"0\",\"0\",\"0\",\"18\"]}\n");
}

TEST_CASE("check answers yes for the quadratic spline on the short path") {
  auto g = write_file("fig1.json", testutil::fig1_json());
  auto f = write_file("f.json", R"({"values": ["1", "x+1", "x^2+2*x+1"]})");
  auto r = run("check " + g + " " + f);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "spline: yes\n");

  auto bad = write_file("fbad.json", R"({"values": ["1", "x", "x^2+2*x+1"]})");
  auto rb = run("check " + g + " " + bad + " --format json");
  CHECK(rb.exit_code == 0);
  CHECK(rb.out.find("\"spline\":false") != std::string::npos);
  CHECK(rb.out.find("[2,3]") != std::string::npos);
}

TEST_CASE("human splines print bottom to top") {
  auto r = run("flowup " + c4_file() + " --index 4");
  CHECK(r.out == "flow-up class 4:\nf4 = 18\nf3 = 0\nf2 = 0\nf1 = 0\n");
}

TEST_CASE("trail listing format") {
  auto r = run("trails " + c4_file() + " --vertex 3");
  CHECK(r.out == "l: [5] gcd=5 target=1\nl: [6,9] gcd=3 target=2\n");
  auto alias = run("trails " + c4_file() + " --flow-index 3");
  CHECK(alias.out == r.out);
}

TEST_CASE("exit codes separate input errors from domain errors") {
  CHECK(run("basis /nonexistent/missing.json").exit_code == 2);
  auto path3 = write_file("path3.json",
                          testutil::graph_json("Z", 3, {{1, 2, "2"}, {2, 3, "3"}}));
  CHECK(run("cycle " + path3 + " --index 2").exit_code == 1);
  CHECK(run("cycle " + c4_file() + " --index 4 --method ordered").exit_code == 1);
  CHECK(run("flowup " + c4_file()).exit_code == 2);   // missing --index
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  auto zx = write_file("zx.json", testutil::graph_json("Z", 2, {{1, 2, "x"}}));
  CHECK(run("basis " + zx).exit_code == 2);
}

TEST_CASE("repeated basis runs are byte-identical") {
  std::string cmd = "basis " + c4_file() + " --format json";
  auto a = run(cmd);
  auto b = run(cmd);
  auto c = run(cmd + " --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("\"q_g\":\"2160\"") != std::string::npos);
}

TEST_CASE("json output feeds back into the other subcommands") {
  auto basis_path = write_file("basis_out.json", run("basis " + c4_file() + " --format json").out);
  auto cb = run("check-basis " + c4_file() + " " + basis_path + " --format json");
  CHECK(cb.exit_code == 0);
  CHECK(cb.out ==
        "{\"basis\":true,\"determinant_applicable\":true,\"determinant\":\"2160\","
        "\"determinant_matches\":true}\n");

  auto f2 = write_file("f2_out.json", run("flowup " + c4_file() + " --index 2 --format json").out);
  auto d = run("decompose " + c4_file() + " " + f2 + " --format json");
  CHECK(d.out == "{\"coefficients\":[\"0\",\"1\",\"0\",\"0\"]}\n");
  auto chk = run("check " + c4_file() + " " + f2 + " --format json");
  CHECK(chk.out == "{\"spline\":true,\"violations\":[]}\n");
}

TEST_CASE("cycle comparison report") {
  auto r = run("cycle " + c4_file() + " --index 4 --compare --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"agree\":true") != std::string::npos);
  auto human = run("cycle " + c4_file() + " --index 4 --compare");
  CHECK(human.out.find("agree: yes") != std::string::npos);
}

TEST_CASE("oracle subcommand agrees with the library on the square") {
  auto r = run("oracle " + c4_file() + " --check min-leading --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"match\":true}") != std::string::npos);
  auto t = run("oracle " + c4_file() + " --check trails-equivalence --format json");
  CHECK(t.out.find("\"match\":true}") != std::string::npos);
}

TEST_CASE("environment variables stand in for flags") {
  std::string cmd = "GSPLINE_FORMAT=json " + binary() + " qelem " + c4_file() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  std::string out;
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  CHECK(out == "{\"q_g\":\"2160\"}\n");
}

TEST_CASE("selftest passes for a handful of seeds") {
  for (int seed : {0, 1, 42}) {
    auto r = run("selftest --seed " + std::to_string(seed));
    CAPTURE(seed);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("selftest passed") == 0);
  }
}
