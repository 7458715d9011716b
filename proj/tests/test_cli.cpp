#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path p = fs::path("cli_scratch") / std::to_string(::getpid());
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int seq = 0;
  fs::path out = scratch_dir() / ("out" + std::to_string(seq));
  fs::path err = scratch_dir() / ("err" + std::to_string(seq));
  ++seq;
  std::string cmd = std::string(TF_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& name) {
  return std::string(TF_DATA_DIR) + "/" + name;
}

fs::path write_scratch(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("basis: dimension on stdout, deterministic JSON artifact") {
  fs::path b1 = scratch_dir() / "triangle_k2_a.json";
  fs::path b2 = scratch_dir() / "triangle_k2_b.json";
  RunResult r1 = run_cli("basis --polytope " + data("triangle.json") +
                         " --k 2 --out " + b1.string());
  CHECK(r1.code == 0);
  CHECK(first_line(r1.out) == "3");
  RunResult r2 = run_cli("basis --polytope " + data("triangle.json") +
                         " --k 2 --out " + b2.string());
  CHECK(r2.code == 0);
  CHECK(slurp(b1) == slurp(b2));
  CHECK(!slurp(b1).empty());

  // the artifact re-loads to the advertised shape
  tf::TangentBasis B = tf::load_basis(b1.string(), 2);
  CHECK(B.k == 2);
  CHECK(B.dim() == 3);
}

TEST_CASE("dim agrees with basis cardinality") {
  RunResult rb = run_cli("basis --polytope " + data("quad.json") + " --k 3");
  RunResult rd = run_cli("dim --polytope " + data("quad.json") + " --k 3");
  CHECK(rb.code == 0);
  CHECK(rd.code == 0);
  CHECK(first_line(rb.out) == first_line(rd.out));
}

TEST_CASE("unconstrained domain basis") {
  RunResult r = run_cli("basis --polytope " + data("m0.json") + " --k 1");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "6");
}

TEST_CASE("fit round trip: --basis file reproduces --k bit for bit") {
  fs::path b = scratch_dir() / "triangle_basis.json";
  REQUIRE(run_cli("basis --polytope " + data("triangle.json") + " --k 2 --out " +
                  b.string())
              .code == 0);
  fs::path f1 = scratch_dir() / "fit_from_k.json";
  fs::path f2 = scratch_dir() / "fit_from_basis.json";
  RunResult r1 = run_cli("fit --polytope " + data("triangle.json") + " --obs " +
                         data("triangle_obs.json") + " --k 2 --out " + f1.string());
  RunResult r2 = run_cli("fit --polytope " + data("triangle.json") + " --obs " +
                         data("triangle_obs.json") + " --basis " + b.string() +
                         " --out " + f2.string());
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(slurp(f1) == slurp(f2));
  CHECK(!slurp(f1).empty());
}

TEST_CASE("fit prints the residual error and honors --eps") {
  RunResult r = run_cli("fit --polytope " + data("triangle.json") + " --obs " +
                        data("triangle_obs.json") + " --eps 0");
  CHECK(r.code == 0);
  CHECK(std::stod(first_line(r.out)) == 0.0);
}

TEST_CASE("interp: zero error through the observations") {
  fs::path f = scratch_dir() / "interp.json";
  RunResult r = run_cli("interp --polytope " + data("triangle.json") + " --obs " +
                        data("triangle_obs.json") + " --out " + f.string());
  CHECK(r.code == 0);
  CHECK(std::stod(first_line(r.out)) == 0.0);
  std::string text = slurp(f);
  CHECK(text.find("\"exact\": true") != std::string::npos);
}

TEST_CASE("check: pipeline vs oracle audit passes on fixtures") {
  RunResult r = run_cli("check --polytope " + data("square.json") + " --k 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("check --basis flags a tampered basis file with exit 5") {
  // constant field (1, 0) is not tangent to the vertical facet
  std::string tampered = R"({
    "k": 1,
    "dim": 1,
    "fields": [[
      [{"exps": [0, 0], "coef": "1"}],
      []
    ]]
  })";
  fs::path p = write_scratch("tampered_basis.json", tampered);
  RunResult r = run_cli("check --polytope " + data("triangle.json") +
                        " --basis " + p.string());
  CHECK(r.code == 5);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.err.find("residue") != std::string::npos);

  // the honest artifact passes
  fs::path b = scratch_dir() / "honest_basis.json";
  REQUIRE(run_cli("basis --polytope " + data("triangle.json") + " --k 2 --out " +
                  b.string())
              .code == 0);
  RunResult ok = run_cli("check --polytope " + data("triangle.json") +
                         " --basis " + b.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit code 2: malformed input and validation failures") {
  fs::path bad = write_scratch("bad.json", "{ this is not json");
  RunResult r = run_cli("basis --polytope " + bad.string() + " --k 2");
  CHECK(r.code == 2);
  CHECK(!r.err.empty());

  // redundant halfspace
  std::string redundant = R"({
    "d": 2,
    "halfspaces": [
      {"normal": ["1", "0"], "offset": "0"},
      {"normal": ["0", "1"], "offset": "0"},
      {"normal": ["-1", "-1"], "offset": "-1"},
      {"normal": ["1", "0"], "offset": "-1"}
    ]
  })";
  fs::path rp = write_scratch("redundant.json", redundant);
  RunResult rr = run_cli("basis --polytope " + rp.string() + " --k 2");
  CHECK(rr.code == 2);
  CHECK(rr.err.find("redundant") != std::string::npos);

  // malformed rational string
  std::string badrat = R"({
    "d": 2,
    "halfspaces": [{"normal": ["1.5.2", "0"], "offset": "0"}]
  })";
  fs::path brp = write_scratch("badrat.json", badrat);
  CHECK(run_cli("basis --polytope " + brp.string() + " --k 1").code == 2);

  // missing required flag
  CHECK(run_cli("basis --k 2").code == 2);
  // unknown subcommand
  CHECK(run_cli("frobnicate").code == 2);
  // fit without any of --k/--eps/--basis
  RunResult rf = run_cli("fit --polytope " + data("triangle.json") + " --obs " +
                         data("triangle_obs.json"));
  CHECK(rf.code == 2);
}

TEST_CASE("exit code 3: observation outside the domain") {
  std::string outside = R"({
    "observations": [
      {"x": ["-1/3", "-7/10"], "op": "value", "target": ["0", "0"]}
    ]
  })";
  fs::path p = write_scratch("outside_obs.json", outside);
  RunResult r = run_cli("fit --polytope " + data("triangle.json") + " --obs " +
                        p.string() + " --k 2");
  CHECK(r.code == 3);
  CHECK(r.err.find("outside") != std::string::npos);

  RunResult allowed = run_cli("fit --polytope " + data("triangle.json") +
                              " --obs " + p.string() + " --k 2 --allow-outside");
  CHECK(allowed.code == 0);
}

TEST_CASE("exit code 4: unattainable error bound under a degree cap") {
  RunResult r = run_cli("fit --polytope " + data("triangle.json") + " --obs " +
                        data("triangle_obs.json") + " --eps 1e-30 --kmax 1");
  CHECK(r.code == 4);
  CHECK(r.err.find("cap") != std::string::npos);
  // stdout still reports the best error achieved
  CHECK(std::stod(first_line(r.out)) > 0.0);
}

TEST_CASE("grid: clipped lattice rows satisfy every facet inequality") {
  fs::path b = scratch_dir() / "grid_basis.json";
  REQUIRE(run_cli("basis --polytope " + data("triangle.json") + " --k 2 --out " +
                  b.string())
              .code == 0);
  fs::path csv = scratch_dir() / "grid.csv";
  RunResult r = run_cli("grid --polytope " + data("triangle.json") + " --basis " +
                        b.string() + " --index 0 --grid-res 9 --out " +
                        csv.string());
  CHECK(r.code == 0);
  long count = std::stol(first_line(r.out));
  CHECK(count > 0);

  std::ifstream in(csv);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "x_1,x_2,f_1,f_2");
  long rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double x1, x2, f1, f2;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &x1, &x2, &f1, &f2) == 4);
    CHECK(x1 <= 1e-12);
    CHECK(x2 <= 1e-12);
    CHECK(-x1 - x2 - 1 <= 1e-12);
    ++rows;
  }
  CHECK(rows == count);

  // --fit variant draws the fitted field
  fs::path fitj = scratch_dir() / "grid_fit.json";
  REQUIRE(run_cli("fit --polytope " + data("triangle.json") + " --obs " +
                  data("triangle_obs.json") + " --k 2 --out " + fitj.string())
              .code == 0);
  RunResult g2 = run_cli("grid --polytope " + data("triangle.json") + " --fit " +
                         fitj.string() + " --grid-res 5");
  CHECK(g2.code == 0);
  CHECK(g2.out.find("x_1,x_2,f_1,f_2") != std::string::npos);

  // index out of range
  RunResult g3 = run_cli("grid --polytope " + data("triangle.json") + " --basis " +
                         b.string() + " --index 99 --grid-res 5");
  CHECK(g3.code == 2);

  // --fit and --basis are alternatives, not a combination
  RunResult g4 = run_cli("grid --polytope " + data("triangle.json") + " --fit " +
                         fitj.string() + " --basis " + b.string() + " --index 0");
  CHECK(g4.code == 2);

  // a degenerate lattice is user error, not an internal failure
  RunResult g5 = run_cli("grid --polytope " + data("triangle.json") + " --fit " +
                         fitj.string() + " --grid-res 0");
  CHECK(g5.code == 2);
  CHECK(g5.err.find("grid resolution") != std::string::npos);
}

TEST_CASE("float polytope input: pentagon rationalization is logged and usable") {
  RunResult r = run_cli("dim --polytope " + data("pentagon.json") +
                        " --k 4 --verbose");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "5");
  CHECK(r.err.find("rationalized") != std::string::npos);
}
