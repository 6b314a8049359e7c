// Exercises the CLI surface: exit codes, output fields, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() { return XGATE_BIN; }

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("gate --lm 0 --lp 0") == 2);                       // null gate
  CHECK(run("gate --lm 1 --lp 2 --input coherent:3 --dim 4") == 4);
  CHECK(run("plan --poly 0,1") == 3);                          // pure X factor
  CHECK(run("nonsense") == 2);
  CHECK(run("gate --lm 1 --lp 2 --input coherent:nope") == 2);
}

TEST_CASE("plan output") {
  const std::string out = "/tmp/xgs_plan_test.json";
  CHECK(run("plan --poly 1,-0,-1 --out " + out) == 0);
  std::string text = slurp(out);
  CHECK(text.find("\"lambdas\"") != std::string::npos);
  CHECK(text.find("\"residual\"") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cubic determinism") {
  const std::string o1 = "/tmp/xgs_cubic_1.json";
  const std::string o2 = "/tmp/xgs_cubic_2.json";
  CHECK(run("cubic --chi 0.1 --out " + o1) == 0);
  CHECK(run("cubic --chi 0.1 --out " + o2) == 0);
  CHECK(slurp(o1) == slurp(o2));
  CHECK(!slurp(o1).empty());
  std::remove(o1.c_str());
  std::remove(o2.c_str());
}

TEST_CASE("cat command reproduces the quoted fidelity") {
  const std::string out = "/tmp/xgs_cat_test.json";
  CHECK(run("cat --beta 3 --nmax 16 --out " + out) == 0);
  std::string text = slurp(out);
  auto pos = text.find("\"fidelity\":");
  REQUIRE(pos != std::string::npos);
  double F = std::stod(text.substr(pos + 11));
  CHECK(F == doctest::Approx(0.993).epsilon(0.002));
  std::remove(out.c_str());
}

TEST_CASE("fig4 default contains the quoted row") {
  const std::string out = "/tmp/xgs_fig4_test.csv";
  CHECK(run("fig4 --out " + out) == 0);
  std::ifstream f(out);
  std::string line;
  bool found = false;
  while (std::getline(f, line)) {
    if (line.rfind("3,16,", 0) == 0) {
      double F = std::stod(line.substr(5));
      CHECK(F == doctest::Approx(0.993).epsilon(0.002));
      found = true;
    }
  }
  CHECK(found);
  std::remove(out.c_str());
}

TEST_CASE("gate command emits F close to the sharp value") {
  const std::string out = "/tmp/xgs_gate_test.json";
  // fixed setup for speed; tiny window approaches the sharp projection
  CHECK(run("gate --lm 1.5 --lp -1.5 --input fock:1 --eta 1 --eps 1e-3 "
            "--dim 24 --T 0.621 --x0 1.0 --theta 0 --out " +
            out) == 0);
  std::string text = slurp(out);
  auto pos = text.find("\"F\":");
  REQUIRE(pos != std::string::npos);
  double F = std::stod(text.substr(pos + 4));
  CHECK(F > 0.99);  // the sharp optimum realizes the trial gate on |1>
  auto ppos = text.find("\"P\":");
  REQUIRE(ppos != std::string::npos);
  CHECK(text.find("\"state\"") != std::string::npos);
  CHECK(text.find("\"config\"") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("fig3 table hits the quoted operating point") {
  const std::string out = "/tmp/xgs_fig3_test.csv";
  CHECK(run("fig3 --input coherent:1 --dim 28 --out " + out) == 0);
  std::ifstream f(out);
  std::string line;
  bool found = false;
  std::getline(f, line);  // comment
  std::getline(f, line);  // header
  CHECK(line == "epsilon,F,P");
  while (std::getline(f, line)) {
    std::stringstream ss(line);
    std::string eps, Fs, Ps;
    std::getline(ss, eps, ',');
    std::getline(ss, Fs, ',');
    std::getline(ss, Ps, ',');
    double F = std::stod(Fs), P = std::stod(Ps);
    if (P >= 0.08 && P <= 0.12 && F >= 0.89) found = true;
  }
  CHECK(found);
  std::remove(out.c_str());
}
