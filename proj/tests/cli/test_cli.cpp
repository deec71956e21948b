#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperdet/io.hpp"
#include "hyperdet/polynomial.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HYPERDET_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / ("hyperdet_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, Classify) {
  auto r = run("classify 2,2,3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("class=boundary"), std::string::npos);
  EXPECT_NE(r.out.find("degree=6"), std::string::npos);
  EXPECT_NE(run("classify 2x2x2").out.find("class=inner"), std::string::npos);
  r = run("classify [2,2,5]");
  EXPECT_NE(r.out.find("class=grassman"), std::string::npos);
  EXPECT_NE(r.out.find("pluckerLength=10"), std::string::npos);
}

TEST(Cli, DetQuartic) {
  const auto r = run("det 2,2,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(hyperdet::parse_polynomial(r.out).size(), 12u);
  const auto j = run("det 2,2,2 --json");
  const auto doc = hyperdet::Json::parse(j.out);
  EXPECT_EQ(doc["method"], "pencil");
  EXPECT_EQ(hyperdet::polynomial_from_json(doc["polynomial"]), hyperdet::parse_polynomial(r.out));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("det 2,2,5").code, 2);
  EXPECT_EQ(run("det 3,3,3").code, 2);
  EXPECT_EQ(run("det 2,3,4 --max-terms 100").code, 3);
  EXPECT_EQ(run("det 2,3,4", "HYPERDET_MAX_TERMS=100").code, 3);
  EXPECT_EQ(run("det 2,2,3", "HYPERDET_MAX_TERMS=100").code, 0);
  EXPECT_EQ(run("det 2,2,3 --max-terms 100000", "HYPERDET_MAX_TERMS=1").code, 0);
  EXPECT_EQ(run("det 2,2,3", "HYPERDET_MAX_TERMS=lots").code, 4);
  EXPECT_EQ(run("det no-such-file.json").code, 4);
  EXPECT_EQ(run("det 2,2,3 --unknown-flag").code, 4);
  EXPECT_EQ(run("det 2,2,3 --policy nonsense").code, 4);
  EXPECT_EQ(run("frobnicate 2,2").code, 4);
  const fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << R"({"format":[2,2],"mode":"numeric","entries":[1,2,3]})";
  EXPECT_EQ(run("det " + bad.string()).code, 4);
  std::ofstream(bad) << "not json";
  EXPECT_EQ(run("det " + bad.string()).code, 4);
}

TEST(Cli, MakeDegenerateRoundTrip) {
  const fs::path d = scratch();
  const auto m1 = d / "m1.json", m2 = d / "m2.json";
  ASSERT_EQ(run("make-degenerate 2,2,2 --seed 7 -o " + m1.string()).code, 0);
  ASSERT_EQ(run("make-degenerate 2,2,2 --seed 7 -o " + m2.string()).code, 0);
  EXPECT_EQ(slurp(m1), slurp(m2));
  EXPECT_EQ(slurp(d / "m1.witness.json"), slurp(d / "m2.witness.json"));
  EXPECT_EQ(run("det " + m1.string()).out, "0\n");
  const auto w = d / "w.json";
  ASSERT_EQ(run("make-degenerate 2,2,3 --seed 3 --witness-out " + w.string()).code, 0);
  EXPECT_TRUE(fs::exists(w));
  EXPECT_EQ(run("make-degenerate 2,2,5").code, 2);
}

TEST(Cli, DeterministicAcrossThreads) {
  for (const char* cmd : {"det 2,2,3", "det 3,3,2", "closed-det 2,2,2", "minors 2,2,3", "plucker 2,2,4"}) {
    const auto one = run(std::string(cmd) + " --threads 1");
    EXPECT_EQ(one.code, 0) << cmd;
    EXPECT_EQ(one.out, run(std::string(cmd) + " --threads 2").out) << cmd;
    EXPECT_EQ(one.out, run(std::string(cmd) + " --threads 8").out) << cmd;
  }
}

TEST(Cli, Diagonal) {
  EXPECT_EQ(run("diagonal 2,2,2").out,
            "a[1,1,1]^6*a[1,1,2]^2*a[1,2,1]^2*a[1,2,2]^2*a[2,1,1]^2*a[2,1,2]^2*a[2,2,1]^2*a[2,2,2]^6\n");
  EXPECT_EQ(run("diagonal 4,4").out, "a[1,1]*a[2,2]*a[3,3]*a[4,4]\n");
  EXPECT_EQ(run("diagonal 2,2,2 --variant bogus").code, 4);
}

TEST(Cli, Verify) {
  const auto r = run("verify 2,2,3 --samples 50");
  EXPECT_EQ(r.code, 0);
  const auto doc = hyperdet::Json::parse(r.out);
  EXPECT_TRUE(doc["passed"].get<bool>());
  for (const auto& c : doc["checks"]) EXPECT_EQ(c["status"], "pass") << c["name"];
}

TEST(Cli, CorankAndPlucker) {
  const fs::path f = scratch() / "c.json";
  std::ofstream(f) << R"({"format":[2,2,4],"mode":"numeric","entries":[1,0,0,0,0,0,0,0,0,0,0,0,0,1,0,0]})";
  EXPECT_EQ(run("corank " + f.string()).out, "rank=2\ncorankOne=true\n");
  EXPECT_EQ(run("corank 2,2,4").code, 2);
  const auto p = run("plucker 2,2,5 --json");
  EXPECT_EQ(hyperdet::Json::parse(p.out)["coordinates"].size(), 10u);
}

TEST(Cli, OutputFile) {
  const fs::path f = scratch() / "out.txt";
  EXPECT_EQ(run("det 2,2 -o " + f.string()).out, "");
  EXPECT_EQ(slurp(f), run("det 2,2").out);
}
