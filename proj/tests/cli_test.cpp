#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "almost_fourier/error.hpp"
#include "almost_fourier/verify/verify.hpp"

using namespace almost_fourier;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + AF_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<nlohmann::json> lines(const std::string& out) {
  std::vector<nlohmann::json> js;
  std::istringstream is(out);
  for (std::string l; std::getline(is, l);)
    if (!l.empty()) js.push_back(nlohmann::json::parse(l));
  return js;
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("af_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, FamilyCsv) {
  const auto path = tmp("f112.csv");
  auto r = run("family --id F112 --csv " + path.string());
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(),
            "label,\"(1,1)\",\"(g-1,1)\",\"(g-1,eps)\",\"(g,1)\"\n"
            "\"(1,1)\",1,1/2,1/2,1\n"
            "\"(g-1,1)\",1/2,1/2,0,1/2\n"
            "\"(g-1,eps)\",1/2,0,1/2,1/2\n"
            "\"(g,1)\",1,1/2,1/2,1\n");
  std::filesystem::remove(path);
  for (const auto& j : lines(r.out)) EXPECT_EQ(j["status"], "pass") << j.dump();
}

TEST(Cli, HeisSpectrum) {
  auto r = run("heis --n 1 --spectrum");
  EXPECT_EQ(r.code, 0);
  bool seen = false;
  for (const auto& j : lines(r.out)) {
    EXPECT_EQ(j.size(), 5u);
    if (j["name"] == "heis/n=1/char-poly-square") {
      seen = true;
      EXPECT_EQ(j["actual"], "(t-1)^1(t-2)^6(t-4)^3");
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Cli, JsonReport) {
  const auto path = tmp("hecke.json");
  auto r = run("hecke --n 2 --kind d --lambda 2/3 --check relations --json " + path.string());
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["name"], "hecke/n=2/d(lambda=2/3)/relations");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("family").code, 2);
  EXPECT_EQ(run("family --id F99").code, 2);
  EXPECT_EQ(run("heis --n 9").code, 2);
  EXPECT_EQ(run("hecke --n 2 --check everything").code, 2);
  EXPECT_EQ(run("clifford --datum 1:3 --sc SL").code, 2);
  EXPECT_EQ(run("--seed banana verify-all").code, 2);
}

TEST(Cli, CliffordQueries) {
  auto sc = run("clifford --sc Spin --m 1:3,3:3");
  EXPECT_EQ(sc.code, 0);
  EXPECT_EQ(lines(sc.out).at(0)["simply_connected"], false);
  auto ex = run("clifford --exceptional 'E8:D_4(a_1)A_2'");
  EXPECT_EQ(lines(ex.out).at(0)["component_group"], "Z/2");
  auto d = run("clifford --datum 1:1,3:1 --check delta");
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(lines(d.out).at(0)["actual"], "8");
}

TEST(Cli, SeedFromFlagAndEnvironment) {
  auto strip = [](const std::string& out) {
    std::string s;
    for (auto j : lines(out)) {
      j.erase("ms");
      s += j.dump() + "\n";
    }
    return s;
  };
  const std::string args = "clifford --datum 1:3 --check beta";
  const auto base = strip(run(args).out);
  EXPECT_EQ(base, strip(run("--seed 0xC4A7 " + args).out));
  EXPECT_EQ(strip(run(args, "ALMOST_FOURIER_SEED=9").out), strip(run("--seed 9 " + args).out));
  EXPECT_EQ(run(args, "ALMOST_FOURIER_SEED=9").code, 0);
  EXPECT_EQ(run(args, "ALMOST_FOURIER_SEED=banana").code, 2);
}

TEST(Runner, StatusAndErrors) {
  verify::Runner r;
  r.check("a", "1", [] { return std::string("1"); });
  r.check("b", "1", [] { return std::string("2"); });
  r.check("c", "1", []() -> std::string { throw Error(ErrorKind::RelationFailure, "boom"); });
  r.skip("d", "not applicable");
  ASSERT_EQ(r.results().size(), 4u);
  EXPECT_TRUE(r.results()[0].passed());
  EXPECT_EQ(r.results()[1].status, "fail");
  EXPECT_EQ(r.results()[2].actual, "RelationFailure: boom");
  EXPECT_EQ(r.results()[3].status, "skipped");
  EXPECT_EQ(r.failures(), 2u);
  auto j = verify::to_json(r.results()[0], false);
  EXPECT_FALSE(j.contains("ms"));
  EXPECT_EQ(j.begin().key(), "name");
}
