// Runs the d4 executable as a child process.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(D4_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("d4_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

TEST(Cli, DelIdentityModTranslation) {
  auto f = write("identity2.json", R"({"rank":2,"matrix":[["1","0"],["0","1"]]})");
  auto r = run("del --form " + f + " --mod-translation");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["cells"].size(), 1u);
  EXPECT_EQ(j["cells"][0]["vertices"], json::parse("[[0,0],[0,1],[1,0],[1,1]]"));
}

TEST(Cli, DelIsByteIdenticalAcrossRuns) {
  auto f = write("hex.json", R"({"rank":2,"matrix":[["2","-1"],["-1","2"]]})");
  auto a = run("del --form " + f), b = run("del --form " + f);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["cells"].size(), 6u);
}

TEST(Cli, VerifyDim2) {
  auto r = run("verify --suite dim2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("σ5 = σ1 ∪ σ2"), std::string::npos);
  EXPECT_EQ(json::parse(r.out)["pass"], true);
}

TEST(Cli, Faces) {
  auto r = run("faces");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 64u);
  int bf = 0, rt = 0;
  for (const auto& f : j) (f["orbit"] == "BF" ? bf : rt)++;
  EXPECT_EQ(bf, 48);
  EXPECT_EQ(rt, 16);
}

TEST(Cli, TablesAndFuse) {
  auto t = run("tables --which 2");
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(json::parse(t.out)["pass"], true);
  auto f = run("fuse --coarse dim4.V1capV2 --fine dim4.V1");
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(json::parse(f.out)["fusions"].size(), 6u);
}

TEST(Cli, CatalogAndSample) {
  auto l = run("catalog list");
  ASSERT_EQ(l.code, 0);
  EXPECT_GE(json::parse(l.out).size(), 20u);
  auto s = run("catalog show dim2.V1");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json::parse(s.out)["labels"], json::parse(R"(["e13","e23","e12"])"));
  auto w = run("sample --cone dim2.V1 --weights 1,2,3");
  ASSERT_EQ(w.code, 0);
  EXPECT_EQ(json::parse(w.out)["matrix"], json::parse(R"([["4","-3"],["-3","5"]])"));
}

TEST(Cli, GenWithPiecesAndOutputFile) {
  auto form = write("id.json", R"({"rank":2,"matrix":[[1,0],[0,1]]})");
  auto cell = write("square.json", R"({"vertices":[[0,0],[1,0],[0,1],[1,1]]})");
  auto pieces = write("pieces.json", R"([{"vertices":[[0,0],[1,0],[0,1]]},{"vertices":[[1,0],[0,1],[1,1]]}])");
  auto out = (scratch() / "gen.json").string();
  auto r = run("gen --cell " + cell + " --form " + form + " --pieces " + pieces + " --output " + out);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  auto j = json::parse(in);
  EXPECT_EQ(j["simplicially_generating"], true);
  EXPECT_EQ(j["nilpotency"], "1");
  EXPECT_EQ(j["pieces"].size(), 1u);
}

TEST(Cli, GenNonDelaunayCellExitsOne) {
  auto form = write("hex2.json", R"({"rank":2,"matrix":[[2,-1],[-1,2]]})");
  auto cell = write("tau.json", R"({"vertices":[[0,0],[1,0],[1,2]]})");
  auto r = run("gen --cell " + cell + " --form " + form);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["witness"], json::parse("[1,1]"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("faces --bogus").code, 2);
  EXPECT_EQ(run("tables --which 3").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("catalog show").code, 2);
  EXPECT_EQ(run("catalog show dim5.V1").code, 2);
  EXPECT_EQ(run("sample --cone dim2.V1 --weights 1,0,1").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, MalformedInputExitsTwoWithLocation) {
  auto bad = write("bad.json", R"({"rank":2,"matrix":[["1","0"],["0",true]]})");
  std::string cmd = std::string(D4_CLI) + " del --form " + bad + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_TRUE(p);
  std::string text;
  std::array<char, 512> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) text.append(buf.data(), n);
  int status = pclose(p);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(text.find("bad.json"), std::string::npos) << text;
  EXPECT_NE(text.find("form.matrix[1][1]"), std::string::npos) << text;
  EXPECT_EQ(run("del --form " + (scratch() / "missing.json").string()).code, 2);
  auto truncated = write("trunc.json", R"({"rank":2,"matr)");
  EXPECT_EQ(run("del --form " + truncated).code, 2);
}

}  // namespace
