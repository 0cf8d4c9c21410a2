#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(DP4_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string input(const std::string& name) { return std::string(DP4_SOURCE_DIR) + "/examples/inputs/" + name; }

}  // namespace

TEST(Cli, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("family").code, 2);
}

TEST(Cli, MissingOrMalformedInputIsExitThree) {
  EXPECT_EQ(run("pencil analyze --input missing.json").code, 3);
  const std::string bad = testing::TempDir() + "bad.json";
  std::ofstream(bad) << "{\"P\": [[1,2]";
  EXPECT_EQ(run("pencil analyze --input " + bad).code, 3);
  std::ofstream(bad) << "{\"P\": [[\"1\"]], \"Q\": [[\"1\"]]}";
  EXPECT_EQ(run("pencil analyze --input " + bad).code, 3);
}

TEST(Cli, PencilAnalyze) {
  const CliRun r = run("pencil analyze --input " + input("pencil_smooth.json"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["label"], "smooth");
  EXPECT_EQ(j["spectral"]["coeffs"], json({"1", "10", "35", "50", "24", "0"}));
  EXPECT_EQ(j["profile"].size(), 5u);
  EXPECT_EQ(json::parse(run("pencil analyze --input " + input("pencil_boundary.json")).out)["label"], "boundary-U");
}

TEST(Cli, QuinticInvariants) {
  const CliRun r = run("quintic invariants --normalize --input " + input("quintic.json"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["stability"], "all-simple");
  EXPECT_EQ(j["J4"], "0");
  EXPECT_EQ(j["moduli"]["chart"], "J8");
  const json raw = json::parse(run("quintic invariants --input " + input("quintic.json")).out);
  EXPECT_EQ(raw["moduli"], json({"0", "8000", "0"}));
}

TEST(Cli, LinesReportMatchesGolden) {
  const CliRun r = run("lines report");
  ASSERT_EQ(r.code, 0);
  std::ifstream g(std::string(DP4_SOURCE_DIR) + "/data/golden/v1/lines_report.json");
  EXPECT_EQ(json::parse(r.out), json::parse(g));
}

TEST(Cli, FamilyAnalyzeCompleteIntersection) {
  const CliRun r = run("family analyze --input " + input("family_ci_h10.json"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["height"], 10);
  EXPECT_EQ(j["discriminant"]["degree"], 20);
  EXPECT_EQ(j["spectral_class"]["genus"], 6);
  EXPECT_EQ(j["genericity"]["G2'"], "certified");
}

TEST(Cli, ScanHeights) {
  const CliRun r = run("family scan-heights --max 20");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["heights"].size(), 11u);
  EXPECT_FALSE(j["heights"][1]["admissible"]);            // h = 2
  EXPECT_EQ(j["heights"][2]["genera"], json({0}));        // h = 4
  EXPECT_FALSE(j["heights"][3]["irreducible_admissible"]);  // h = 6
  for (std::size_t i = 4; i < 11; ++i) EXPECT_TRUE(j["heights"][i]["irreducible_admissible"]);
}

TEST(Cli, Classify) {
  EXPECT_EQ(json::parse(run("classify --height 8 --torsion 1,2").out)["label"], "W-component-A");
  EXPECT_EQ(json::parse(run("classify --height 8 --torsion 1,2,3,4,5,6").out)["label"], "W-component-B");
  EXPECT_EQ(json::parse(run("classify --height 12 --torsion 3,7").out)["label"], "W-single");
  EXPECT_EQ(json::parse(run("classify --height 6").out)["label"], "empty");
  EXPECT_EQ(run("classify --height 9").code, 3);
  EXPECT_EQ(run("classify --height 8 --torsion 1,2,3").code, 3);
  const json q1 = json::parse(run("classify --height 10 --quintic " + input("theta_quintic.json") + " --eta " + input("theta_eta_q1.json")).out);
  EXPECT_EQ(q1["theta"]["q"], 1);
  EXPECT_EQ(q1["label"], "W-component-B");
  const json q0 = json::parse(run("classify --height 10 --quintic " + input("theta_quintic.json") + " --eta " + input("theta_eta_q0.json")).out);
  EXPECT_EQ(q0["label"], "W-component-A");
}

TEST(Cli, ExamplesBuildIsDeterministic) {
  const CliRun a = run("examples build h10_ci --seed 1"), b = run("examples build h10_ci --seed 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"]) << c["check"];
  const std::string path = testing::TempDir() + "fam.json";
  ASSERT_EQ(run("examples build h10_ci --seed 1 --out " + path).code, 0);
  std::ifstream f(path);
  const json built = json::parse(f);
  const std::string fam = testing::TempDir() + "fam_only.json";
  std::ofstream(fam) << built["family"].dump();
  const json analyzed = json::parse(run("family analyze --input " + fam).out);
  EXPECT_EQ(analyzed["discriminant"]["degree"], 20);
}

TEST(Cli, ExamplesVerifyAll) {
  const CliRun r = run("examples verify-all --seeds 1..2 --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyUmbrellaCommand) {
  const CliRun r = run("verify paper-checks --seed 7");
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["all_pass"]);
  EXPECT_EQ(j["checks"].size(), 10u);
  EXPECT_EQ(r.out, run("verify paper-checks --seed 7").out);
}
