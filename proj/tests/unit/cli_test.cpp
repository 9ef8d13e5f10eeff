#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "sccadl/cli.hpp"

namespace sccadl {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string valid(const std::string& name) { return testing::fixture("valid/" + name).string(); }

fs::path work(const std::string& name) {
  fs::path p = fs::path(SCCADL_WORK_DIR) / "cli" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

fs::path write(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

TEST(Cli, CheckValid) {
  Outcome r = run({"check", valid("fire.scc")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, CheckInvalidPrintsDiagnostics) {
  Outcome r = run({"check", testing::fixture("invalid/E004_cycle.scc").string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("E004 error "), std::string::npos);
  EXPECT_NE(r.err.find("E004_cycle.scc:3:9"), std::string::npos);
}

TEST(Cli, CheckWarningsStillSucceed) {
  Outcome r = run({"check", valid("unused_source.scc")});
  EXPECT_EQ(r.code, kExitOk);
}

TEST(Cli, MissingFileIsE040) {
  Outcome r = run({"check", "/nonexistent/arch.scc"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("E040"), std::string::npos);
}

TEST(Cli, JsonReportForEmptyModel) {
  const fs::path dir = work("empty");
  const fs::path file = write(dir / "empty.scc", "");
  Outcome r = run({"--json", "check", file.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"diagnostics\":[],\"ok\":true}\n");
  Outcome after = run({"check", file.string(), "--json"});
  EXPECT_EQ(after.out, r.out);
}

TEST(Cli, JsonDiagnostics) {
  Outcome r = run({"--json", "check", testing::fixture("invalid/E001_unknown_activation.scc").string()});
  EXPECT_EQ(r.code, kExitFailure);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["ok"].get<bool>());
  ASSERT_EQ(j["diagnostics"].size(), 1u);
  const json& d = j["diagnostics"][0];
  EXPECT_EQ(d["code"], "E001");
  EXPECT_EQ(d["severity"], "error");
  EXPECT_EQ(d["span"]["line"], 4);
  EXPECT_EQ(d["span"]["column"], 17);
  EXPECT_EQ(d["span"]["endColumn"], 22);
  EXPECT_NE(r.err.find("E001"), std::string::npos);
}

TEST(Cli, AnalyzeImpact) {
  Outcome r = run({"analyze", valid("fire.scc"), "--impact", "smokeLevel"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "may smokeLevel: Alarm.activate, FireController, FireRisk, SmokePresence\n"
            "must smokeLevel: FireRisk, SmokePresence\n");
}

TEST(Cli, AnalyzeImpactJson) {
  Outcome r = run({"--json", "analyze", valid("fire.scc"), "--impact", "SmokeDetector.smokeLevel"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  const json& imp = j["impact"]["SmokeDetector.smokeLevel"];
  EXPECT_EQ(imp["may"], json({"Alarm.activate", "FireController", "FireRisk", "SmokePresence"}));
  EXPECT_EQ(imp["must"], json({"FireRisk", "SmokePresence"}));
}

TEST(Cli, AnalyzeActivatorsAndDead) {
  Outcome a = run({"analyze", valid("fire.scc"), "--activators", "FireController"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, "activators FireController: FireRisk, SmokeDetector.smokeLevel, SmokePresence\n");
  Outcome d = run({"analyze", valid("unused_source.scc"), "--dead"});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_EQ(d.out, "dead: Barometer.pressure\n");
  EXPECT_NE(d.err.find("W031"), std::string::npos);
}

TEST(Cli, AnalyzeEverything) {
  Outcome r = run({"analyze", valid("fire.scc")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("may SmokeDetector.smokeLevel: "), std::string::npos);
  EXPECT_NE(r.out.find("must Thermometer.temperature: \n"), std::string::npos);
  EXPECT_NE(r.out.find("dead: \n"), std::string::npos);
}

TEST(Cli, AnalyzeUnknownElement) {
  Outcome r = run({"analyze", valid("fire.scc"), "--impact", "Ghost"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("E001"), std::string::npos);
}

TEST(Cli, AnalyzeExclusiveQueries) {
  Outcome r = run({"analyze", valid("fire.scc"), "--impact", "smokeLevel", "--dead"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, GraphDotAndJson) {
  Outcome dot = run({"graph", valid("fire.scc")});
  EXPECT_EQ(dot.code, kExitOk);
  EXPECT_EQ(dot.out, testing::read_golden("fire.dot"));
  Outcome js = run({"graph", valid("fire.scc"), "--format", "json"});
  EXPECT_EQ(js.code, kExitOk);
  const json j = json::parse(js.out);
  EXPECT_EQ(j["graph"]["nodes"].size(), 6u);
  EXPECT_EQ(j["graph"]["edges"].size(), 5u);
  EXPECT_EQ(run({"graph", valid("fire.scc"), "--format", "svg"}).code, kExitUsage);
}

TEST(Cli, GenerateListsFilesAndReportsDrift) {
  const fs::path out = work("generate");
  Outcome first = run({"generate", valid("fire.scc"), "--out", out.string(), "--descriptor"});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_EQ(std::count(first.out.begin(), first.out.end(), '\n'), 8);
  EXPECT_TRUE(fs::exists(out / "generated" / "descriptor.json"));
  EXPECT_NE(read_file(out / "generated" / "FireRisk.hpp").find("namespace fire"), std::string::npos);

  Outcome same = run({"generate", valid("fire.scc"), "--out", out.string(), "--descriptor"});
  EXPECT_EQ(same.code, kExitOk);
  EXPECT_EQ(same.err, "");

  Outcome changed = run({"generate", valid("fire_int.scc"), "--out", out.string(), "--descriptor",
                     "--namespace", "fire"});
  EXPECT_EQ(changed.code, kExitOk);
  EXPECT_NE(changed.err.find("W020"), std::string::npos);
  EXPECT_NE(changed.err.find("FireController.onNewFireRisk"), std::string::npos);
}

TEST(Cli, GenerateRejectsMalformedDescriptor) {
  const fs::path out = work("bad_descriptor");
  fs::create_directories(out / "generated");
  write(out / "generated" / "descriptor.json", "not json");
  Outcome r = run({"generate", valid("fire.scc"), "--out", out.string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("E040"), std::string::npos);
}

TEST(Cli, VerifyFire) {
  Outcome r = run({"verify", valid("fire.scc"), "--invariants", valid("fire.inv")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("HOLDS never invoke(*, Alarm.stop)\n"), std::string::npos);
  EXPECT_NE(r.out.find("VIOLATED publish(smokeLevel) leadsto"), std::string::npos);
  EXPECT_NE(r.out.find("  SkipPublish(FireRisk)\n  Quiesce\n"), std::string::npos);
}

TEST(Cli, VerifyAllHoldsIsSuccess) {
  const fs::path dir = work("holds");
  const fs::path inv = write(dir / "ok.inv", "never invoke(*, Alarm.stop)\n");
  Outcome r = run({"verify", valid("fire.scc"), "--invariants", inv.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "HOLDS never invoke(*, Alarm.stop)\n");
}

TEST(Cli, VerifyJson) {
  Outcome r = run({"--json", "verify", valid("fire.scc"), "--invariants", valid("fire.inv")});
  EXPECT_EQ(r.code, kExitFailure);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["verdicts"].size(), 3u);
  EXPECT_EQ(j["verdicts"][0]["verdict"], "holds");
  EXPECT_EQ(j["verdicts"][1]["verdict"], "violated");
  EXPECT_EQ(j["verdicts"][1]["trace"].back()["kind"], "Quiesce");
  EXPECT_EQ(j["verdicts"][1]["trace"][0]["subject"], "SmokeDetector.smokeLevel");
}

TEST(Cli, VerifyBadInvariants) {
  const fs::path dir = work("bad_inv");
  const fs::path inv = write(dir / "bad.inv", "never activate(Ghost)\n");
  Outcome r = run({"verify", valid("fire.scc"), "--invariants", inv.string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("E001"), std::string::npos);
  EXPECT_NE(r.err.find("bad.inv:1:16"), std::string::npos);
}

TEST(Cli, VerifyEmitsPromela) {
  const fs::path dir = work("promela");
  const fs::path pml = dir / "fire.pml";
  Outcome r = run({"verify", valid("fire.scc"), "--invariants", valid("fire.inv"), "--emit-promela", pml.string()});
  EXPECT_EQ(r.code, kExitFailure);
  const std::string text = read_file(pml);
  EXPECT_NE(text.find("ltl inv3"), std::string::npos);
}

TEST(Cli, StateLimit) {
  const std::string arch = valid("assisted_living.scc");
  const std::string inv = valid("assisted_living.inv");
  Outcome r = run({"verify", arch, "--invariants", inv, "--state-limit", "5"});
  EXPECT_EQ(r.code, kExitLimit);
  EXPECT_NE(r.err.find("E050"), std::string::npos);
  EXPECT_EQ(run({"verify", arch, "--invariants", inv, "--state-limit", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", arch, "--invariants", inv, "--state-limit", "many"}).code, kExitUsage);
}

TEST(Cli, StateLimitFromEnvironment) {
  const std::string arch = valid("assisted_living.scc");
  const std::string inv = valid("assisted_living.inv");
  ::setenv("SCCADL_STATE_LIMIT", "5", 1);
  const int limited = run({"verify", arch, "--invariants", inv}).code;
  const int flagWins = run({"verify", arch, "--invariants", inv, "--state-limit", "100000"}).code;
  ::setenv("SCCADL_STATE_LIMIT", "abc", 1);
  const int invalid = run({"verify", arch, "--invariants", inv}).code;
  ::unsetenv("SCCADL_STATE_LIMIT");
  EXPECT_EQ(limited, kExitLimit);
  EXPECT_NE(flagWins, kExitLimit);
  EXPECT_EQ(invalid, kExitUsage);
}

TEST(Cli, UsageErrors) {
  Outcome none = run({});
  EXPECT_EQ(none.code, kExitUsage);
  Outcome missing = run({"check"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_EQ(missing.err.rfind("error: ", 0), 0u);
  EXPECT_NE(missing.err.find("check"), std::string::npos);
  EXPECT_EQ(run({"frobnicate", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", valid("fire.scc")}).code, kExitUsage);
  EXPECT_EQ(run({"generate", valid("fire.scc")}).code, kExitUsage);
}

TEST(Cli, Help) {
  Outcome r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace sccadl
