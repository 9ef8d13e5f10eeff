#include <gtest/gtest.h>

#include <regex>

#include "fixtures.hpp"
#include "sccadl/verifier.hpp"

namespace sccadl {
namespace {

ArchitectureModel fire() {
  Compilation c = testing::compile_fixture("valid/fire.scc");
  EXPECT_TRUE(c.ok());
  return c.model;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

TEST(Promela, FireGolden) {
  const std::string pml = emit_promela(fire());
  EXPECT_EQ(pml, testing::read_golden("fire.pml"));
  EXPECT_EQ(count(pml, "active proctype "), 4u);
  EXPECT_NE(pml.find("active proctype environment()"), std::string::npos);
  EXPECT_EQ(count(pml, "ltl "), 0u);
  EXPECT_EQ(count(pml, "chan c"), 3u);
}

TEST(Promela, LeadsToGolden) {
  const ArchitectureModel m = fire();
  InvariantParseResult r =
      parse_invariants("publish(smokeLevel) leadsto invoke(FireController, Alarm.activate)\n", m);
  ASSERT_TRUE(r.ok());
  const std::string pml = emit_promela(m, r.invariants);
  EXPECT_EQ(pml, testing::read_golden("fire_leadsto.pml"));
  EXPECT_EQ(count(pml, "ltl "), 1u);
  EXPECT_TRUE(std::regex_search(pml, std::regex(R"(ltl inv1 \{ \[\] \(\(ev == \d+\) -> <> \(ev == \d+\)\) \})")));
  EXPECT_EQ(pml.rfind(emit_promela(m), 0), 0u);
}

TEST(Promela, PatternFormulas) {
  const ArchitectureModel m = fire();
  InvariantParseResult r = parse_invariants(
      "never invoke(*, Alarm.stop)\nactivate(FireController) precedes invoke(*, Alarm.activate)\n"
      "publish(FireRisk) leadsto activate(*)\n",
      m);
  ASSERT_TRUE(r.ok());
  const std::string pml = emit_promela(m, r.invariants);
  EXPECT_NE(pml.find("ltl inv1 { [] !false }"), std::string::npos);
  EXPECT_TRUE(std::regex_search(pml, std::regex(R"(ltl inv2 \{ \(!\(ev == \d+\)\) W \(ev == \d+\) \})")));
  EXPECT_TRUE(std::regex_search(pml, std::regex(R"(ltl inv3 \{ \[\] \(\(ev == \d+\) -> <> \(ev == \d+ \|\| ev == \d+ \|\| ev == \d+\)\) \})")));
}

TEST(Promela, MaybePublishIsNondeterministic) {
  const std::string pml = emit_promela(fire());
  const auto risk = pml.find("active proctype FireRisk()");
  ASSERT_NE(risk, std::string::npos);
  const std::string body = pml.substr(risk, pml.find("\n}\n", risk) - risk);
  EXPECT_EQ(count(body, "     :: "), 3u);  // receive, publish, skip
}

TEST(Promela, EmptyModelIsInitOnly) {
  const std::string pml = emit_promela({});
  EXPECT_NE(pml.find("init { skip }"), std::string::npos);
  EXPECT_EQ(pml.find("proctype"), std::string::npos);
}

TEST(Promela, Deterministic) {
  for (const auto& path : testing::fixture_files("valid", ".scc")) {
    const ArchitectureModel m = compile_file(path).model;
    EXPECT_EQ(emit_promela(m), emit_promela(m)) << path;
  }
}

TEST(Promela, OneProcessPerOperatorOneChannelPerPushEdge) {
  for (const auto& path : testing::fixture_files("valid", ".scc")) {
    const ArchitectureModel m = compile_file(path).model;
    const std::string pml = emit_promela(m);
    const TransitionSystem ts = build_ts(m);
    if (ts.operators().empty() && ts.sources().empty()) continue;
    std::size_t pushes = 0;
    for (const auto& s : ts.sources()) pushes += s.consumers.size();
    for (const auto& op : ts.operators()) pushes += op.consumers.size();
    EXPECT_EQ(count(pml, "active proctype "), ts.operators().size() + 1) << path;
    EXPECT_EQ(count(pml, "chan c"), pushes) << path;
  }
}

}  // namespace
}  // namespace sccadl
