#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>

#include "enumerator.hpp"
#include "fixtures.hpp"
#include "random_model.hpp"
#include "sccadl/dataflow.hpp"
#include "sccadl/parser.hpp"
#include "sccadl/resolve.hpp"

namespace sccadl {
namespace {

using Set = ElementSet;

InteractionGraph fire_graph() {
  Compilation c = testing::compile_fixture("valid/fire.scc");
  EXPECT_TRUE(c.ok());
  return build_graph(c.model);
}

TEST(Dataflow, FireGraph) {
  InteractionGraph g = fire_graph();
  std::vector<std::string> names;
  for (const auto& n : g.nodes()) names.push_back(n.name);
  EXPECT_EQ(names, (std::vector<std::string>{"Alarm.activate", "FireController", "FireRisk",
                                             "SmokeDetector.smokeLevel", "SmokePresence",
                                             "Thermometer.temperature"}));
  auto edge = [&](const std::string& a, const std::string& b) -> const GraphEdge* {
    for (const auto& e : g.edges())
      if (g.node(e.from).name == a && g.node(e.to).name == b) return &e;
    return nullptr;
  };
  ASSERT_EQ(g.edges().size(), 5u);
  ASSERT_TRUE(edge("SmokeDetector.smokeLevel", "SmokePresence"));
  EXPECT_TRUE(edge("SmokeDetector.smokeLevel", "SmokePresence")->guaranteed);
  EXPECT_TRUE(edge("SmokePresence", "FireRisk")->guaranteed);
  EXPECT_FALSE(edge("FireRisk", "FireController")->guaranteed);
  EXPECT_EQ(edge("FireRisk", "Thermometer.temperature")->kind, EdgeKind::Pull);
  EXPECT_EQ(edge("FireController", "Alarm.activate")->kind, EdgeKind::Invoke);
}

TEST(Dataflow, FireImpact) {
  InteractionGraph g = fire_graph();
  EXPECT_EQ(may_impact(g, "SmokeDetector.smokeLevel"),
            (Set{"SmokePresence", "FireRisk", "FireController", "Alarm.activate"}));
  EXPECT_EQ(may_impact(g, "smokeLevel"), may_impact(g, "SmokeDetector.smokeLevel"));
  EXPECT_EQ(may_impact(g, "Thermometer.temperature"), Set{});
  EXPECT_EQ(must_impact(g, "SmokeDetector.smokeLevel"), (Set{"SmokePresence", "FireRisk"}));
  EXPECT_EQ(must_impact(g, "temperature"), Set{});
}

TEST(Dataflow, FireActivators) {
  InteractionGraph g = fire_graph();
  EXPECT_EQ(activators_of(g, "FireController"), (Set{"FireRisk", "SmokePresence", "SmokeDetector.smokeLevel"}));
  EXPECT_EQ(activators_of(g, "SmokeDetector.smokeLevel"), Set{});
  EXPECT_EQ(activators_of(g, "Alarm.activate"),
            (Set{"FireController", "FireRisk", "SmokePresence", "SmokeDetector.smokeLevel"}));
}

TEST(Dataflow, UnknownElementsAreE001) {
  InteractionGraph g = fire_graph();
  for (const char* bad : {"Ghost", "FireRisk", "Alarm.stop"}) {
    try {
      may_impact(g, bad);
      ADD_FAILURE() << bad;
    } catch (const DiagnosticError& e) {
      EXPECT_EQ(e.diagnostic().code, Code::UnknownReference);
    }
  }
  EXPECT_THROW(activators_of(g, "Alarm.stop"), DiagnosticError);
  EXPECT_THROW(must_impact(g, "nope"), DiagnosticError);
}

TEST(Dataflow, AmbiguousBareSource) {
  Compilation c = testing::compile_fixture("valid/two_sources.scc");
  ASSERT_TRUE(c.ok());
  EXPECT_THROW(may_impact(build_graph(c.model), "temperature"), DiagnosticError);
}

TEST(Dataflow, EmptyModel) {
  InteractionGraph g = build_graph({});
  EXPECT_TRUE(g.nodes().empty());
  EXPECT_TRUE(g.edges().empty());
  EXPECT_TRUE(dead_elements(g).elements.empty());
  EXPECT_EQ(to_dot(g), "digraph architecture {\n  rankdir=BT;\n}\n");
}

TEST(Dataflow, FireHasNoDeadElements) {
  DeadElements d = dead_elements(fire_graph());
  EXPECT_TRUE(d.elements.empty());
  EXPECT_TRUE(d.warnings.empty());
}

TEST(Dataflow, UnpulledSourceIsUnused) {
  std::string text = testing::read_fixture("valid/fire.scc");
  const std::string get = "  get Thermometer.temperature\n";
  text.erase(text.find(get), get.size());
  Compilation c = compile(text);
  ASSERT_TRUE(c.ok());
  DeadElements d = dead_elements(build_graph(c.model));
  EXPECT_EQ(d.elements, Set{"Thermometer.temperature"});
  ASSERT_EQ(d.warnings.size(), 1u);
  EXPECT_EQ(d.warnings[0].code, Code::UnusedSource);
  EXPECT_EQ(d.warnings[0].span.startLine, 2);
}

// A context with no activation cannot pass the checks, but the graph of a
// resolved model still reports it.
TEST(Dataflow, IsolatedContextIsUnreachable) {
  ResolveResult r =
      resolve(parse(testing::read_fixture("valid/fire.scc") + "context C as Bool { always publish }\n").model);
  ASSERT_TRUE(r.ok());
  DeadElements d = dead_elements(build_graph(r.model));
  EXPECT_EQ(d.elements, Set{"C"});
  ASSERT_EQ(d.warnings.size(), 1u);
  EXPECT_EQ(d.warnings[0].code, Code::UnreachableElement);
}

TEST(Dataflow, DotGolden) { EXPECT_EQ(to_dot(fire_graph()), testing::read_golden("fire.dot")); }

TEST(Dataflow, UnreferencedSourceHasDegreeZero) {
  Compilation c = testing::compile_fixture("valid/unused_source.scc");
  InteractionGraph g = build_graph(c.model);
  auto i = g.find("Barometer.pressure");
  ASSERT_TRUE(i);
  EXPECT_TRUE(g.outgoing(*i).empty());
  EXPECT_TRUE(g.incoming(*i).empty());
  EXPECT_EQ(may_impact(g, "Barometer.pressure"), Set{});
}

constexpr std::uint32_t kSeeds = 60;

std::vector<ArchitectureModel> corpus() {
  std::vector<ArchitectureModel> models;
  for (const auto& path : testing::fixture_files("valid", ".scc")) models.push_back(compile_file(path).model);
  for (std::uint32_t seed = 1; seed <= kSeeds; ++seed)
    models.push_back(compile(testing::random_architecture(seed, testing::kOracleSized)).model);
  return models;
}

TEST(Dataflow, MustIsSubsetOfMay) {
  for (const auto& m : corpus()) {
    InteractionGraph g = build_graph(m);
    for (const Source* s : all_sources(m)) {
      const Set may = may_impact(g, qualified_name(*s));
      for (const auto& e : must_impact(g, qualified_name(*s))) EXPECT_TRUE(may.count(e)) << e;
    }
  }
}

// Adding a push edge never shrinks may_impact.
TEST(Dataflow, MonotoneInPushEdges) {
  for (std::uint32_t seed = 1; seed <= 40; ++seed) {
    const ArchitectureModel m = compile(testing::random_architecture(seed)).model;
    const InteractionGraph g = build_graph(m);
    for (std::size_t a = 0; a < g.nodes().size(); ++a)
      for (std::size_t b = 0; b < g.nodes().size(); ++b) {
        if (g.node(b).kind != NodeKind::Context && g.node(b).kind != NodeKind::Controller) continue;
        std::vector<GraphEdge> edges = g.edges();
        edges.push_back({EdgeKind::Push, a, b, false});
        const InteractionGraph bigger(g.nodes(), edges);
        for (const Source* s : all_sources(m)) {
          const Set before = may_impact(g, qualified_name(*s));
          const Set after = may_impact(bigger, qualified_name(*s));
          EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
        }
      }
  }
}

// may = union and must = intersection of the elements activated over every
// maximal reaction to the source.
// Models whose reactions are too many to enumerate are skipped; every
// fixture and most random models are checked.
TEST(Dataflow, AgreesWithExhaustiveSimulation) {
  const auto models = corpus();
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const ArchitectureModel& m = models[i];
    const auto enumerated = testing::try_enumerate_reactions(m, 20000);
    if (!enumerated) {
      ++skipped;
      EXPECT_GE(i, models.size() - kSeeds) << "fixture " << i << " is too large";
      continue;
    }
    const auto& traces = *enumerated;
    const InteractionGraph g = build_graph(m);
    for (const Source* s : all_sources(m)) {
      const std::string name = qualified_name(*s);
      std::optional<Set> meet;
      Set join;
      for (const auto& t : traces) {
        if (t.front().subject != name) continue;
        const Set seen = testing::activated_elements(t);
        join.insert(seen.begin(), seen.end());
        if (!meet) {
          meet = seen;
        } else {
          Set common;
          std::set_intersection(meet->begin(), meet->end(), seen.begin(), seen.end(),
                                std::inserter(common, common.end()));
          meet = common;
        }
      }
      ASSERT_TRUE(meet.has_value());
      EXPECT_EQ(may_impact(g, name), join) << name;
      EXPECT_EQ(must_impact(g, name), *meet) << name;
    }
  }
  EXPECT_LE(skipped, kSeeds / 10);
}

}  // namespace
}  // namespace sccadl
