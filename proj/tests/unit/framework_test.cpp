#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "random_model.hpp"
#include "sccadl/framework.hpp"

namespace sccadl {
namespace {

namespace fs = std::filesystem;

ArchitectureModel fire() {
  Compilation c = testing::compile_fixture("valid/fire.scc");
  EXPECT_TRUE(c.ok());
  return c.model;
}

fs::path work_dir(const std::string& name) {
  fs::path p = fs::path(SCCADL_WORK_DIR) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

TEST(Framework, ContextWithPullAndMaybePublish) {
  ArchitectureModel m = fire();
  auto sigs = map_contract(m, *find_context(m, "FireRisk"));
  ASSERT_EQ(sigs.size(), 1u);
  const CallbackSignature& s = sigs[0];
  EXPECT_EQ(s.name, "onNewSmokePresence");
  EXPECT_EQ(s.trigger, "SmokePresence");
  EXPECT_EQ(s.activation, (ValueParam{"value", DataType::boolean()}));
  ASSERT_EQ(s.pulls.size(), 1u);
  EXPECT_EQ(s.pulls[0].name, "temperature");
  EXPECT_EQ(s.pulls[0].target, "Thermometer.temperature");
  EXPECT_EQ(s.pulls[0].type, DataType::integer());
  EXPECT_TRUE(s.invokes.empty());
  EXPECT_EQ(s.returnKind, ReturnKind::OptionalValue);
  EXPECT_EQ(s.returnType, DataType::boolean());
}

TEST(Framework, AlwaysPublishReturnsValue) {
  ArchitectureModel m = fire();
  auto sigs = map_contract(m, *find_context(m, "SmokePresence"));
  ASSERT_EQ(sigs.size(), 1u);
  EXPECT_EQ(sigs[0].name, "onNewSmokeLevel");
  EXPECT_EQ(sigs[0].activation.type, DataType::integer());
  EXPECT_EQ(sigs[0].returnKind, ReturnKind::Value);
}

TEST(Framework, ControllerGetsOnlyLicensedMethods) {
  ArchitectureModel m = fire();
  auto sigs = map_contract(m, *find_controller(m, "FireController"));
  ASSERT_EQ(sigs.size(), 1u);
  const CallbackSignature& s = sigs[0];
  EXPECT_EQ(s.name, "onNewFireRisk");
  EXPECT_TRUE(s.pulls.empty());
  ASSERT_EQ(s.invokes.size(), 1u);
  EXPECT_EQ(s.invokes[0].name, "activateOnAlarm");
  EXPECT_EQ(s.invokes[0].method, "activate");
  EXPECT_EQ(s.invokes[0].params, (std::vector<ValueParam>{{"intensity", DataType::integer()}}));
  EXPECT_EQ(s.returnKind, ReturnKind::Nothing);
  EXPECT_FALSE(s.returnType);
}

TEST(Framework, OneCallbackPerDisjunct) {
  for (const auto& path : testing::fixture_files("valid", ".scc")) {
    Compilation c = compile_file(path);
    for (const auto& ctx : c.model.contexts)
      EXPECT_EQ(map_contract(c.model, ctx).size(), ctx.contract.activation.disjuncts.size()) << ctx.name;
    for (const auto& ctl : c.model.controllers)
      EXPECT_EQ(map_contract(c.model, ctl).size(), ctl.contract.activation.disjuncts.size()) << ctl.name;
  }
}

TEST(Framework, AmbiguousSourceNamesAreQualified) {
  Compilation c = testing::compile_fixture("valid/two_sources.scc");
  ASSERT_TRUE(c.ok());
  std::set<std::string> names;
  for (const auto& op : build_descriptor(c.model).operators)
    for (const auto& cb : op.callbacks) {
      std::set<std::string> params{cb.activation.name};
      for (const auto& p : cb.pulls) EXPECT_TRUE(params.insert(p.name).second) << p.name;
      for (const auto& i : cb.invokes) EXPECT_TRUE(params.insert(i.name).second) << i.name;
      EXPECT_TRUE(names.insert(op.name + "." + cb.name).second) << cb.name;
    }
}

TEST(Framework, DescriptorGolden) {
  EXPECT_EQ(emit_descriptor(fire()), testing::read_golden("fire.descriptor.json"));
}

TEST(Framework, DescriptorRoundTrip) {
  for (const auto& path : testing::fixture_files("valid", ".scc")) {
    const FrameworkDescriptor d = build_descriptor(compile_file(path).model);
    EXPECT_EQ(parse_descriptor(to_json_text(d)), d) << path;
  }
  for (std::uint32_t seed = 1; seed <= 50; ++seed) {
    const FrameworkDescriptor d = build_descriptor(compile(testing::random_architecture(seed)).model);
    EXPECT_EQ(parse_descriptor(to_json_text(d)), d) << seed;
  }
}

TEST(Framework, MalformedDescriptorIsE040) {
  for (const char* bad : {"", "{", "[]", R"({"version":"other/9","operators":[],"sources":[],"interfaces":[]})",
                          R"({"version":"sccadl-fw/1"})"}) {
    try {
      parse_descriptor(bad);
      ADD_FAILURE() << bad;
    } catch (const DiagnosticError& e) {
      EXPECT_EQ(e.diagnostic().code, Code::IoError) << bad;
    }
  }
}

TEST(Framework, NoDriftAgainstItself) {
  const FrameworkDescriptor d = build_descriptor(fire());
  EXPECT_TRUE(signature_drift(d, d).empty());
}

TEST(Framework, RetypedContextDrifts) {
  const FrameworkDescriptor before = build_descriptor(fire());
  const FrameworkDescriptor after = build_descriptor(testing::compile_fixture("valid/fire_int.scc").model);
  const auto drift = signature_drift(before, after);
  ASSERT_FALSE(drift.empty());
  bool controller = false;
  for (const auto& d : drift) {
    EXPECT_EQ(d.code, Code::SignatureDrift);
    EXPECT_EQ(d.severity, Severity::Warning);
    controller = controller || d.message.find("FireController.onNewFireRisk") != std::string::npos;
  }
  EXPECT_TRUE(controller);
}

TEST(Framework, AddedAndRemovedCallbacksDrift) {
  const FrameworkDescriptor full = build_descriptor(fire());
  FrameworkDescriptor less = full;
  less.operators.pop_back();
  ASSERT_EQ(signature_drift(full, less).size(), 1u);
  EXPECT_NE(signature_drift(full, less)[0].message.find("removed"), std::string::npos);
  ASSERT_EQ(signature_drift(less, full).size(), 1u);
  EXPECT_NE(signature_drift(less, full)[0].message.find("added"), std::string::npos);
}

TEST(Framework, SkeletonFileSet) {
  const SkeletonSet set = render_skeletons(fire());
  EXPECT_TRUE(set.diagnostics.empty());
  std::vector<std::string> paths;
  for (const auto& f : set.files) paths.push_back(f.path);
  EXPECT_EQ(paths, (std::vector<std::string>{"generated/Alarm.hpp", "generated/FireController.hpp",
                                             "generated/FireRisk.hpp", "generated/Runtime.hpp",
                                             "generated/SmokeDetectorSmokeLevel.hpp",
                                             "generated/SmokePresence.hpp",
                                             "generated/ThermometerTemperature.hpp"}));
}

TEST(Framework, SkeletonsAreDeterministic) {
  for (const auto& path : testing::fixture_files("valid", ".scc")) {
    const ArchitectureModel m = compile_file(path).model;
    EXPECT_EQ(render_skeletons(m).files, render_skeletons(m).files) << path;
  }
}

TEST(Framework, NamespaceIsApplied) {
  GenerateOptions o;
  o.cppNamespace = "fire_app";
  for (const auto& f : render_skeletons(fire(), o).files)
    EXPECT_NE(f.contents.find("namespace fire_app"), std::string::npos) << f.path;
}

TEST(Framework, NameClashIsE041) {
  Compilation c = compile(testing::read_fixture("valid/fire.scc") +
                          "context SmokeDetectorSmokeLevel as Int {\n"
                          "  when provided SmokeDetector.smokeLevel\n  always publish\n}\n");
  ASSERT_TRUE(c.ok());
  const SkeletonSet set = render_skeletons(c.model);
  ASSERT_EQ(set.diagnostics.size(), 1u);
  EXPECT_EQ(set.diagnostics[0].code, Code::GeneratedNameClash);
  EXPECT_FALSE(generate_skeletons(c.model, work_dir("clash")).ok());
}

TEST(Framework, GenerateWritesAndRemovesStaleFiles) {
  const fs::path dir = work_dir("stale");
  GenerateOptions o;
  o.writeDescriptor = true;
  GenerateResult first = generate_skeletons(fire(), dir, o);
  ASSERT_TRUE(first.ok());
  EXPECT_EQ(first.files.size(), 8u);
  EXPECT_EQ(read_file(dir / "generated" / "descriptor.json"), emit_descriptor(fire()));
  std::ofstream(dir / "generated" / "notes.txt") << "keep me\n";
  std::ofstream(dir / "user.cpp") << "int main() {}\n";

  Compilation smaller = compile("device D { source s as Int; }\n");
  ASSERT_TRUE(smaller.ok());
  GenerateResult second = generate_skeletons(smaller.model, dir);
  ASSERT_TRUE(second.ok());
  EXPECT_FALSE(fs::exists(dir / "generated" / "FireRisk.hpp"));
  EXPECT_FALSE(fs::exists(dir / "generated" / "descriptor.json"));
  EXPECT_TRUE(fs::exists(dir / "generated" / "DS.hpp"));
  EXPECT_TRUE(fs::exists(dir / "generated" / "notes.txt"));
  EXPECT_TRUE(fs::exists(dir / "user.cpp"));
}

TEST(Framework, WrittenFilesMatchRenderedSet) {
  const fs::path dir = work_dir("written");
  ASSERT_TRUE(generate_skeletons(fire(), dir).ok());
  for (const auto& f : render_skeletons(fire()).files) EXPECT_EQ(read_file(dir / f.path), f.contents) << f.path;
}

TEST(Framework, NamespaceForStems) {
  EXPECT_EQ(namespace_for("fire"), "fire");
  EXPECT_EQ(namespace_for("home-heating.v2"), "home_heating_v2");
  EXPECT_EQ(namespace_for("3d"), "n3d");
  EXPECT_EQ(namespace_for(""), "n");
}

}  // namespace
}  // namespace sccadl
