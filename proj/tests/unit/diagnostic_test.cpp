#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sccadl/diagnostic.hpp"

namespace sccadl {
namespace {

TEST(Diagnostic, RegistryFileMatchesCompiledCodes) {
  std::ifstream in(SCCADL_REGISTRY_FILE);
  ASSERT_TRUE(in) << SCCADL_REGISTRY_FILE;
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);

  const auto registry = code_registry();
  ASSERT_EQ(lines.size(), registry.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream fields(lines[i]);
    std::string id, severity, name;
    fields >> id >> severity >> name;
    EXPECT_EQ(id, registry[i].id);
    EXPECT_EQ(severity, registry[i].severity == Severity::Error ? "error" : "warning");
    EXPECT_EQ(name, registry[i].name);
    EXPECT_EQ(static_cast<std::size_t>(registry[i].code), i);
  }
}

TEST(Diagnostic, WarningsStartWithW) {
  for (const auto& c : code_registry()) EXPECT_EQ(c.id[0] == 'W', c.severity == Severity::Warning) << c.id;
}

TEST(Diagnostic, TextFormat) {
  Diagnostic d = make_diagnostic(Code::UnknownReference, "unknown name 'Smoke'", {"fire.scc", 7, 17, 7, 22});
  EXPECT_EQ(format(d), "E001 error fire.scc:7:17 unknown name 'Smoke'");
  d = make_diagnostic(Code::UnusedSource, "unused");
  EXPECT_EQ(d.severity, Severity::Warning);
  EXPECT_EQ(format(d), "W031 warning <input>:0:0 unused");
}

TEST(Diagnostic, SortIsByPositionThenCode) {
  std::vector<Diagnostic> ds{
      make_diagnostic(Code::TypeMismatch, "b", {"a.scc", 3, 1, 3, 2}),
      make_diagnostic(Code::UnknownReference, "a", {"a.scc", 3, 1, 3, 2}),
      make_diagnostic(Code::SyntaxError, "c", {"a.scc", 1, 9, 1, 10}),
  };
  sort_diagnostics(ds);
  EXPECT_EQ(ds[0].code, Code::SyntaxError);
  EXPECT_EQ(ds[1].code, Code::UnknownReference);
  EXPECT_EQ(ds[2].code, Code::TypeMismatch);
}

TEST(Diagnostic, HasErrorsIgnoresWarnings) {
  std::vector<Diagnostic> ds{make_diagnostic(Code::SignatureDrift, "w")};
  EXPECT_FALSE(has_errors(ds));
  ds.push_back(make_diagnostic(Code::IoError, "e"));
  EXPECT_TRUE(has_errors(ds));
}

}  // namespace
}  // namespace sccadl
