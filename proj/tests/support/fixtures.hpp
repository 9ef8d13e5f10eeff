#pragma once

// Locating and loading the fixture corpus.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "sccadl/frontend.hpp"

namespace sccadl::testing {

inline std::filesystem::path fixture_dir() { return SCCADL_FIXTURE_DIR; }

inline std::filesystem::path fixture(const std::string& relative) { return fixture_dir() / relative; }

/// Sorted paths of every file with `extension` directly under `sub`.
inline std::vector<std::filesystem::path> fixture_files(const std::string& sub, const std::string& extension) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir() / sub))
    if (e.path().extension() == extension) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string read_fixture(const std::string& relative) { return read_file(fixture(relative)); }

#ifdef SCCADL_GOLDEN_DIR
inline std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(SCCADL_GOLDEN_DIR) / name;
}
inline std::string read_golden(const std::string& name) { return read_file(golden(name)); }
#endif

/// Compiles a fixture; the caller asserts on ok().
inline Compilation compile_fixture(const std::string& relative) { return compile_file(fixture(relative)); }

/// One expected diagnostic of a negative fixture, e.g. "E001 4:17-4:22".
struct Expectation {
  std::string code;
  int line = 0, col = 0, endLine = 0, endCol = 0;
  bool operator==(const Expectation&) const = default;
};

/// Expectations from the `// expect: ...` first line of a negative fixture.
inline std::vector<Expectation> expectations(const std::string& text) {
  std::vector<Expectation> out;
  const std::string marker = "// expect:";
  if (text.rfind(marker, 0) != 0) return out;
  std::istringstream in(text.substr(marker.size(), text.find('\n') - marker.size()));
  std::string code, span;
  while (in >> code >> span) {
    Expectation e{code};
    if (std::sscanf(span.c_str(), "%d:%d-%d:%d", &e.line, &e.col, &e.endLine, &e.endCol) == 4) out.push_back(e);
  }
  return out;
}

inline std::vector<Expectation> observed(const std::vector<Diagnostic>& diagnostics) {
  std::vector<Expectation> out;
  for (const auto& d : diagnostics)
    out.push_back({std::string(code_id(d.code)), d.span.startLine, d.span.startCol, d.span.endLine, d.span.endCol});
  return out;
}

}  // namespace sccadl::testing
