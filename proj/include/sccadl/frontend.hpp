#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sccadl/diagnostic.hpp"
#include "sccadl/model.hpp"

namespace sccadl {

enum class Stage { Parse, Resolve, Check };

/// Result of parse + resolve + all wellformedness checks. `stage` is the
/// last stage that ran; later stages are skipped once one reports errors.
struct Compilation {
  ArchitectureModel model;
  std::vector<Diagnostic> diagnostics;
  Stage stage = Stage::Parse;

  bool ok() const { return stage == Stage::Check && !has_errors(diagnostics); }
};

Compilation compile(std::string_view text, const std::string& file = "<input>");

/// Reads and compiles a file; an unreadable file yields a single E040.
Compilation compile_file(const std::filesystem::path& path);

/// Reads a whole file. Throws DiagnosticError (E040) on failure.
std::string read_file(const std::filesystem::path& path);

}  // namespace sccadl
