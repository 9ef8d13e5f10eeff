#include "sccadl/frontend.hpp"

#include <fstream>
#include <sstream>

#include "sccadl/parser.hpp"
#include "sccadl/resolve.hpp"
#include "sccadl/wellformedness.hpp"

namespace sccadl {

Compilation compile(std::string_view text, const std::string& file) {
  Compilation out;
  ParseResult parsed = parse(text, file);
  out.diagnostics = std::move(parsed.diagnostics);
  if (has_errors(out.diagnostics)) {
    out.model = std::move(parsed.model);
    return out;
  }

  out.stage = Stage::Resolve;
  ResolveResult resolved = resolve(std::move(parsed.model));
  out.model = std::move(resolved.model);
  out.diagnostics.insert(out.diagnostics.end(), resolved.diagnostics.begin(),
                         resolved.diagnostics.end());
  if (has_errors(out.diagnostics)) return out;

  out.stage = Stage::Check;
  CheckReport report = check_all(out.model);
  out.diagnostics.insert(out.diagnostics.end(), report.diagnostics.begin(), report.diagnostics.end());
  sort_diagnostics(out.diagnostics);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DiagnosticError(make_diagnostic(Code::IoError, "cannot read '" + path.string() + "'",
                                          SourceSpan{path.string()}));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Compilation compile_file(const std::filesystem::path& path) {
  try {
    return compile(read_file(path), path.string());
  } catch (const DiagnosticError& e) {
    Compilation out;
    out.diagnostics.push_back(e.diagnostic());
    return out;
  }
}

}  // namespace sccadl
