#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sccadl/diagnostic.hpp"
#include "sccadl/model.hpp"

namespace sccadl {

struct ParseResult {
  ArchitectureModel model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

/// Parses architecture text into a raw model.
///
/// The parser recovers at declaration boundaries, so a file with several
/// broken declarations reports one diagnostic per declaration. Declarations
/// that fail to parse are left out of the model. Operator bodies accept
/// every clause kind for both contexts and controllers; clauses that the
/// architectural style forbids (a context invoking an action, a controller
/// publishing or pulling) are reported later by the wellformedness checks
/// rather than as syntax errors.
ParseResult parse(std::string_view text, const std::string& file = "<input>");

/// Canonical text for a raw or resolved model. Reparsing the output yields a
/// structurally equal model.
std::string pretty(const ArchitectureModel& model);

}  // namespace sccadl
