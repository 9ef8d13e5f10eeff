#pragma once

// Canonical JSON reports: sorted keys, compact, trailing newline.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sccadl/dataflow.hpp"
#include "sccadl/diagnostic.hpp"
#include "sccadl/verifier.hpp"

namespace sccadl {

struct ImpactResult {
  ElementSet may;
  ElementSet must;
};

/// Everything a single CLI invocation may report. Empty sections are left
/// out of the document, except "diagnostics" and "ok".
struct Report {
  std::vector<Diagnostic> diagnostics;
  std::map<std::string, ImpactResult> impact;       // keyed by source
  std::map<std::string, ElementSet> activators;     // keyed by element
  std::optional<ElementSet> dead;
  std::optional<InteractionGraph> graph;
  std::vector<Verdict> verdicts;
  std::vector<std::string> files;
  bool failed = false;  // a violated invariant also makes the report not ok

  bool ok() const { return !failed && !has_errors(diagnostics); }
};

std::string report_json(const Report& report);

}  // namespace sccadl
