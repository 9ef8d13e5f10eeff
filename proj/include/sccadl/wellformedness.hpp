#pragma once

#include <span>
#include <vector>

#include "sccadl/diagnostic.hpp"
#include "sccadl/model.hpp"

namespace sccadl {

struct FrameworkDescriptor;

struct CheckReport {
  std::vector<Diagnostic> diagnostics;

  /// True iff no diagnostic has error severity.
  bool ok() const { return !has_errors(diagnostics); }
  void append(const CheckReport& other);
};

// All checks take a resolved model, are pure, and may run in any order.

/// Layer rules of the SCC style (E003) and the controller pull ban (E012):
/// contexts are activated by sources or contexts and never invoke actions;
/// controllers are activated by contexts only, never publish, never pull;
/// pulls target sources or contexts; `do` and `provides` name action
/// interfaces.
CheckReport check_layering(const ArchitectureModel& model);

/// Shape of each interaction contract (E009): non-empty activation, exactly
/// one publish clause per context, exactly one licensed action interface per
/// controller, no requirement on the owning operator.
CheckReport check_contracts(const ArchitectureModel& model);

/// E002 when an annotated requirement type differs from the target's
/// published type; E013 when activation disjuncts carry different types.
/// With a previously generated descriptor, also reports W020 for every
/// callback whose signature changed.
CheckReport check_types(const ArchitectureModel& model,
                        const FrameworkDescriptor* previous = nullptr);

/// E004 for every strongly connected component of the push graph
/// (publisher -> activated operator) that contains a cycle. The message
/// lists one witness cycle, e.g. [A, B, A].
CheckReport check_push_acyclicity(const ArchitectureModel& model);

/// Runs every check above.
CheckReport check_all(const ArchitectureModel& model);

}  // namespace sccadl
