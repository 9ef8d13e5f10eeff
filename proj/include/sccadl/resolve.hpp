#pragma once

#include <vector>

#include "sccadl/diagnostic.hpp"
#include "sccadl/model.hpp"

namespace sccadl {

struct ResolveResult {
  ArchitectureModel model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

/// Binds every reference of a raw model to its declaration.
///
/// Reports E001 for dangling names, E005 for collisions in the flat
/// namespace, E006 for malformed enums, E007 for devices with neither
/// sources nor provided actions, and E008 for duplicate members inside a
/// declaration. Resolution is idempotent: resolving a resolved model gives
/// it back unchanged.
ResolveResult resolve(ArchitectureModel model);

}  // namespace sccadl
