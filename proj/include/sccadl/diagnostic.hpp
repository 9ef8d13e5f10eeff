#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sccadl {

/// 1-based source range. A default span (line 0) means "no location".
struct SourceSpan {
  std::string file;
  int startLine = 0;
  int startCol = 0;
  int endLine = 0;
  int endCol = 0;

  bool valid() const { return startLine > 0; }
  bool operator==(const SourceSpan&) const = default;
};

enum class Severity { Error, Warning };

/// Stable diagnostic codes. The textual form ("E001") is part of the public
/// contract and is checked against docs/diagnostic-codes.txt.
enum class Code {
  UnknownReference,        // E001
  TypeMismatch,            // E002
  LayerViolation,          // E003
  CycleDetected,           // E004
  DuplicateName,           // E005
  InvalidEnum,             // E006
  EmptyDevice,             // E007
  DuplicateMember,         // E008
  InvalidContract,         // E009
  SyntaxError,             // E010
  UnterminatedBlock,       // E011
  ControllerRequirement,   // E012
  HeterogeneousActivation, // E013
  IoError,                 // E040
  GeneratedNameClash,      // E041
  StateLimitExceeded,      // E050
  SignatureDrift,          // W020
  UnreachableElement,      // W030
  UnusedSource,            // W031
};

struct CodeInfo {
  Code code;
  std::string_view id;
  Severity severity;
  std::string_view name;
};

std::span<const CodeInfo> code_registry();
const CodeInfo& info(Code code);
std::string_view code_id(Code code);
Severity default_severity(Code code);

struct Diagnostic {
  Code code;
  Severity severity;
  std::string message;
  SourceSpan span;

  bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_diagnostic(Code code, std::string message, SourceSpan span = {});

bool has_errors(std::span<const Diagnostic> diagnostics);

/// `CODE severity file:line:col message`
std::string format(const Diagnostic& d);

/// Orders by file, position, then code; used to make reports deterministic.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

/// Raised by query-style operations (dataflow queries, model checking) that
/// fail with a single diagnostic.
class DiagnosticError : public std::runtime_error {
public:
  explicit DiagnosticError(Diagnostic d);
  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
  Diagnostic diagnostic_;
};

}  // namespace sccadl
