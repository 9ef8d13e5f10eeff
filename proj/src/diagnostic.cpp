#include "sccadl/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace sccadl {

namespace {

constexpr std::array kRegistry = {
    CodeInfo{Code::UnknownReference, "E001", Severity::Error, "UnknownReference"},
    CodeInfo{Code::TypeMismatch, "E002", Severity::Error, "TypeMismatch"},
    CodeInfo{Code::LayerViolation, "E003", Severity::Error, "LayerViolation"},
    CodeInfo{Code::CycleDetected, "E004", Severity::Error, "CycleDetected"},
    CodeInfo{Code::DuplicateName, "E005", Severity::Error, "DuplicateName"},
    CodeInfo{Code::InvalidEnum, "E006", Severity::Error, "InvalidEnum"},
    CodeInfo{Code::EmptyDevice, "E007", Severity::Error, "EmptyDevice"},
    CodeInfo{Code::DuplicateMember, "E008", Severity::Error, "DuplicateMember"},
    CodeInfo{Code::InvalidContract, "E009", Severity::Error, "InvalidContract"},
    CodeInfo{Code::SyntaxError, "E010", Severity::Error, "SyntaxError"},
    CodeInfo{Code::UnterminatedBlock, "E011", Severity::Error, "UnterminatedBlock"},
    CodeInfo{Code::ControllerRequirement, "E012", Severity::Error, "ControllerRequirement"},
    CodeInfo{Code::HeterogeneousActivation, "E013", Severity::Error,
             "HeterogeneousActivation"},
    CodeInfo{Code::IoError, "E040", Severity::Error, "IoError"},
    CodeInfo{Code::GeneratedNameClash, "E041", Severity::Error, "GeneratedNameClash"},
    CodeInfo{Code::StateLimitExceeded, "E050", Severity::Error, "StateLimitExceeded"},
    CodeInfo{Code::SignatureDrift, "W020", Severity::Warning, "SignatureDrift"},
    CodeInfo{Code::UnreachableElement, "W030", Severity::Warning, "UnreachableElement"},
    CodeInfo{Code::UnusedSource, "W031", Severity::Warning, "UnusedSource"},
};

}  // namespace

std::span<const CodeInfo> code_registry() { return kRegistry; }

const CodeInfo& info(Code code) {
  // The registry is indexed by enumerator value.
  return kRegistry[static_cast<std::size_t>(code)];
}

std::string_view code_id(Code code) { return info(code).id; }

Severity default_severity(Code code) { return info(code).severity; }

Diagnostic make_diagnostic(Code code, std::string message, SourceSpan span) {
  return Diagnostic{code, default_severity(code), std::move(message), std::move(span)};
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format(const Diagnostic& d) {
  std::string out{code_id(d.code)};
  out += d.severity == Severity::Error ? " error " : " warning ";
  out += d.span.file.empty() ? "<input>" : d.span.file;
  out += ':' + std::to_string(d.span.startLine) + ':' + std::to_string(d.span.startCol);
  out += ' ';
  out += d.message;
  return out;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.span.file, a.span.startLine, a.span.startCol, a.code) <
                            std::tie(b.span.file, b.span.startLine, b.span.startCol, b.code);
                   });
}

DiagnosticError::DiagnosticError(Diagnostic d)
    : std::runtime_error(format(d)), diagnostic_(std::move(d)) {}

}  // namespace sccadl
