#pragma once

// Projection of interaction contracts onto callback signatures, the neutral
// framework descriptor, and C++ skeleton generation.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sccadl/diagnostic.hpp"
#include "sccadl/model.hpp"

namespace sccadl {

inline constexpr std::string_view kDescriptorVersion = "sccadl-fw/1";

struct ValueParam {
  std::string name;
  DataType type;
  bool operator==(const ValueParam&) const = default;
};

/// A callable parameter that reads one data requirement.
struct PullCapability {
  std::string name;    // parameter name
  std::string target;  // canonical name of the pulled source or context
  ElementKind targetKind = ElementKind::Source;
  DataType type;
  bool operator==(const PullCapability&) const = default;
};

/// A callable parameter that invokes one licensed action method.
struct InvokeCapability {
  std::string name;  // parameter name, e.g. activateOnAlarm
  std::string interface;
  std::string method;
  std::vector<ValueParam> params;
  bool operator==(const InvokeCapability&) const = default;
};

enum class ReturnKind { Value, OptionalValue, Nothing };

std::string_view to_string(ReturnKind kind);

struct CallbackSignature {
  std::string owner;
  std::string name;     // "onNew" + capitalized disjunct name
  std::string trigger;  // canonical name of the activating publisher
  ValueParam activation;
  std::vector<PullCapability> pulls;
  std::vector<InvokeCapability> invokes;
  ReturnKind returnKind = ReturnKind::Nothing;
  std::optional<DataType> returnType;
  bool operator==(const CallbackSignature&) const = default;
};

struct OperatorEntry {
  std::string name;
  ElementKind kind = ElementKind::Context;  // Context or Controller
  std::vector<CallbackSignature> callbacks;
  bool operator==(const OperatorEntry&) const = default;
};

struct SourceEntry {
  std::string name;  // Device.source
  std::string device;
  DataType type;
  std::string entryPoint;  // always "publish"
  bool pulled = false;     // whether some context pulls it (the stub then requires read())
  bool operator==(const SourceEntry&) const = default;
};

struct MethodEntry {
  std::string name;
  std::vector<ValueParam> params;
  bool operator==(const MethodEntry&) const = default;
};

struct InterfaceEntry {
  std::string name;
  std::vector<MethodEntry> methods;
  bool operator==(const InterfaceEntry&) const = default;
};

struct FrameworkDescriptor {
  std::string version{kDescriptorVersion};
  std::vector<OperatorEntry> operators;
  std::vector<SourceEntry> sources;
  std::vector<InterfaceEntry> interfaces;
  bool operator==(const FrameworkDescriptor&) const = default;
};

/// Callback signatures of one operator, one per activation disjunct, in
/// declaration order. Requires a fully checked model.
std::vector<CallbackSignature> map_contract(const ArchitectureModel& model,
                                            const ContextOperator& op);
std::vector<CallbackSignature> map_contract(const ArchitectureModel& model,
                                            const ControlOperator& op);

FrameworkDescriptor build_descriptor(const ArchitectureModel& model);

/// Canonical JSON text: sorted keys, two-space indent, LF, trailing newline.
std::string emit_descriptor(const ArchitectureModel& model);
std::string to_json_text(const FrameworkDescriptor& descriptor);

/// Throws DiagnosticError (E040) when the text is not a descriptor of the
/// supported version.
FrameworkDescriptor parse_descriptor(std::string_view json_text);

/// W020 for each callback that was added, removed, or changed signature
/// between two descriptors.
std::vector<Diagnostic> signature_drift(const FrameworkDescriptor& previous,
                                        const FrameworkDescriptor& current);

struct GenerateOptions {
  std::string cppNamespace = "scc";
  bool writeDescriptor = false;
};

struct GeneratedFile {
  std::string path;  // relative to the output directory, e.g. "generated/Alarm.hpp"
  std::string contents;
  bool operator==(const GeneratedFile&) const = default;
};

/// In-memory skeleton set, sorted by path. Reports E041 when two generated
/// C++ names collide.
struct SkeletonSet {
  std::vector<GeneratedFile> files;
  std::vector<Diagnostic> diagnostics;
};

SkeletonSet render_skeletons(const ArchitectureModel& model, const GenerateOptions& options = {});

struct GenerateResult {
  std::vector<std::string> files;  // written paths, relative to outDir
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

/// Writes the skeletons under `<outDir>/generated/`. Files in that directory
/// left over from an earlier generation are removed; nothing outside it is
/// touched. I/O failures are reported as E040.
GenerateResult generate_skeletons(const ArchitectureModel& model,
                                  const std::filesystem::path& outDir,
                                  const GenerateOptions& options = {});

/// Turns an arbitrary string (typically a file stem) into a C++ identifier.
std::string namespace_for(std::string_view stem);

}  // namespace sccadl
