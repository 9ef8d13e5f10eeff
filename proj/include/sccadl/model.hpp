#pragma once

// In-memory architecture model shared by every pass.
//
// The same types describe both the raw model produced by the parser and the
// resolved model produced by resolve(): resolution binds each ElementRef to
// the kind of declaration it names, canonicalizes its spelling, upgrades
// named types to enums where an enum is declared, and fills in the value
// type of each data requirement. Style constraints (layering, emission
// shape, acyclicity) are not enforced by the types; the wellformedness
// checks report them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sccadl/diagnostic.hpp"

namespace sccadl {

/// Source location of a model node. Anchors never take part in structural
/// equality, so a model read back from pretty-printed text compares equal
/// to the original.
struct Anchor {
  SourceSpan span;
  friend bool operator==(const Anchor&, const Anchor&) { return true; }
};

enum class TypeKind { Bool, Int, Enum, Opaque };

struct DataType {
  TypeKind kind = TypeKind::Bool;
  std::string name;                   // Enum and Opaque
  std::vector<std::string> literals;  // Enum

  static DataType boolean() { return {TypeKind::Bool, {}, {}}; }
  static DataType integer() { return {TypeKind::Int, {}, {}}; }
  static DataType opaque(std::string name) { return {TypeKind::Opaque, std::move(name), {}}; }
  static DataType enumeration(std::string name, std::vector<std::string> literals) {
    return {TypeKind::Enum, std::move(name), std::move(literals)};
  }

  bool operator==(const DataType&) const = default;
};

/// Surface spelling: "Bool", "Int", or the type name.
std::string to_string(const DataType& type);

struct EnumDecl {
  std::string name;
  std::vector<std::string> literals;
  Anchor at;
  bool operator==(const EnumDecl&) const = default;
};

struct Source {
  std::string name;
  DataType type;
  std::string owner;
  Anchor at;
  bool operator==(const Source&) const = default;
};

struct Param {
  std::string name;
  DataType type;
  Anchor at;
  bool operator==(const Param&) const = default;
};

struct ActionMethod {
  std::string name;
  std::vector<Param> params;
  Anchor at;
  bool operator==(const ActionMethod&) const = default;
};

struct ActionInterface {
  std::string name;
  std::vector<ActionMethod> methods;
  Anchor at;
  bool operator==(const ActionInterface&) const = default;
};

enum class ElementKind { Unresolved, Source, Context, Controller, Device, ActionInterface, Enum };

std::string_view to_string(ElementKind kind);

/// A by-name reference. Raw refs keep the spelling from the text; resolved
/// refs carry the canonical name ("Device.source" for sources).
struct ElementRef {
  ElementKind kind = ElementKind::Unresolved;
  std::string name;
  Anchor at;
  bool operator==(const ElementRef&) const = default;
};

struct DeviceClass {
  std::string name;
  std::vector<Source> sources;
  std::vector<ElementRef> provides;
  Anchor at;
  bool operator==(const DeviceClass&) const = default;
};

struct ActivationCondition {
  std::vector<ElementRef> disjuncts;
  bool operator==(const ActivationCondition&) const = default;
};

struct DataRequirement {
  ElementRef target;
  std::optional<DataType> declaredType;  // optional `as T` annotation
  std::optional<DataType> valueType;     // copied from the target by resolve()
  bool operator==(const DataRequirement&) const = default;
};

enum class EmissionKind { PublishAlways, PublishMaybe, NoPublish, Invoke };

struct MethodRef {
  std::string name;
  Anchor at;
  bool operator==(const MethodRef&) const = default;
};

struct Emission {
  EmissionKind kind = EmissionKind::NoPublish;
  ElementRef interface;            // Invoke only
  std::vector<MethodRef> methods;  // Invoke only, declaration order
  Anchor at;
  bool operator==(const Emission&) const = default;
};

struct InteractionContract {
  ActivationCondition activation;
  std::vector<DataRequirement> requirements;
  std::vector<Emission> emissions;
  bool operator==(const InteractionContract&) const = default;
};

struct ContextOperator {
  std::string name;
  DataType outputType;
  InteractionContract contract;
  Anchor at;
  bool operator==(const ContextOperator&) const = default;
};

struct ControlOperator {
  std::string name;
  InteractionContract contract;
  Anchor at;
  bool operator==(const ControlOperator&) const = default;
};

struct Taxonomy {
  std::vector<EnumDecl> enums;
  std::vector<DeviceClass> devices;
  std::vector<ActionInterface> interfaces;
  bool operator==(const Taxonomy&) const = default;
};

struct ArchitectureModel {
  Taxonomy taxonomy;
  std::vector<ContextOperator> contexts;
  std::vector<ControlOperator> controllers;
  bool operator==(const ArchitectureModel&) const = default;
};

// Lookups. All return nullptr when the name is not declared.
const EnumDecl* find_enum(const ArchitectureModel& m, std::string_view name);
const DeviceClass* find_device(const ArchitectureModel& m, std::string_view name);
const ActionInterface* find_interface(const ArchitectureModel& m, std::string_view name);
const ContextOperator* find_context(const ArchitectureModel& m, std::string_view name);
const ControlOperator* find_controller(const ArchitectureModel& m, std::string_view name);
/// `qualified` is "Device.source".
const Source* find_source(const ArchitectureModel& m, std::string_view qualified);
const ActionMethod* find_method(const ActionInterface& iface, std::string_view name);

std::string qualified_name(const Source& source);

/// Every source of the taxonomy, in declaration order.
std::vector<const Source*> all_sources(const ArchitectureModel& m);

/// Type carried by publications of a source or context; nullopt for
/// anything else.
std::optional<DataType> published_type(const ArchitectureModel& m, const ElementRef& ref);

/// The single publish emission (PublishAlways/PublishMaybe) of a contract,
/// or nullptr when there is none.
const Emission* publish_emission(const InteractionContract& c);

bool empty(const ArchitectureModel& m);

}  // namespace sccadl
