#include "sccadl/model.hpp"

#include <algorithm>

namespace sccadl {

std::string to_string(const DataType& type) {
  switch (type.kind) {
    case TypeKind::Bool:
      return "Bool";
    case TypeKind::Int:
      return "Int";
    case TypeKind::Enum:
    case TypeKind::Opaque:
      return type.name;
  }
  return {};
}

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Unresolved:
      return "unresolved";
    case ElementKind::Source:
      return "source";
    case ElementKind::Context:
      return "context";
    case ElementKind::Controller:
      return "controller";
    case ElementKind::Device:
      return "device class";
    case ElementKind::ActionInterface:
      return "action interface";
    case ElementKind::Enum:
      return "enum";
  }
  return "unknown";
}

namespace {

template <typename Range>
auto find_named(const Range& range, std::string_view name) -> decltype(&*range.begin()) {
  auto it = std::find_if(range.begin(), range.end(),
                         [&](const auto& element) { return element.name == name; });
  return it == range.end() ? nullptr : &*it;
}

}  // namespace

const EnumDecl* find_enum(const ArchitectureModel& m, std::string_view name) {
  return find_named(m.taxonomy.enums, name);
}

const DeviceClass* find_device(const ArchitectureModel& m, std::string_view name) {
  return find_named(m.taxonomy.devices, name);
}

const ActionInterface* find_interface(const ArchitectureModel& m, std::string_view name) {
  return find_named(m.taxonomy.interfaces, name);
}

const ContextOperator* find_context(const ArchitectureModel& m, std::string_view name) {
  return find_named(m.contexts, name);
}

const ControlOperator* find_controller(const ArchitectureModel& m, std::string_view name) {
  return find_named(m.controllers, name);
}

const Source* find_source(const ArchitectureModel& m, std::string_view qualified) {
  auto dot = qualified.find('.');
  if (dot == std::string_view::npos) return nullptr;
  const DeviceClass* device = find_device(m, qualified.substr(0, dot));
  if (!device) return nullptr;
  return find_named(device->sources, qualified.substr(dot + 1));
}

const ActionMethod* find_method(const ActionInterface& iface, std::string_view name) {
  return find_named(iface.methods, name);
}

std::string qualified_name(const Source& source) { return source.owner + "." + source.name; }

std::vector<const Source*> all_sources(const ArchitectureModel& m) {
  std::vector<const Source*> out;
  for (const auto& device : m.taxonomy.devices)
    for (const auto& source : device.sources) out.push_back(&source);
  return out;
}

std::optional<DataType> published_type(const ArchitectureModel& m, const ElementRef& ref) {
  switch (ref.kind) {
    case ElementKind::Source:
      if (const Source* s = find_source(m, ref.name)) return s->type;
      return std::nullopt;
    case ElementKind::Context:
      if (const ContextOperator* c = find_context(m, ref.name)) return c->outputType;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

const Emission* publish_emission(const InteractionContract& c) {
  for (const auto& e : c.emissions)
    if (e.kind == EmissionKind::PublishAlways || e.kind == EmissionKind::PublishMaybe) return &e;
  return nullptr;
}

bool empty(const ArchitectureModel& m) {
  return m.taxonomy.enums.empty() && m.taxonomy.devices.empty() &&
         m.taxonomy.interfaces.empty() && m.contexts.empty() && m.controllers.empty();
}

}  // namespace sccadl
