#include "sccadl/resolve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sccadl {

namespace {

struct Declared {
  ElementKind kind;
  SourceSpan span;
};

std::string where(const SourceSpan& s) {
  return std::to_string(s.startLine) + ":" + std::to_string(s.startCol);
}

class Resolver {
public:
  explicit Resolver(ArchitectureModel model) : model_(std::move(model)) {}

  ResolveResult run() {
    collect_names();
    for (auto& e : model_.taxonomy.enums) check_enum(e);
    for (auto& iface : model_.taxonomy.interfaces) resolve_interface(iface);
    for (auto& device : model_.taxonomy.devices) resolve_device(device);
    for (auto& c : model_.contexts) {
      resolve_type(c.outputType);
      resolve_contract(c.contract);
    }
    for (auto& c : model_.controllers) resolve_contract(c.contract);
    // Requirement value types depend on context output types, which are
    // only final once every context has been visited.
    for (auto& c : model_.contexts) fill_value_types(c.contract);
    for (auto& c : model_.controllers) fill_value_types(c.contract);

    sort_diagnostics(diagnostics_);
    return ResolveResult{std::move(model_), std::move(diagnostics_)};
  }

private:
  void report(Code code, std::string message, const SourceSpan& span) {
    diagnostics_.push_back(make_diagnostic(code, std::move(message), span));
  }

  void collect_names() {
    struct Entry {
      std::string name;
      ElementKind kind;
      SourceSpan span;
    };
    std::vector<Entry> entries;
    const auto& tax = model_.taxonomy;
    for (const auto& e : tax.enums) entries.push_back({e.name, ElementKind::Enum, e.at.span});
    for (const auto& d : tax.devices) entries.push_back({d.name, ElementKind::Device, d.at.span});
    for (const auto& i : tax.interfaces)
      entries.push_back({i.name, ElementKind::ActionInterface, i.at.span});
    for (const auto& c : model_.contexts) entries.push_back({c.name, ElementKind::Context, c.at.span});
    for (const auto& c : model_.controllers)
      entries.push_back({c.name, ElementKind::Controller, c.at.span});

    // The textually first declaration owns the name; later ones are reported.
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.span.startLine, a.span.startCol) < std::tie(b.span.startLine, b.span.startCol);
    });
    for (auto& entry : entries) {
      auto [it, inserted] = names_.try_emplace(entry.name, Declared{entry.kind, entry.span});
      if (!inserted) {
        report(Code::DuplicateName,
               "'" + entry.name + "' is already declared as " +
                   std::string(to_string(it->second.kind)) +
                   (it->second.span.valid() ? " at " + where(it->second.span) : std::string()),
               entry.span);
      }
    }
  }

  void check_enum(const EnumDecl& e) {
    if (e.literals.empty()) {
      report(Code::InvalidEnum, "enum '" + e.name + "' has no literals", e.at.span);
      return;
    }
    std::set<std::string> seen;
    for (const auto& lit : e.literals)
      if (!seen.insert(lit).second)
        report(Code::InvalidEnum, "enum '" + e.name + "' repeats literal '" + lit + "'", e.at.span);
  }

  void resolve_type(DataType& type) const {
    if (type.kind != TypeKind::Enum && type.kind != TypeKind::Opaque) return;
    if (const EnumDecl* decl = find_enum(model_, type.name))
      type = DataType::enumeration(decl->name, decl->literals);
    else
      type = DataType::opaque(type.name);
  }

  void resolve_interface(ActionInterface& iface) {
    std::set<std::string> methods;
    for (auto& m : iface.methods) {
      if (!methods.insert(m.name).second)
        report(Code::DuplicateMember,
               "action interface '" + iface.name + "' declares method '" + m.name + "' twice",
               m.at.span);
      std::set<std::string> params;
      for (auto& p : m.params) {
        if (!params.insert(p.name).second)
          report(Code::DuplicateMember,
                 "method '" + iface.name + "." + m.name + "' declares parameter '" + p.name +
                     "' twice",
                 p.at.span);
        resolve_type(p.type);
      }
    }
  }

  void resolve_device(DeviceClass& device) {
    if (device.sources.empty() && device.provides.empty())
      report(Code::EmptyDevice,
             "device class '" + device.name + "' has neither sources nor provided actions",
             device.at.span);
    std::set<std::string> sources;
    for (auto& s : device.sources) {
      s.owner = device.name;
      if (!sources.insert(s.name).second)
        report(Code::DuplicateMember,
               "device class '" + device.name + "' declares source '" + s.name + "' twice",
               s.at.span);
      resolve_type(s.type);
    }
    std::set<std::string> provided;
    for (auto& p : device.provides) {
      resolve_ref(p);
      if (!provided.insert(p.name).second)
        report(Code::DuplicateMember,
               "device class '" + device.name + "' provides '" + p.name + "' twice", p.at.span);
    }
  }

  void resolve_ref(ElementRef& ref) {
    const auto dot = ref.name.find('.');
    if (dot != std::string::npos) {
      const std::string owner = ref.name.substr(0, dot);
      const std::string member = ref.name.substr(dot + 1);
      auto it = names_.find(owner);
      if (it == names_.end()) {
        unresolved(ref, "unknown device class '" + owner + "'");
      } else if (it->second.kind != ElementKind::Device) {
        unresolved(ref, "'" + owner + "' is a " + std::string(to_string(it->second.kind)) +
                            ", not a device class");
      } else if (!find_source(model_, ref.name)) {
        unresolved(ref, "device class '" + owner + "' has no source '" + member + "'");
      } else {
        ref.kind = ElementKind::Source;
      }
      return;
    }
    if (auto it = names_.find(ref.name); it != names_.end()) {
      ref.kind = it->second.kind;
      return;
    }
    std::string message = "unknown name '" + ref.name + "'";
    for (const Source* s : all_sources(model_)) {
      if (s->name == ref.name) {
        message += "; did you mean '" + qualified_name(*s) + "'?";
        break;
      }
    }
    unresolved(ref, std::move(message));
  }

  void unresolved(ElementRef& ref, std::string message) {
    ref.kind = ElementKind::Unresolved;
    report(Code::UnknownReference, std::move(message), ref.at.span);
  }

  void resolve_contract(InteractionContract& contract) {
    std::set<std::string> disjuncts;
    for (auto& d : contract.activation.disjuncts) {
      resolve_ref(d);
      if (!disjuncts.insert(d.name).second)
        report(Code::DuplicateMember, "activation lists '" + d.name + "' twice", d.at.span);
    }
    std::set<std::string> targets;
    for (auto& req : contract.requirements) {
      resolve_ref(req.target);
      if (req.declaredType) resolve_type(*req.declaredType);
      if (!targets.insert(req.target.name).second)
        report(Code::DuplicateMember, "data requirement on '" + req.target.name + "' is repeated",
               req.target.at.span);
    }
    for (auto& e : contract.emissions) {
      if (e.kind != EmissionKind::Invoke) continue;
      resolve_ref(e.interface);
      const ActionInterface* iface = e.interface.kind == ElementKind::ActionInterface
                                         ? find_interface(model_, e.interface.name)
                                         : nullptr;
      std::set<std::string> methods;
      for (const auto& m : e.methods) {
        if (!methods.insert(m.name).second)
          report(Code::DuplicateMember,
                 "method '" + m.name + "' of '" + e.interface.name + "' is licensed twice",
                 m.at.span);
        if (iface && !find_method(*iface, m.name))
          report(Code::UnknownReference,
                 "action interface '" + iface->name + "' has no method '" + m.name + "'",
                 m.at.span);
      }
    }
  }

  void fill_value_types(InteractionContract& contract) const {
    for (auto& req : contract.requirements) req.valueType = published_type(model_, req.target);
  }

  ArchitectureModel model_;
  std::map<std::string, Declared> names_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ResolveResult resolve(ArchitectureModel model) { return Resolver(std::move(model)).run(); }

}  // namespace sccadl
