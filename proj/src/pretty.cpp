#include "sccadl/parser.hpp"

#include <sstream>

namespace sccadl {

namespace {

void print_body(std::ostringstream& out, const InteractionContract& contract) {
  if (!contract.activation.disjuncts.empty()) {
    out << "  when provided ";
    for (std::size_t i = 0; i < contract.activation.disjuncts.size(); ++i) {
      if (i > 0) out << " or provided ";
      out << contract.activation.disjuncts[i].name;
    }
    out << '\n';
  }
  for (const auto& req : contract.requirements) {
    out << "  get " << req.target.name;
    if (req.declaredType) out << " as " << to_string(*req.declaredType);
    out << '\n';
  }
  for (const auto& e : contract.emissions) {
    switch (e.kind) {
      case EmissionKind::PublishAlways:
        out << "  always publish\n";
        break;
      case EmissionKind::PublishMaybe:
        out << "  maybe publish\n";
        break;
      case EmissionKind::NoPublish:
        break;
      case EmissionKind::Invoke:
        for (const auto& m : e.methods) out << "  do " << m.name << " on " << e.interface.name << '\n';
        break;
    }
  }
}

}  // namespace

// Taxonomy declarations print on one line each; operators print as blocks
// with one clause per line, separated by blank lines.
std::string pretty(const ArchitectureModel& model) {
  std::ostringstream out;
  const auto& tax = model.taxonomy;

  for (const auto& e : tax.enums) {
    out << "enum " << e.name << " {";
    for (std::size_t i = 0; i < e.literals.size(); ++i) out << (i ? ", " : " ") << e.literals[i];
    out << " }\n";
  }
  for (const auto& iface : tax.interfaces) {
    out << "actioninterface " << iface.name << " {";
    for (const auto& m : iface.methods) {
      out << " method " << m.name << '(';
      for (std::size_t i = 0; i < m.params.size(); ++i) {
        if (i > 0) out << ", ";
        out << m.params[i].name << " as " << to_string(m.params[i].type);
      }
      out << ");";
    }
    out << " }\n";
  }
  for (const auto& d : tax.devices) {
    out << "device " << d.name << " {";
    for (const auto& s : d.sources) out << " source " << s.name << " as " << to_string(s.type) << ';';
    for (const auto& p : d.provides) out << " provides " << p.name << ';';
    out << " }\n";
  }

  bool first = out.tellp() == 0;
  for (const auto& c : model.contexts) {
    if (!first) out << '\n';
    first = false;
    out << "context " << c.name << " as " << to_string(c.outputType) << " {\n";
    print_body(out, c.contract);
    out << "}\n";
  }
  for (const auto& c : model.controllers) {
    if (!first) out << '\n';
    first = false;
    out << "controller " << c.name << " {\n";
    print_body(out, c.contract);
    out << "}\n";
  }
  return out.str();
}

}  // namespace sccadl
