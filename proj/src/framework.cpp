#include "sccadl/framework.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <json.hpp>

namespace sccadl {

using nlohmann::json;

std::string_view to_string(ReturnKind kind) {
  switch (kind) {
    case ReturnKind::Value:
      return "Value";
    case ReturnKind::OptionalValue:
      return "OptionalValue";
    case ReturnKind::Nothing:
      return "Nothing";
  }
  return "Nothing";
}

namespace {

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string decapitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

std::string bare_name(const std::string& canonical) {
  auto dot = canonical.find('.');
  return dot == std::string::npos ? canonical : canonical.substr(dot + 1);
}

// Short names for a list of publisher references: the bare source or
// context name, or Device+Source where two sources share a bare name.
std::vector<std::string> short_names(const std::vector<std::string>& canonical) {
  std::map<std::string, int> counts;
  for (const auto& c : canonical) ++counts[bare_name(c)];
  std::vector<std::string> out;
  for (const auto& c : canonical) {
    const std::string bare = bare_name(c);
    if (counts[bare] > 1 && c.find('.') != std::string::npos)
      out.push_back(decapitalize(c.substr(0, c.find('.'))) + capitalize(bare));
    else
      out.push_back(bare);
  }
  return out;
}

std::string unique(std::string name, std::set<std::string>& used) {
  std::string candidate = name;
  for (int i = 2; used.count(candidate); ++i) candidate = name + std::to_string(i);
  used.insert(candidate);
  return candidate;
}

std::vector<ValueParam> value_params(const ActionMethod& method) {
  std::vector<ValueParam> out;
  for (const auto& p : method.params) out.push_back({p.name, p.type});
  return out;
}

std::vector<CallbackSignature> map_common(const ArchitectureModel& model, const std::string& owner,
                                          const InteractionContract& contract,
                                          ReturnKind returnKind,
                                          std::optional<DataType> returnType) {
  std::vector<std::string> triggers;
  for (const auto& d : contract.activation.disjuncts) triggers.push_back(d.name);
  const auto trigger_names = short_names(triggers);

  std::vector<std::string> pull_targets;
  for (const auto& r : contract.requirements) pull_targets.push_back(r.target.name);
  const auto pull_names = short_names(pull_targets);

  std::vector<CallbackSignature> out;
  for (std::size_t i = 0; i < contract.activation.disjuncts.size(); ++i) {
    const ElementRef& trigger = contract.activation.disjuncts[i];
    CallbackSignature sig;
    sig.owner = owner;
    sig.name = "onNew" + capitalize(trigger_names[i]);
    sig.trigger = trigger.name;
    sig.activation = {"value", published_type(model, trigger).value_or(DataType::boolean())};
    sig.returnKind = returnKind;
    sig.returnType = returnType;

    std::set<std::string> used{"value"};
    for (std::size_t r = 0; r < contract.requirements.size(); ++r) {
      const DataRequirement& req = contract.requirements[r];
      PullCapability pull;
      pull.name = unique(decapitalize(pull_names[r]), used);
      pull.target = req.target.name;
      pull.targetKind = req.target.kind;
      pull.type = req.valueType.value_or(published_type(model, req.target).value_or(DataType::boolean()));
      sig.pulls.push_back(std::move(pull));
    }
    for (const auto& e : contract.emissions) {
      if (e.kind != EmissionKind::Invoke) continue;
      const ActionInterface* iface = find_interface(model, e.interface.name);
      for (const auto& m : e.methods) {
        InvokeCapability inv;
        inv.name = unique(decapitalize(m.name) + "On" + capitalize(e.interface.name), used);
        inv.interface = e.interface.name;
        inv.method = m.name;
        if (iface)
          if (const ActionMethod* method = find_method(*iface, m.name)) inv.params = value_params(*method);
        sig.invokes.push_back(std::move(inv));
      }
    }
    out.push_back(std::move(sig));
  }
  return out;
}

// JSON encoding ----------------------------------------------------------------

json type_json(const DataType& t) {
  json j;
  switch (t.kind) {
    case TypeKind::Bool:
      j["kind"] = "Bool";
      break;
    case TypeKind::Int:
      j["kind"] = "Int";
      break;
    case TypeKind::Enum:
      j["kind"] = "Enum";
      j["name"] = t.name;
      j["literals"] = t.literals;
      break;
    case TypeKind::Opaque:
      j["kind"] = "Opaque";
      j["name"] = t.name;
      break;
  }
  return j;
}

DataType type_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Bool") return DataType::boolean();
  if (kind == "Int") return DataType::integer();
  if (kind == "Enum")
    return DataType::enumeration(j.at("name").get<std::string>(),
                                 j.at("literals").get<std::vector<std::string>>());
  if (kind == "Opaque") return DataType::opaque(j.at("name").get<std::string>());
  throw std::invalid_argument("unknown type kind '" + kind + "'");
}

json params_json(const std::vector<ValueParam>& params) {
  json arr = json::array();
  for (const auto& p : params) arr.push_back({{"name", p.name}, {"type", type_json(p.type)}});
  return arr;
}

std::vector<ValueParam> params_from_json(const json& arr) {
  std::vector<ValueParam> out;
  for (const auto& p : arr) out.push_back({p.at("name").get<std::string>(), type_from_json(p.at("type"))});
  return out;
}

json callback_json(const CallbackSignature& sig) {
  json j;
  j["name"] = sig.name;
  j["trigger"] = sig.trigger;
  j["activation"] = {{"name", sig.activation.name}, {"type", type_json(sig.activation.type)}};
  json pulls = json::array();
  for (const auto& p : sig.pulls)
    pulls.push_back({{"name", p.name},
                     {"target", p.target},
                     {"targetKind", std::string(to_string(p.targetKind))},
                     {"type", type_json(p.type)}});
  j["pulls"] = std::move(pulls);
  json invokes = json::array();
  for (const auto& inv : sig.invokes)
    invokes.push_back({{"name", inv.name},
                       {"interface", inv.interface},
                       {"method", inv.method},
                       {"params", params_json(inv.params)}});
  j["invokes"] = std::move(invokes);
  json ret = {{"kind", std::string(to_string(sig.returnKind))}};
  if (sig.returnType) ret["type"] = type_json(*sig.returnType);
  j["returns"] = std::move(ret);
  return j;
}

ReturnKind return_kind_from(const std::string& s) {
  if (s == "Value") return ReturnKind::Value;
  if (s == "OptionalValue") return ReturnKind::OptionalValue;
  if (s == "Nothing") return ReturnKind::Nothing;
  throw std::invalid_argument("unknown return kind '" + s + "'");
}

ElementKind target_kind_from(const std::string& s) {
  return s == "context" ? ElementKind::Context : ElementKind::Source;
}

CallbackSignature callback_from_json(const std::string& owner, const json& j) {
  CallbackSignature sig;
  sig.owner = owner;
  sig.name = j.at("name").get<std::string>();
  sig.trigger = j.at("trigger").get<std::string>();
  sig.activation = {j.at("activation").at("name").get<std::string>(),
                    type_from_json(j.at("activation").at("type"))};
  for (const auto& p : j.at("pulls"))
    sig.pulls.push_back({p.at("name").get<std::string>(), p.at("target").get<std::string>(),
                         target_kind_from(p.at("targetKind").get<std::string>()),
                         type_from_json(p.at("type"))});
  for (const auto& inv : j.at("invokes"))
    sig.invokes.push_back({inv.at("name").get<std::string>(), inv.at("interface").get<std::string>(),
                           inv.at("method").get<std::string>(), params_from_json(inv.at("params"))});
  sig.returnKind = return_kind_from(j.at("returns").at("kind").get<std::string>());
  if (j.at("returns").contains("type")) sig.returnType = type_from_json(j.at("returns").at("type"));
  return sig;
}

std::string type_text(const DataType& t) { return to_string(t); }

std::string signature_text(const CallbackSignature& sig) {
  std::string out = sig.name + "(" + sig.activation.name + ": " + type_text(sig.activation.type);
  for (const auto& p : sig.pulls) out += ", " + p.name + ": pull<" + type_text(p.type) + ">";
  for (const auto& inv : sig.invokes) {
    out += ", " + inv.name + ": invoke(";
    for (std::size_t i = 0; i < inv.params.size(); ++i)
      out += (i ? ", " : "") + inv.params[i].name + ": " + type_text(inv.params[i].type);
    out += ")";
  }
  out += ") -> ";
  switch (sig.returnKind) {
    case ReturnKind::Value:
      out += type_text(*sig.returnType);
      break;
    case ReturnKind::OptionalValue:
      out += "optional<" + type_text(*sig.returnType) + ">";
      break;
    case ReturnKind::Nothing:
      out += "nothing";
      break;
  }
  return out;
}

}  // namespace

std::vector<CallbackSignature> map_contract(const ArchitectureModel& model,
                                            const ContextOperator& op) {
  const Emission* publish = publish_emission(op.contract);
  const ReturnKind kind = publish && publish->kind == EmissionKind::PublishMaybe
                              ? ReturnKind::OptionalValue
                              : ReturnKind::Value;
  auto sigs = map_common(model, op.name, op.contract, kind, op.outputType);
  // Contexts never receive invocation capabilities.
  for (auto& s : sigs) s.invokes.clear();
  return sigs;
}

std::vector<CallbackSignature> map_contract(const ArchitectureModel& model,
                                            const ControlOperator& op) {
  auto sigs = map_common(model, op.name, op.contract, ReturnKind::Nothing, std::nullopt);
  for (auto& s : sigs) s.pulls.clear();
  return sigs;
}

FrameworkDescriptor build_descriptor(const ArchitectureModel& model) {
  FrameworkDescriptor d;
  std::set<std::string> pulled;
  for (const auto& c : model.contexts)
    for (const auto& r : c.contract.requirements)
      if (r.target.kind == ElementKind::Source) pulled.insert(r.target.name);

  for (const auto& c : model.contexts)
    d.operators.push_back({c.name, ElementKind::Context, map_contract(model, c)});
  for (const auto& c : model.controllers)
    d.operators.push_back({c.name, ElementKind::Controller, map_contract(model, c)});
  for (const Source* s : all_sources(model)) {
    const std::string q = qualified_name(*s);
    d.sources.push_back({q, s->owner, s->type, "publish", pulled.count(q) > 0});
  }
  for (const auto& iface : model.taxonomy.interfaces) {
    InterfaceEntry entry{iface.name, {}};
    for (const auto& m : iface.methods) entry.methods.push_back({m.name, value_params(m)});
    d.interfaces.push_back(std::move(entry));
  }
  return d;
}

std::string to_json_text(const FrameworkDescriptor& d) {
  json j;
  j["version"] = d.version;
  json operators = json::array();
  for (const auto& op : d.operators) {
    json callbacks = json::array();
    for (const auto& cb : op.callbacks) callbacks.push_back(callback_json(cb));
    operators.push_back({{"name", op.name},
                         {"kind", std::string(to_string(op.kind))},
                         {"callbacks", std::move(callbacks)}});
  }
  j["operators"] = std::move(operators);
  json sources = json::array();
  for (const auto& s : d.sources)
    sources.push_back({{"name", s.name},
                       {"device", s.device},
                       {"type", type_json(s.type)},
                       {"entryPoint", s.entryPoint},
                       {"pulled", s.pulled}});
  j["sources"] = std::move(sources);
  json interfaces = json::array();
  for (const auto& i : d.interfaces) {
    json methods = json::array();
    for (const auto& m : i.methods) methods.push_back({{"name", m.name}, {"params", params_json(m.params)}});
    interfaces.push_back({{"name", i.name}, {"methods", std::move(methods)}});
  }
  j["interfaces"] = std::move(interfaces);
  return j.dump(2) + "\n";
}

std::string emit_descriptor(const ArchitectureModel& model) {
  return to_json_text(build_descriptor(model));
}

FrameworkDescriptor parse_descriptor(std::string_view text) {
  try {
    const json j = json::parse(text);
    FrameworkDescriptor d;
    d.version = j.at("version").get<std::string>();
    if (d.version != kDescriptorVersion)
      throw std::invalid_argument("unsupported descriptor version '" + d.version + "'");
    for (const auto& op : j.at("operators")) {
      OperatorEntry entry;
      entry.name = op.at("name").get<std::string>();
      entry.kind = op.at("kind").get<std::string>() == "controller" ? ElementKind::Controller
                                                                    : ElementKind::Context;
      for (const auto& cb : op.at("callbacks")) entry.callbacks.push_back(callback_from_json(entry.name, cb));
      d.operators.push_back(std::move(entry));
    }
    for (const auto& s : j.at("sources"))
      d.sources.push_back({s.at("name").get<std::string>(), s.at("device").get<std::string>(),
                           type_from_json(s.at("type")), s.at("entryPoint").get<std::string>(),
                           s.at("pulled").get<bool>()});
    for (const auto& i : j.at("interfaces")) {
      InterfaceEntry entry{i.at("name").get<std::string>(), {}};
      for (const auto& m : i.at("methods"))
        entry.methods.push_back({m.at("name").get<std::string>(), params_from_json(m.at("params"))});
      d.interfaces.push_back(std::move(entry));
    }
    return d;
  } catch (const std::exception& e) {
    throw DiagnosticError(
        make_diagnostic(Code::IoError, std::string("malformed framework descriptor: ") + e.what()));
  }
}

std::vector<Diagnostic> signature_drift(const FrameworkDescriptor& previous,
                                        const FrameworkDescriptor& current) {
  std::map<std::string, const CallbackSignature*> before;
  std::map<std::string, const CallbackSignature*> after;
  for (const auto& op : previous.operators)
    for (const auto& cb : op.callbacks) before[op.name + "." + cb.name] = &cb;
  for (const auto& op : current.operators)
    for (const auto& cb : op.callbacks) after[op.name + "." + cb.name] = &cb;

  std::vector<Diagnostic> out;
  for (const auto& [key, old] : before) {
    auto it = after.find(key);
    if (it == after.end()) {
      out.push_back(make_diagnostic(Code::SignatureDrift,
                                    "callback " + key + " was removed; implementations overriding " +
                                        signature_text(*old) + " no longer conform"));
    } else if (!(*it->second == *old)) {
      out.push_back(make_diagnostic(Code::SignatureDrift,
                                    "callback " + key + " changed from " + signature_text(*old) +
                                        " to " + signature_text(*it->second)));
    }
  }
  for (const auto& [key, sig] : after)
    if (!before.count(key))
      out.push_back(make_diagnostic(Code::SignatureDrift,
                                    "callback " + key + " was added: " + signature_text(*sig)));
  return out;
}

std::string namespace_for(std::string_view stem) {
  std::string out;
  for (char c : stem) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), 'n');
  return out;
}

}  // namespace sccadl
