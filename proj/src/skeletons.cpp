// C++ skeleton rendering.
//
// Every context and controller becomes an abstract class whose pure virtual
// callbacks are the mapped contract signatures. Pulls and invocations are
// reachable only through nested capability classes whose constructors are
// private to the generated Runtime, so developer code can perform exactly
// the interactions its contract licenses.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "sccadl/framework.hpp"

namespace sccadl {

namespace {

const std::set<std::string>& cpp_keywords() {
  static const std::set<std::string> words = {
      "alignas",   "alignof",   "and",       "and_eq",       "asm",       "auto",
      "bitand",    "bitor",     "bool",      "break",        "case",      "catch",
      "char",      "char8_t",   "char16_t",  "char32_t",     "class",     "compl",
      "concept",   "const",     "consteval", "constexpr",    "constinit", "const_cast",
      "continue",  "co_await",  "co_return", "co_yield",     "decltype",  "default",
      "delete",    "do",        "double",    "dynamic_cast", "else",      "enum",
      "explicit",  "export",    "extern",    "false",        "float",     "for",
      "friend",    "goto",      "if",        "inline",       "int",       "long",
      "mutable",   "namespace", "new",       "noexcept",     "not",       "not_eq",
      "nullptr",   "operator",  "or",        "or_eq",        "private",   "protected",
      "public",    "register",  "reinterpret_cast", "requires", "return",  "short",
      "signed",    "sizeof",    "static",    "static_assert", "static_cast", "struct",
      "switch",    "template",  "this",      "thread_local", "throw",     "true",
      "try",       "typedef",   "typeid",    "typename",     "union",     "unsigned",
      "using",     "virtual",   "void",      "volatile",     "wchar_t",   "while",
      "xor",       "xor_eq",    "std"};
  return words;
}

std::string ident(const std::string& name) {
  return cpp_keywords().count(name) ? name + "_" : name;
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string decapitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

std::string cpp_type(const DataType& t) {
  switch (t.kind) {
    case TypeKind::Bool:
      return "bool";
    case TypeKind::Int:
      return "int";
    case TypeKind::Enum:
    case TypeKind::Opaque:
      return ident(t.name);
  }
  return "void";
}

std::string source_class(const Source& s) { return ident(s.owner + capitalize(s.name)); }
std::string source_class(const std::string& qualified) {
  auto dot = qualified.find('.');
  return ident(qualified.substr(0, dot) + capitalize(qualified.substr(dot + 1)));
}

std::string pull_class(const PullCapability& p) { return capitalize(p.name) + "Pull"; }
std::string invoke_class(const InvokeCapability& i) { return capitalize(i.name); }

std::string pull_result(const PullCapability& p) {
  // Contexts may not have published yet when they are pulled.
  return p.targetKind == ElementKind::Context ? "std::optional<" + cpp_type(p.type) + ">"
                                              : cpp_type(p.type);
}

std::string return_type(const CallbackSignature& sig) {
  switch (sig.returnKind) {
    case ReturnKind::Value:
      return cpp_type(*sig.returnType);
    case ReturnKind::OptionalValue:
      return "std::optional<" + cpp_type(*sig.returnType) + ">";
    case ReturnKind::Nothing:
      return "void";
  }
  return "void";
}

std::string param_list(const std::vector<ValueParam>& params, bool with_names) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += cpp_type(params[i].type);
    if (with_names) out += " " + ident(params[i].name);
  }
  return out;
}

std::string arg_list(const std::vector<ValueParam>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += ident(params[i].name);
  }
  return out;
}

bool needs_types_unit(const ArchitectureModel& m) {
  if (!m.taxonomy.enums.empty()) return true;
  auto opaque = [](const DataType& t) { return t.kind == TypeKind::Opaque; };
  for (const Source* s : all_sources(m))
    if (opaque(s->type)) return true;
  for (const auto& i : m.taxonomy.interfaces)
    for (const auto& meth : i.methods)
      for (const auto& p : meth.params)
        if (opaque(p.type)) return true;
  for (const auto& c : m.contexts)
    if (opaque(c.outputType)) return true;
  return false;
}

constexpr const char* kBanner =
    "// Generated by sccadl from the architecture description.\n"
    "// Do not edit: regenerate instead. Implement the abstract classes in your\n"
    "// own sources, outside this directory.\n";

class Renderer {
public:
  Renderer(const ArchitectureModel& model, const GenerateOptions& options)
      : model_(model), ns_(options.cppNamespace), descriptor_(build_descriptor(model)),
        types_unit_(needs_types_unit(model)) {
    for (const auto& op : descriptor_.operators) operators_[op.name] = &op;
  }

  SkeletonSet run() {
    check_names();
    if (!has_errors(set_.diagnostics)) {
      if (types_unit_) add("Types.hpp", types());
      for (const auto& c : model_.contexts) add(ident(c.name) + ".hpp", operator_unit(c.name, true));
      for (const auto& c : model_.controllers) add(ident(c.name) + ".hpp", operator_unit(c.name, false));
      for (const Source* s : all_sources(model_)) add(source_class(*s) + ".hpp", source_unit(*s));
      for (const auto& i : model_.taxonomy.interfaces) add(ident(i.name) + ".hpp", interface_unit(i));
      add("Runtime.hpp", runtime());
    }
    std::sort(set_.files.begin(), set_.files.end(),
              [](const GeneratedFile& a, const GeneratedFile& b) { return a.path < b.path; });
    return std::move(set_);
  }

private:
  void add(const std::string& name, std::string contents) {
    set_.files.push_back({"generated/" + name, std::move(contents)});
  }

  // Every generated class lives in one namespace and one directory, and the
  // runtime keeps one member per class named after it with a lowercase
  // first letter; names must stay distinct under that mapping.
  void check_names() {
    std::map<std::string, std::string> taken{{"runtime", "the runtime glue"},
                                             {"types", "the shared type unit"}};
    auto claim = [&](const std::string& name, const std::string& what, const SourceSpan& span) {
      auto [it, inserted] = taken.try_emplace(decapitalize(name), what);
      if (!inserted)
        set_.diagnostics.push_back(make_diagnostic(
            Code::GeneratedNameClash,
            "generated name '" + name + "' for " + what + " collides with " + it->second, span));
    };
    for (const auto& e : model_.taxonomy.enums) claim(ident(e.name), "enum '" + e.name + "'", e.at.span);
    for (const auto& c : model_.contexts) claim(ident(c.name), "context '" + c.name + "'", c.at.span);
    for (const auto& c : model_.controllers)
      claim(ident(c.name), "controller '" + c.name + "'", c.at.span);
    for (const auto& i : model_.taxonomy.interfaces)
      claim(ident(i.name), "action interface '" + i.name + "'", i.at.span);
    for (const Source* s : all_sources(model_))
      claim(source_class(*s), "source '" + qualified_name(*s) + "'", s->at.span);
  }

  std::string open_unit(const std::vector<std::string>& std_headers,
                        const std::vector<std::string>& local_headers) const {
    std::ostringstream out;
    out << kBanner << "\n#pragma once\n\n";
    for (const auto& h : std_headers) out << "#include <" << h << ">\n";
    if (!std_headers.empty() && (!local_headers.empty() || types_unit_)) out << '\n';
    if (types_unit_) out << "#include \"Types.hpp\"\n";
    for (const auto& h : local_headers) out << "#include \"" << h << "\"\n";
    if (!std_headers.empty() || !local_headers.empty() || types_unit_) out << '\n';
    out << "namespace " << ns_ << " {\n\n";
    return out.str();
  }

  std::string close_unit() const { return "\n}  // namespace " + ns_ + "\n"; }

  std::string types() const {
    std::ostringstream out;
    out << kBanner << "\n#pragma once\n\n#include <any>\n\nnamespace " << ns_ << " {\n\n";
    for (const auto& e : model_.taxonomy.enums) {
      out << "enum class " << ident(e.name) << " {";
      for (std::size_t i = 0; i < e.literals.size(); ++i)
        out << (i ? ", " : " ") << ident(e.literals[i]);
      out << " };\n\n";
    }
    std::set<std::string> opaque;
    auto note = [&](const DataType& t) {
      if (t.kind == TypeKind::Opaque) opaque.insert(t.name);
    };
    for (const Source* s : all_sources(model_)) note(s->type);
    for (const auto& i : model_.taxonomy.interfaces)
      for (const auto& m : i.methods)
        for (const auto& p : m.params) note(p.type);
    for (const auto& c : model_.contexts) note(c.outputType);
    for (const auto& name : opaque)
      out << "/// Opaque architecture type; the payload is application-defined.\nstruct "
          << ident(name) << " {\n  std::any payload;\n};\n\n";
    std::string text = out.str();
    text.pop_back();
    return text + close_unit();
  }

  std::string operator_unit(const std::string& name, bool is_context) const {
    const OperatorEntry& entry = *operators_.at(name);
    const std::string cls = ident(name);
    std::ostringstream out;
    std::vector<std::string> headers{"functional", "utility"};
    if (is_context) headers.insert(headers.begin() + 1, "optional");
    out << open_unit(headers, {});
    out << "class Runtime;\n\n";
    out << "/// " << (is_context ? "Context " : "Controller ") << name << ".\n";
    out << "///\n/// Derive from this class and override every callback. "
        << (is_context ? "The return value is the\n/// publication; "
                       : "Actions are commanded\n/// through the capability parameters; ")
        << "no other interaction is available.\n";
    out << "class " << cls << " {\npublic:\n";

    // All callbacks of an operator share the same capabilities.
    const CallbackSignature* first = entry.callbacks.empty() ? nullptr : &entry.callbacks.front();
    if (first) {
      for (const auto& p : first->pulls) {
        const std::string pc = pull_class(p);
        const std::string result = pull_result(p);
        out << "  /// Reads " << p.target << ".\n"
            << "  class " << pc << " {\n  public:\n"
            << "    " << result << " operator()() const { return read_(); }\n\n"
            << "  private:\n    friend class Runtime;\n"
            << "    explicit " << pc << "(std::function<" << result
            << "()> read) : read_(std::move(read)) {}\n"
            << "    std::function<" << result << "()> read_;\n  };\n\n";
      }
      for (const auto& i : first->invokes) {
        const std::string ic = invoke_class(i);
        const std::string sig = "void(" + param_list(i.params, false) + ")";
        out << "  /// Invokes " << i.interface << "." << i.method << ".\n"
            << "  class " << ic << " {\n  public:\n"
            << "    void operator()(" << param_list(i.params, true) << ") const { invoke_("
            << arg_list(i.params) << "); }\n\n"
            << "  private:\n    friend class Runtime;\n"
            << "    explicit " << ic << "(std::function<" << sig
            << "> invoke) : invoke_(std::move(invoke)) {}\n"
            << "    std::function<" << sig << "> invoke_;\n  };\n\n";
      }
    }

    out << "  " << cls << "() = default;\n"
        << "  " << cls << "(const " << cls << "&) = delete;\n"
        << "  " << cls << "& operator=(const " << cls << "&) = delete;\n"
        << "  virtual ~" << cls << "() = default;\n";

    for (const auto& cb : entry.callbacks) {
      out << "\n  /// Activated when " << cb.trigger << " publishes.";
      if (cb.returnKind == ReturnKind::OptionalValue)
        out << " Return std::nullopt to skip\n  /// publishing.";
      out << "\n  virtual " << return_type(cb) << " " << ident(cb.name) << "("
          << cpp_type(cb.activation.type) << " " << cb.activation.name;
      for (const auto& p : cb.pulls) out << ", " << pull_class(p) << " " << ident(p.name);
      for (const auto& i : cb.invokes) out << ", " << invoke_class(i) << " " << ident(i.name);
      out << ") = 0;\n";
    }
    out << "};\n";
    return out.str() + close_unit();
  }

  std::string source_unit(const Source& s) const {
    const std::string cls = source_class(s);
    const std::string q = qualified_name(s);
    const std::string t = cpp_type(s.type);
    const bool pulled = std::any_of(descriptor_.sources.begin(), descriptor_.sources.end(),
                                    [&](const SourceEntry& e) { return e.name == q && e.pulled; });
    std::ostringstream out;
    out << open_unit({"functional", "stdexcept"}, {});
    out << "class Runtime;\n\n";
    out << "/// Source " << q << ".\n///\n/// The device driver calls publish() for each new reading; every call\n"
        << "/// is one stimulus, processed to completion.";
    if (pulled) out << " Contexts pull the current value\n/// through read().";
    out << "\n";
    out << "class " << cls << " {\npublic:\n"
        << "  " << cls << "() = default;\n"
        << "  " << cls << "(const " << cls << "&) = delete;\n"
        << "  " << cls << "& operator=(const " << cls << "&) = delete;\n"
        << "  virtual ~" << cls << "() = default;\n\n"
        << "  void publish(" << t << " value) {\n"
        << "    if (!sink_) throw std::logic_error(\"" << q << " is not attached to a Runtime\");\n"
        << "    sink_(value);\n  }\n";
    if (pulled) out << "\n  virtual " << t << " read() = 0;\n";
    out << "\nprivate:\n  friend class Runtime;\n  std::function<void(" << t << ")> sink_;\n};\n";
    return out.str() + close_unit();
  }

  std::string interface_unit(const ActionInterface& iface) const {
    std::ostringstream out;
    out << open_unit({}, {});
    out << "/// Action interface " << iface.name << ", implemented by the providing device.\n"
        << "class " << ident(iface.name) << " {\npublic:\n"
        << "  virtual ~" << ident(iface.name) << "() = default;\n";
    for (const auto& m : iface.methods) {
      std::vector<ValueParam> params;
      for (const auto& p : m.params) params.push_back({p.name, p.type});
      out << "  virtual void " << ident(m.name) << "(" << param_list(params, true) << ") = 0;\n";
    }
    out << "};\n";
    return out.str() + close_unit();
  }

  // Runtime glue ---------------------------------------------------------------

  struct Consumer {
    std::string op;
    const CallbackSignature* callback;
  };

  std::vector<Consumer> consumers_of(const std::string& publisher) const {
    std::vector<Consumer> out;
    for (const auto& op : descriptor_.operators)
      for (const auto& cb : op.callbacks)
        if (cb.trigger == publisher) out.push_back({op.name, &cb});
    return out;
  }

  static std::string member(const std::string& cls) { return decapitalize(cls) + "_"; }
  static std::string dispatcher(const std::string& op, const CallbackSignature& cb) {
    return "activate" + capitalize(op) + "_" + cb.name;
  }
  static std::string publisher_fn(const std::string& name) {
    const auto dot = name.find('.');
    if (dot == std::string::npos) return "publish" + capitalize(name);
    return "publish" + capitalize(name.substr(0, dot)) + capitalize(name.substr(dot + 1));
  }

  std::vector<const ActionInterface*> licensed_interfaces() const {
    std::set<std::string> used;
    for (const auto& c : model_.controllers)
      for (const auto& e : c.contract.emissions)
        if (e.kind == EmissionKind::Invoke) used.insert(e.interface.name);
    std::vector<const ActionInterface*> out;
    for (const auto& i : model_.taxonomy.interfaces)
      if (used.count(i.name)) out.push_back(&i);
    return out;
  }

  std::set<std::string> pulled_contexts() const {
    std::set<std::string> out;
    for (const auto& c : model_.contexts)
      for (const auto& r : c.contract.requirements)
        if (r.target.kind == ElementKind::Context) out.insert(r.target.name);
    return out;
  }

  std::string runtime() const {
    std::vector<std::string> locals;
    for (const auto& f : set_.files)
      if (f.path != "generated/Types.hpp") locals.push_back(f.path.substr(std::string("generated/").size()));
    std::sort(locals.begin(), locals.end());

    std::ostringstream out;
    out << open_unit({"cstddef", "deque", "functional", "memory", "optional", "stdexcept",
                      "string", "type_traits", "utility"},
                     locals);

    const auto interfaces = licensed_interfaces();
    const auto sources = all_sources(model_);
    const auto pulled = pulled_contexts();

    struct Dependency {
      std::string cls;
      std::string name;
    };
    std::vector<Dependency> deps;
    for (const auto& c : model_.contexts) deps.push_back({ident(c.name), decapitalize(c.name)});
    for (const auto& c : model_.controllers) deps.push_back({ident(c.name), decapitalize(c.name)});
    for (const auto* i : interfaces) deps.push_back({ident(i->name), decapitalize(i->name)});
    for (const Source* s : sources) deps.push_back({source_class(*s), decapitalize(source_class(*s))});

    out << "/// Connects the implementations and dispatches publications.\n///\n"
        << "/// Reactions run to completion: callbacks run one at a time, and a\n"
        << "/// stimulus is processed until no activation is pending before the next\n"
        << "/// one starts. Invocation capabilities may be used at most once each, in\n"
        << "/// declaration order, and only while their callback runs.\n"
        << "class Runtime {\npublic:\n";

    if (deps.empty()) {
      out << "  Runtime() = default;\n";
    } else {
      out << "  " << (deps.size() == 1 ? "explicit " : "") << "Runtime(";
      for (std::size_t i = 0; i < deps.size(); ++i)
        out << (i ? ",\n          " : "") << deps[i].cls << "& " << ident(deps[i].name);
      out << ")\n      : ";
      for (std::size_t i = 0; i < deps.size(); ++i)
        out << (i ? ",\n        " : "") << member(deps[i].name) << "(" << ident(deps[i].name) << ")";
      out << " {\n";
      for (const Source* s : sources) {
        const std::string q = qualified_name(*s);
        out << "    " << member(decapitalize(source_class(*s))) << ".sink_ = [this](" << cpp_type(s->type)
            << " value) {\n      stimulate([this, value] { " << publisher_fn(q) << "(value); });\n    };\n";
      }
      out << "  }\n";
    }
    out << "\n  Runtime(const Runtime&) = delete;\n  Runtime& operator=(const Runtime&) = delete;\n";
    if (!sources.empty()) {
      out << "\n  ~Runtime() {\n";
      for (const Source* s : sources)
        out << "    " << member(decapitalize(source_class(*s))) << ".sink_ = nullptr;\n";
      out << "  }\n";
    }

    out << "\nprivate:\n"
        << "  struct Activation {\n    bool open = true;\n    std::size_t next = 0;\n  };\n\n"
        << "  struct CloseOnExit {\n    std::shared_ptr<Activation> activation;\n"
        << "    ~CloseOnExit() { activation->open = false; }\n  };\n\n"
        << "  template <typename... Args>\n"
        << "  static std::function<void(Args...)> licensed(std::shared_ptr<Activation> activation,\n"
        << "                                               std::size_t index, const char* what,\n"
        << "                                               std::type_identity_t<std::function<void(Args...)>> call) {\n"
        << "    return [activation, index, what, call = std::move(call)](Args... args) {\n"
        << "      if (!activation->open)\n"
        << "        throw std::logic_error(std::string(what) + \" used after its callback returned\");\n"
        << "      if (index < activation->next)\n"
        << "        throw std::logic_error(std::string(what) + \" invoked twice or out of order\");\n"
        << "      activation->next = index + 1;\n"
        << "      call(std::move(args)...);\n"
        << "    };\n  }\n\n"
        << "  void stimulate(std::function<void()> stimulus) {\n"
        << "    stimuli_.push_back(std::move(stimulus));\n"
        << "    if (reacting_) return;\n"
        << "    reacting_ = true;\n"
        << "    try {\n"
        << "      while (!stimuli_.empty()) {\n"
        << "        auto next = std::move(stimuli_.front());\n"
        << "        stimuli_.pop_front();\n"
        << "        next();\n"
        << "        while (!pending_.empty()) {\n"
        << "          auto activation = std::move(pending_.front());\n"
        << "          pending_.pop_front();\n"
        << "          activation();\n"
        << "        }\n"
        << "      }\n"
        << "    } catch (...) {\n"
        << "      stimuli_.clear();\n      pending_.clear();\n      reacting_ = false;\n      throw;\n"
        << "    }\n"
        << "    reacting_ = false;\n  }\n";

    // One publish function per publisher: queue the activation of every
    // consumer callback, in declaration order.
    auto publish_fn = [&](const std::string& name, const DataType& type, bool cache) {
      out << "\n  void " << publisher_fn(name) << "(" << cpp_type(type) << " value) {\n";
      if (cache) out << "    " << last_member(name) << " = value;\n";
      const auto consumers = consumers_of(name);
      if (consumers.empty()) out << "    static_cast<void>(value);\n";
      for (const auto& c : consumers)
        out << "    pending_.push_back([this, value] { " << dispatcher(c.op, *c.callback)
            << "(value); });\n";
      out << "  }\n";
    };
    for (const Source* s : sources) publish_fn(qualified_name(*s), s->type, false);
    for (const auto& c : model_.contexts) publish_fn(c.name, c.outputType, pulled.count(c.name) > 0);

    for (const auto& op : descriptor_.operators) {
      for (const auto& cb : op.callbacks) {
        out << "\n  void " << dispatcher(op.name, cb) << "(" << cpp_type(cb.activation.type)
            << " value) {\n";
        const std::string self = member(decapitalize(op.name));
        std::vector<std::string> args{"value"};
        for (const auto& p : cb.pulls) {
          std::string reader = p.targetKind == ElementKind::Context
                                   ? "[this] { return " + last_member(p.target) + "; }"
                                   : "[this] { return " + member(decapitalize(source_class(p.target))) +
                                         ".read(); }";
          args.push_back(ident(op.name) + "::" + pull_class(p) + "(" + reader + ")");
        }
        if (!cb.invokes.empty()) {
          out << "    auto activation = std::make_shared<Activation>();\n"
              << "    CloseOnExit closer{activation};\n";
          for (std::size_t i = 0; i < cb.invokes.size(); ++i) {
            const auto& inv = cb.invokes[i];
            std::string types = param_list(inv.params, false);
            std::string lambda = "[this](" + param_list(inv.params, true) + ") { " +
                                 member(decapitalize(inv.interface)) + "." + ident(inv.method) + "(" +
                                 arg_list(inv.params) + "); }";
            args.push_back(ident(op.name) + "::" + invoke_class(inv) + "(licensed<" + types +
                           ">(activation, " + std::to_string(i) + ", \"" + op.name + "." + inv.name +
                           "\", " + lambda + "))");
          }
        }
        std::string call = self + "." + ident(cb.name) + "(";
        for (std::size_t i = 0; i < args.size(); ++i) call += (i ? ",\n        " : "") + args[i];
        call += ")";
        switch (cb.returnKind) {
          case ReturnKind::Value:
            out << "    " << publisher_fn(op.name) << "(" << call << ");\n";
            break;
          case ReturnKind::OptionalValue:
            out << "    auto result = " << call << ";\n"
                << "    if (result) " << publisher_fn(op.name) << "(*result);\n";
            break;
          case ReturnKind::Nothing:
            out << "    " << call << ";\n";
            break;
        }
        out << "  }\n";
      }
    }

    out << '\n';
    for (const auto& d : deps) out << "  " << d.cls << "& " << member(d.name) << ";\n";
    for (const auto& c : model_.contexts)
      if (pulled.count(c.name))
        out << "  std::optional<" << cpp_type(c.outputType) << "> " << last_member(c.name) << ";\n";
    out << "  std::deque<std::function<void()>> stimuli_;\n"
        << "  std::deque<std::function<void()>> pending_;\n"
        << "  bool reacting_ = false;\n};\n";
    return out.str() + close_unit();
  }

  static std::string last_member(const std::string& context) { return "last" + capitalize(context) + "_"; }

  const ArchitectureModel& model_;
  std::string ns_;
  FrameworkDescriptor descriptor_;
  bool types_unit_;
  std::map<std::string, const OperatorEntry*> operators_;
  SkeletonSet set_;
};

constexpr std::string_view kMarker = "// Generated by sccadl";

}  // namespace

SkeletonSet render_skeletons(const ArchitectureModel& model, const GenerateOptions& options) {
  return Renderer(model, options).run();
}

GenerateResult generate_skeletons(const ArchitectureModel& model,
                                  const std::filesystem::path& outDir,
                                  const GenerateOptions& options) {
  namespace fs = std::filesystem;
  GenerateResult result;
  SkeletonSet set = render_skeletons(model, options);
  result.diagnostics = std::move(set.diagnostics);
  if (!result.ok()) return result;
  if (options.writeDescriptor) set.files.push_back({"generated/descriptor.json", emit_descriptor(model)});

  auto io_error = [&](const std::string& what, const fs::path& path, const std::error_code& ec) {
    result.diagnostics.push_back(make_diagnostic(
        Code::IoError, what + " '" + path.string() + "': " + ec.message(), SourceSpan{path.string()}));
  };

  const fs::path dir = outDir / "generated";
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    io_error("cannot create directory", dir, ec ? ec : std::make_error_code(std::errc::not_a_directory));
    return result;
  }

  // Remove files from an earlier generation that are no longer produced.
  std::set<std::string> keep;
  for (const auto& f : set.files) keep.insert(fs::path(f.path).filename().string());
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file() || keep.count(entry.path().filename().string())) continue;
    std::ifstream in(entry.path());
    std::string head(kMarker.size(), '\0');
    in.read(head.data(), static_cast<std::streamsize>(head.size()));
    const bool ours = head == kMarker || entry.path().filename() == "descriptor.json";
    in.close();
    if (ours) fs::remove(entry.path(), ec);
  }

  for (const auto& f : set.files) {
    const fs::path path = outDir / f.path;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << f.contents;
    out.close();
    if (!out) {
      io_error("cannot write", path, std::make_error_code(std::errc::io_error));
      return result;
    }
    result.files.push_back(f.path);
  }
  return result;
}

}  // namespace sccadl
