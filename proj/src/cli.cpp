#include "sccadl/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "sccadl/dataflow.hpp"
#include "sccadl/framework.hpp"
#include "sccadl/frontend.hpp"
#include "sccadl/report.hpp"
#include "sccadl/verifier.hpp"

namespace sccadl {

namespace {

namespace fs = std::filesystem;

std::string join(const ElementSet& set) {
  std::string s;
  for (const auto& e : set) s += (s.empty() ? "" : ", ") + e;
  return s;
}

class Session {
public:
  Session(std::ostream& out, std::ostream& err, bool json) : out_(out), err_(err), json_(json) {}

  Report report;

  void diagnose(const Diagnostic& d) {
    err_ << format(d) << "\n";
    report.diagnostics.push_back(d);
  }

  void diagnose(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds) diagnose(d);
  }

  /// Compiles `file`; false when it has errors.
  bool compile(const std::string& file, ArchitectureModel& model) {
    Compilation c = compile_file(file);
    diagnose(c.diagnostics);
    model = std::move(c.model);
    return c.ok();
  }

  int finish(const std::string& text, int code) {
    if (json_)
      out_ << report_json(report);
    else
      out_ << text;
    return code;
  }

  int finish(int code) { return finish({}, code); }

private:
  std::ostream& out_;
  std::ostream& err_;
  bool json_;
};

int check_command(Session& s, const std::string& file) {
  ArchitectureModel model;
  return s.finish(s.compile(file, model) ? kExitOk : kExitFailure);
}

struct AnalyzeArgs {
  std::string file;
  std::string impact;
  std::string activators;
  bool dead = false;
};

int analyze_command(Session& s, const AnalyzeArgs& a) {
  ArchitectureModel model;
  if (!s.compile(a.file, model)) return s.finish(kExitFailure);
  const InteractionGraph graph = build_graph(model);
  const bool everything = a.impact.empty() && a.activators.empty() && !a.dead;
  std::string text;
  try {
    std::vector<std::string> sources;
    if (!a.impact.empty()) sources.push_back(a.impact);
    if (everything)
      for (const auto& n : graph.nodes())
        if (n.kind == NodeKind::Source) sources.push_back(n.name);
    for (const auto& src : sources) {
      ImpactResult r{may_impact(graph, src), must_impact(graph, src)};
      text += "may " + src + ": " + join(r.may) + "\n";
      text += "must " + src + ": " + join(r.must) + "\n";
      s.report.impact[src] = std::move(r);
    }
    if (!a.activators.empty()) {
      ElementSet set = activators_of(graph, a.activators);
      text += "activators " + a.activators + ": " + join(set) + "\n";
      s.report.activators[a.activators] = std::move(set);
    }
  } catch (const DiagnosticError& e) {
    s.diagnose(e.diagnostic());
    return s.finish(kExitFailure);
  }
  if (a.dead || everything) {
    DeadElements dead = dead_elements(graph);
    s.diagnose(dead.warnings);
    text += "dead: " + join(dead.elements) + "\n";
    s.report.dead = std::move(dead.elements);
  }
  return s.finish(text, kExitOk);
}

// --format json is the same as --json: the graph is the whole report.
int graph_command(Session& s, const std::string& file) {
  ArchitectureModel model;
  if (!s.compile(file, model)) return s.finish(kExitFailure);
  InteractionGraph graph = build_graph(model);
  std::string text = to_dot(graph);
  s.report.graph = std::move(graph);
  return s.finish(text, kExitOk);
}

struct GenerateArgs {
  std::string file;
  std::string out;
  std::string ns;
  bool descriptor = false;
};

int generate_command(Session& s, const GenerateArgs& a) {
  ArchitectureModel model;
  if (!s.compile(a.file, model)) return s.finish(kExitFailure);

  const fs::path previous = fs::path(a.out) / "generated" / "descriptor.json";
  std::error_code ec;
  if (fs::exists(previous, ec)) {
    try {
      s.diagnose(signature_drift(parse_descriptor(read_file(previous)), build_descriptor(model)));
    } catch (const DiagnosticError& e) {
      s.diagnose(e.diagnostic());
      return s.finish(kExitFailure);
    }
  }

  GenerateOptions options;
  options.cppNamespace = a.ns.empty() ? namespace_for(fs::path(a.file).stem().string()) : a.ns;
  options.writeDescriptor = a.descriptor;
  GenerateResult result = generate_skeletons(model, a.out, options);
  s.diagnose(result.diagnostics);
  std::string text;
  for (const auto& f : result.files) text += (fs::path(a.out) / f).generic_string() + "\n";
  s.report.files = result.files;
  return s.finish(text, result.ok() ? kExitOk : kExitFailure);
}

struct VerifyArgs {
  std::string file;
  std::string invariants;
  std::string promela;
  std::size_t stateLimit = kDefaultStateLimit;
};

int verify_command(Session& s, const VerifyArgs& a) {
  ArchitectureModel model;
  if (!s.compile(a.file, model)) return s.finish(kExitFailure);

  std::string text;
  try {
    text = read_file(a.invariants);
  } catch (const DiagnosticError& e) {
    s.diagnose(e.diagnostic());
    return s.finish(kExitFailure);
  }
  InvariantParseResult parsed = parse_invariants(text, model, a.invariants);
  s.diagnose(parsed.diagnostics);
  if (!parsed.ok()) return s.finish(kExitFailure);

  if (!a.promela.empty()) {
    std::ofstream file(a.promela, std::ios::binary);
    file << emit_promela(model, parsed.invariants);
    file.close();
    if (!file) {
      s.diagnose(make_diagnostic(Code::IoError, "cannot write '" + a.promela + "'"));
      return s.finish(kExitFailure);
    }
  }

  try {
    s.report.verdicts = check(build_ts(model), parsed.invariants, {a.stateLimit});
  } catch (const DiagnosticError& e) {
    s.diagnose(e.diagnostic());
    return s.finish(e.diagnostic().code == Code::StateLimitExceeded ? kExitLimit : kExitFailure);
  }
  const bool violated = std::any_of(s.report.verdicts.begin(), s.report.verdicts.end(),
                                    [](const Verdict& v) { return v.kind == VerdictKind::Violated; });
  s.report.failed = violated;
  return s.finish(format_verdicts(s.report.verdicts), violated ? kExitFailure : kExitOk);
}

std::optional<std::size_t> state_limit_from_env() {
  const char* value = std::getenv("SCCADL_STATE_LIMIT");
  if (!value) return kDefaultStateLimit;
  try {
    std::size_t used = 0;
    const unsigned long long n = std::stoull(value, &used);
    if (used != std::string_view(value).size() || n < 1) return std::nullopt;
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compiler and verifier for Sense/Compute/Control architecture descriptions", "sccadl"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print a JSON report on standard output");

  std::string checkFile;
  auto* check = app.add_subcommand("check", "Parse, resolve and check an architecture");
  check->add_option("file", checkFile, "Architecture file")->required();

  AnalyzeArgs analyze;
  auto* analyzeCmd = app.add_subcommand("analyze", "Dataflow queries over the interaction graph");
  analyzeCmd->add_option("file", analyze.file, "Architecture file")->required();
  auto* impact = analyzeCmd->add_option("--impact", analyze.impact, "Elements a source may and must activate");
  auto* activators = analyzeCmd->add_option("--activators", analyze.activators, "Elements that can activate EL");
  auto* dead = analyzeCmd->add_flag("--dead", analyze.dead, "Unreachable elements and unused sources");
  impact->excludes(activators)->excludes(dead);
  activators->excludes(dead);

  std::string graphFile;
  std::string graphFormat = "dot";
  auto* graph = app.add_subcommand("graph", "Print the interaction graph");
  graph->add_option("file", graphFile, "Architecture file")->required();
  graph->add_option("--format", graphFormat, "Output format")->check(CLI::IsMember({"dot", "json"}));

  GenerateArgs generate;
  auto* generateCmd = app.add_subcommand("generate", "Generate C++ framework skeletons");
  generateCmd->add_option("file", generate.file, "Architecture file")->required();
  generateCmd->add_option("--out", generate.out, "Output directory")->required();
  generateCmd->add_flag("--descriptor", generate.descriptor, "Also write generated/descriptor.json");
  generateCmd->add_option("--namespace", generate.ns, "C++ namespace (default: derived from the file name)");

  VerifyArgs verify;
  auto* verifyCmd = app.add_subcommand("verify", "Model-check interaction invariants");
  verifyCmd->add_option("file", verify.file, "Architecture file")->required();
  verifyCmd->add_option("--invariants", verify.invariants, "Invariant file")->required();
  verifyCmd->add_option("--emit-promela", verify.promela, "Also write a Promela model to this path");
  auto* limit = verifyCmd->add_option("--state-limit", verify.stateLimit, "Maximum states per invariant")
                    ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    const auto parsed = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }

  if (verifyCmd->parsed() && limit->count() == 0) {
    const auto env = state_limit_from_env();
    if (!env) {
      err << "error: SCCADL_STATE_LIMIT must be a positive integer\n";
      return kExitUsage;
    }
    verify.stateLimit = *env;
  }

  Session session(out, err, json || (graph->parsed() && graphFormat == "json"));
  if (check->parsed()) return check_command(session, checkFile);
  if (analyzeCmd->parsed()) return analyze_command(session, analyze);
  if (graph->parsed()) return graph_command(session, graphFile);
  if (generateCmd->parsed()) return generate_command(session, generate);
  return verify_command(session, verify);
}

}  // namespace sccadl
