#include "sccadl/report.hpp"

#include <json.hpp>

namespace sccadl {

namespace {

using nlohmann::json;

std::string_view severity_name(Severity s) { return s == Severity::Error ? "error" : "warning"; }

json to_json(const Diagnostic& d) {
  json j = {{"code", code_id(d.code)}, {"severity", severity_name(d.severity)}, {"message", d.message}};
  if (d.span.valid())
    j["span"] = {{"file", d.span.file},
                 {"line", d.span.startLine},
                 {"column", d.span.startCol},
                 {"endLine", d.span.endLine},
                 {"endColumn", d.span.endCol}};
  return j;
}

json to_json(const ElementSet& set) {
  json j = json::array();
  for (const auto& e : set) j.push_back(e);
  return j;
}

std::string_view event_name(EventKind k) {
  switch (k) {
    case EventKind::PublishSource:
      return "PublishSource";
    case EventKind::Activate:
      return "Activate";
    case EventKind::PullFrom:
      return "PullFrom";
    case EventKind::Publish:
      return "Publish";
    case EventKind::SkipPublish:
      return "SkipPublish";
    case EventKind::InvokeAction:
      return "InvokeAction";
    case EventKind::Quiesce:
      return "Quiesce";
  }
  return "?";
}

json to_json(const Event& e) {
  json j = {{"kind", event_name(e.kind)}};
  if (!e.subject.empty()) j["subject"] = e.subject;
  if (!e.object.empty()) j["object"] = e.object;
  return j;
}

json to_json(const Verdict& v) {
  json trace = json::array();
  for (const auto& e : v.trace) trace.push_back(to_json(e));
  return {{"invariant", v.invariant.text.empty() ? to_string(v.invariant) : v.invariant.text},
          {"verdict", v.kind == VerdictKind::Holds ? "holds" : "violated"},
          {"states", v.states},
          {"trace", trace}};
}

json to_json(const InteractionGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes()) nodes.push_back({{"name", n.name}, {"kind", to_string(n.kind)}});
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json j = {{"kind", to_string(e.kind)}, {"from", g.node(e.from).name}, {"to", g.node(e.to).name}};
    if (e.kind == EdgeKind::Push) j["guaranteed"] = e.guaranteed;
    edges.push_back(std::move(j));
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace

std::string report_json(const Report& report) {
  json doc = {{"ok", report.ok()}, {"diagnostics", json::array()}};
  for (const auto& d : report.diagnostics) doc["diagnostics"].push_back(to_json(d));
  if (!report.impact.empty()) {
    json impact = json::object();
    for (const auto& [source, r] : report.impact) impact[source] = {{"may", to_json(r.may)}, {"must", to_json(r.must)}};
    doc["impact"] = impact;
  }
  if (!report.activators.empty()) {
    json activators = json::object();
    for (const auto& [element, set] : report.activators) activators[element] = to_json(set);
    doc["activators"] = activators;
  }
  if (report.dead) doc["dead"] = to_json(*report.dead);
  if (report.graph) doc["graph"] = to_json(*report.graph);
  if (!report.verdicts.empty()) {
    json verdicts = json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(to_json(v));
    doc["verdicts"] = verdicts;
  }
  if (!report.files.empty()) doc["files"] = report.files;
  return doc.dump() + "\n";
}

}  // namespace sccadl
