#include "sccadl/dataflow.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace sccadl {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Source:
      return "source";
    case NodeKind::Context:
      return "context";
    case NodeKind::Controller:
      return "controller";
    case NodeKind::ActionMethod:
      return "action";
  }
  return "?";
}

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Push:
      return "push";
    case EdgeKind::Pull:
      return "pull";
    case EdgeKind::Invoke:
      return "invoke";
  }
  return "?";
}

InteractionGraph::InteractionGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), out_(nodes_.size()), in_(nodes_.size()) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_[edges_[i].from].push_back(i);
    in_[edges_[i].to].push_back(i);
  }
}

std::optional<std::size_t> InteractionGraph::find(std::string_view name) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name,
                             [](const GraphNode& n, std::string_view key) { return n.name < key; });
  if (it == nodes_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

InteractionGraph build_graph(const ArchitectureModel& model) {
  std::vector<GraphNode> nodes;
  for (const Source* s : all_sources(model)) nodes.push_back({qualified_name(*s), NodeKind::Source, s->at.span});
  for (const auto& c : model.contexts) nodes.push_back({c.name, NodeKind::Context, c.at.span});
  for (const auto& c : model.controllers) nodes.push_back({c.name, NodeKind::Controller, c.at.span});
  std::set<std::string> methods;
  for (const auto& c : model.controllers)
    for (const auto& e : c.contract.emissions)
      if (e.kind == EmissionKind::Invoke)
        for (const auto& m : e.methods) {
          const std::string name = e.interface.name + "." + m.name;
          if (!methods.insert(name).second) continue;
          SourceSpan span = m.at.span;
          if (const ActionInterface* iface = find_interface(model, e.interface.name))
            if (const ActionMethod* method = find_method(*iface, m.name)) span = method->at.span;
          nodes.push_back({name, NodeKind::ActionMethod, span});
        }
  std::sort(nodes.begin(), nodes.end(),
            [](const GraphNode& a, const GraphNode& b) { return a.name < b.name; });

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].name, i);

  auto guaranteed_producer = [&](const ElementRef& ref) {
    if (ref.kind == ElementKind::Source) return true;
    const ContextOperator* c = find_context(model, ref.name);
    const Emission* e = c ? publish_emission(c->contract) : nullptr;
    return e && e->kind == EmissionKind::PublishAlways;
  };

  std::vector<GraphEdge> edges;
  auto contract_edges = [&](const std::string& owner, const InteractionContract& contract) {
    const std::size_t self = index.at(owner);
    for (const auto& d : contract.activation.disjuncts)
      if (auto it = index.find(d.name); it != index.end())
        edges.push_back({EdgeKind::Push, it->second, self, guaranteed_producer(d)});
    for (const auto& r : contract.requirements)
      if (auto it = index.find(r.target.name); it != index.end())
        edges.push_back({EdgeKind::Pull, self, it->second, false});
    for (const auto& e : contract.emissions)
      if (e.kind == EmissionKind::Invoke)
        for (const auto& m : e.methods)
          edges.push_back({EdgeKind::Invoke, self, index.at(e.interface.name + "." + m.name), false});
  };
  for (const auto& c : model.contexts) contract_edges(c.name, c.contract);
  for (const auto& c : model.controllers) contract_edges(c.name, c.contract);
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.from, a.to, a.kind) < std::tie(b.from, b.to, b.kind);
  });
  return InteractionGraph(std::move(nodes), std::move(edges));
}

namespace {

[[noreturn]] void unknown(std::string message) {
  throw DiagnosticError(make_diagnostic(Code::UnknownReference, std::move(message)));
}

std::size_t source_node(const InteractionGraph& graph, std::string_view name) {
  if (auto i = graph.find(name)) {
    if (graph.node(*i).kind != NodeKind::Source)
      unknown("'" + std::string(name) + "' is a " + std::string(to_string(graph.node(*i).kind)) +
              ", not a source");
    return *i;
  }
  std::optional<std::size_t> match;
  for (std::size_t i = 0; i < graph.nodes().size(); ++i) {
    const GraphNode& n = graph.node(i);
    if (n.kind != NodeKind::Source) continue;
    if (n.name.substr(n.name.find('.') + 1) != name) continue;
    if (match) unknown("source name '" + std::string(name) + "' is ambiguous; qualify it as Device.source");
    match = i;
  }
  if (!match) unknown("unknown source '" + std::string(name) + "'");
  return *match;
}

template <typename Follow>
ElementSet closure(const InteractionGraph& graph, std::size_t start, bool forward, Follow follow) {
  std::vector<bool> seen(graph.nodes().size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : forward ? graph.outgoing(v) : graph.incoming(v)) {
      const GraphEdge& edge = graph.edges()[e];
      if (!follow(edge)) continue;
      const std::size_t w = forward ? edge.to : edge.from;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  ElementSet out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] && i != start) out.insert(graph.node(i).name);
  return out;
}

}  // namespace

ElementSet may_impact(const InteractionGraph& graph, std::string_view source) {
  return closure(graph, source_node(graph, source), true,
                 [](const GraphEdge& e) { return e.kind != EdgeKind::Pull; });
}

ElementSet must_impact(const InteractionGraph& graph, std::string_view source) {
  return closure(graph, source_node(graph, source), true,
                 [](const GraphEdge& e) { return e.kind == EdgeKind::Push && e.guaranteed; });
}

ElementSet activators_of(const InteractionGraph& graph, std::string_view element) {
  auto i = graph.find(element);
  if (!i) unknown("unknown element '" + std::string(element) + "'");
  return closure(graph, *i, false, [](const GraphEdge& e) { return e.kind != EdgeKind::Pull; });
}

DeadElements dead_elements(const InteractionGraph& graph) {
  const std::size_t n = graph.nodes().size();
  std::vector<bool> live(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i)
    if (graph.node(i).kind == NodeKind::Source) {
      live[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : graph.outgoing(v)) {
      const GraphEdge& edge = graph.edges()[e];
      if (edge.kind == EdgeKind::Pull || live[edge.to]) continue;
      live[edge.to] = true;
      stack.push_back(edge.to);
    }
  }

  DeadElements out;
  for (std::size_t i = 0; i < n; ++i) {
    const GraphNode& node = graph.node(i);
    if (node.kind == NodeKind::Source) {
      const bool consumed = std::any_of(graph.outgoing(i).begin(), graph.outgoing(i).end(),
                                        [&](std::size_t e) { return graph.edges()[e].kind == EdgeKind::Push; });
      const bool read = std::any_of(graph.incoming(i).begin(), graph.incoming(i).end(),
                                    [&](std::size_t e) { return graph.edges()[e].kind == EdgeKind::Pull; });
      if (!consumed && !read) {
        out.elements.insert(node.name);
        out.warnings.push_back(make_diagnostic(
            Code::UnusedSource, "source '" + node.name + "' activates no operator and is never pulled",
            node.span));
      }
    } else if (!live[i]) {
      out.elements.insert(node.name);
      out.warnings.push_back(make_diagnostic(
          Code::UnreachableElement,
          std::string(to_string(node.kind)) + " '" + node.name + "' can never be activated by a source",
          node.span));
    }
  }
  sort_diagnostics(out.warnings);
  return out;
}

std::string to_dot(const InteractionGraph& graph) {
  std::ostringstream out;
  out << "digraph architecture {\n  rankdir=BT;\n";
  for (const auto& n : graph.nodes()) {
    out << "  \"" << n.name << "\" [";
    switch (n.kind) {
      case NodeKind::Source:
        out << "shape=ellipse";
        break;
      case NodeKind::Context:
        out << "shape=box";
        break;
      case NodeKind::Controller:
        out << "shape=box, style=rounded";
        break;
      case NodeKind::ActionMethod:
        out << "shape=hexagon";
        break;
    }
    out << "];\n";
  }
  for (const auto& e : graph.edges()) {
    out << "  \"" << graph.node(e.from).name << "\" -> \"" << graph.node(e.to).name << "\" [style=";
    switch (e.kind) {
      case EdgeKind::Push:
        out << (e.guaranteed ? "solid" : "dashed");
        break;
      case EdgeKind::Pull:
        out << "dotted";
        break;
      case EdgeKind::Invoke:
        out << "bold";
        break;
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sccadl
