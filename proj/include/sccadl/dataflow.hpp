#pragma once

// Design-time dataflow facts derived from interaction contracts.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sccadl/diagnostic.hpp"
#include "sccadl/model.hpp"

namespace sccadl {

enum class NodeKind { Source, Context, Controller, ActionMethod };
enum class EdgeKind { Push, Pull, Invoke };

std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeKind kind);

struct GraphNode {
  std::string name;  // Device.source, operator name, or Interface.method
  NodeKind kind = NodeKind::Source;
  SourceSpan span;
};

struct GraphEdge {
  EdgeKind kind = EdgeKind::Push;
  std::size_t from = 0;
  std::size_t to = 0;
  /// Push edges only: the producer always publishes when activated (every
  /// source event is guaranteed). Pull and Invoke edges leave it false.
  bool guaranteed = false;

  bool operator==(const GraphEdge&) const = default;
};

/// Nodes are sorted by name; edges by (from, to, kind).
class InteractionGraph {
public:
  InteractionGraph() = default;
  InteractionGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges);

  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphNode& node(std::size_t i) const { return nodes_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;

  const std::vector<std::size_t>& outgoing(std::size_t node) const { return out_[node]; }
  const std::vector<std::size_t>& incoming(std::size_t node) const { return in_[node]; }

private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;  // edge indices
  std::vector<std::vector<std::size_t>> in_;
};

/// Nodes: every source, context and controller, plus each action method
/// some controller is licensed to invoke. One Push edge per (publisher,
/// activation disjunct) pair, one Pull edge per data requirement (consumer
/// to target), one Invoke edge per licensed method. Requires a checked model.
InteractionGraph build_graph(const ArchitectureModel& model);

using ElementSet = std::set<std::string>;

/// Elements possibly activated by one publication of `source`: forward
/// closure over Push and Invoke edges, excluding the source. Pulls do not
/// propagate. `source` is "Device.source" or an unambiguous bare source
/// name; anything else throws DiagnosticError (E001).
ElementSet may_impact(const InteractionGraph& graph, std::string_view source);

/// Elements activated under every resolution of maybe-publish: closure over
/// guaranteed Push edges only. Invocations are optional and never included.
ElementSet must_impact(const InteractionGraph& graph, std::string_view source);

/// Backward closure over Push and Invoke edges. Throws E001 for unknown
/// elements.
ElementSet activators_of(const InteractionGraph& graph, std::string_view element);

struct DeadElements {
  ElementSet elements;
  std::vector<Diagnostic> warnings;  // W030 unreachable operator/action, W031 unused source
};

DeadElements dead_elements(const InteractionGraph& graph);

/// Graphviz rendering: Push edges solid (guaranteed) or dashed (possible),
/// Pull edges dotted, Invoke edges bold. Output is deterministic.
std::string to_dot(const InteractionGraph& graph);

}  // namespace sccadl
