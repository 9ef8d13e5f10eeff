#include "sccadl/wellformedness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "sccadl/framework.hpp"

namespace sccadl {

void CheckReport::append(const CheckReport& other) {
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
}

namespace {

void add(CheckReport& report, Code code, std::string message, const SourceSpan& span) {
  report.diagnostics.push_back(make_diagnostic(code, std::move(message), span));
}

bool publishes(ElementKind kind) {
  return kind == ElementKind::Source || kind == ElementKind::Context;
}

std::string describe(const ElementRef& ref) {
  return std::string(to_string(ref.kind)) + " '" + ref.name + "'";
}

void check_invoke_targets(CheckReport& report, const InteractionContract& contract) {
  for (const auto& e : contract.emissions) {
    if (e.kind == EmissionKind::Invoke && e.interface.kind != ElementKind::ActionInterface)
      add(report, Code::LayerViolation,
          "'do ... on " + e.interface.name + "' must name an action interface, not a " +
              std::string(to_string(e.interface.kind)),
          e.interface.at.span);
  }
}

}  // namespace

CheckReport check_layering(const ArchitectureModel& model) {
  CheckReport report;

  for (const auto& device : model.taxonomy.devices)
    for (const auto& p : device.provides)
      if (p.kind != ElementKind::ActionInterface)
        add(report, Code::LayerViolation,
            "device class '" + device.name + "' can only provide action interfaces, not " +
                describe(p),
            p.at.span);

  // Sources carry no contract, so "a source consuming something" cannot be
  // written down; the remaining rules concern operators.
  for (const auto& c : model.contexts) {
    for (const auto& d : c.contract.activation.disjuncts)
      if (!publishes(d.kind))
        add(report, Code::LayerViolation,
            "context '" + c.name + "' cannot be activated by " + describe(d) +
                "; only sources and contexts publish",
            d.at.span);
    for (const auto& r : c.contract.requirements)
      if (!publishes(r.target.kind))
        add(report, Code::LayerViolation,
            "context '" + c.name + "' can only pull sources and contexts, not " + describe(r.target),
            r.target.at.span);
    for (const auto& e : c.contract.emissions)
      if (e.kind == EmissionKind::Invoke)
        add(report, Code::LayerViolation,
            "context '" + c.name + "' cannot invoke actions; only controllers do", e.at.span);
  }

  for (const auto& c : model.controllers) {
    for (const auto& d : c.contract.activation.disjuncts)
      if (d.kind != ElementKind::Context)
        add(report, Code::LayerViolation,
            "controller '" + c.name + "' must be activated by contexts, not by " + describe(d),
            d.at.span);
    for (const auto& r : c.contract.requirements)
      add(report, Code::ControllerRequirement,
          "controller '" + c.name + "' cannot pull '" + r.target.name +
              "'; controllers have no data requirements",
          r.target.at.span);
    for (const auto& e : c.contract.emissions)
      if (e.kind == EmissionKind::PublishAlways || e.kind == EmissionKind::PublishMaybe)
        add(report, Code::LayerViolation, "controller '" + c.name + "' cannot publish", e.at.span);
    check_invoke_targets(report, c.contract);
  }
  return report;
}

CheckReport check_contracts(const ArchitectureModel& model) {
  CheckReport report;

  auto common = [&](const std::string& owner, const InteractionContract& contract,
                    const SourceSpan& at) {
    if (contract.activation.disjuncts.empty())
      add(report, Code::InvalidContract, "'" + owner + "' has no activation condition", at);
    for (const auto& r : contract.requirements)
      if (r.target.name == owner)
        add(report, Code::InvalidContract, "'" + owner + "' cannot require its own publication",
            r.target.at.span);
  };

  for (const auto& c : model.contexts) {
    common(c.name, c.contract, c.at.span);
    std::vector<const Emission*> publishes;
    for (const auto& e : c.contract.emissions)
      if (e.kind == EmissionKind::PublishAlways || e.kind == EmissionKind::PublishMaybe)
        publishes.push_back(&e);
    if (publishes.empty())
      add(report, Code::InvalidContract,
          "context '" + c.name + "' never publishes; add 'always publish' or 'maybe publish'",
          c.at.span);
    for (std::size_t i = 1; i < publishes.size(); ++i)
      add(report, Code::InvalidContract, "context '" + c.name + "' has more than one publish clause",
          publishes[i]->at.span);
  }

  for (const auto& c : model.controllers) {
    common(c.name, c.contract, c.at.span);
    std::vector<const Emission*> invokes;
    for (const auto& e : c.contract.emissions)
      if (e.kind == EmissionKind::Invoke) invokes.push_back(&e);
    if (invokes.empty())
      add(report, Code::InvalidContract, "controller '" + c.name + "' licenses no action",
          c.at.span);
    for (std::size_t i = 1; i < invokes.size(); ++i)
      add(report, Code::InvalidContract,
          "controller '" + c.name + "' may only command one action interface; '" +
              invokes[i]->interface.name + "' is a second one",
          invokes[i]->interface.at.span);
  }
  return report;
}

CheckReport check_types(const ArchitectureModel& model, const FrameworkDescriptor* previous) {
  CheckReport report;

  auto requirements = [&](const InteractionContract& contract) {
    for (const auto& r : contract.requirements)
      if (r.declaredType && r.valueType && *r.declaredType != *r.valueType)
        add(report, Code::TypeMismatch,
            "'" + r.target.name + "' is used as " + to_string(*r.declaredType) +
                " but publishes " + to_string(*r.valueType),
            r.target.at.span);
  };

  auto activation = [&](const std::string& owner, const InteractionContract& contract) {
    std::optional<DataType> first;
    std::string first_name;
    for (const auto& d : contract.activation.disjuncts) {
      auto type = published_type(model, d);
      if (!type) continue;
      if (!first) {
        first = type;
        first_name = d.name;
      } else if (*type != *first) {
        add(report, Code::HeterogeneousActivation,
            "'" + owner + "' is activated by '" + first_name + "' (" + to_string(*first) +
                ") and '" + d.name + "' (" + to_string(*type) + "); disjuncts must share a type",
            d.at.span);
      }
    }
  };

  for (const auto& c : model.contexts) {
    requirements(c.contract);
    activation(c.name, c.contract);
  }
  for (const auto& c : model.controllers) {
    requirements(c.contract);
    activation(c.name, c.contract);
  }

  if (previous) {
    for (auto& d : signature_drift(*previous, build_descriptor(model)))
      report.diagnostics.push_back(std::move(d));
  }
  return report;
}

CheckReport check_push_acyclicity(const ArchitectureModel& model) {
  CheckReport report;
  const std::size_t n = model.contexts.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(model.contexts[i].name, i);

  // successors[p] = contexts activated by publications of context p
  std::vector<std::vector<std::size_t>> successors(n);
  for (std::size_t consumer = 0; consumer < n; ++consumer)
    for (const auto& d : model.contexts[consumer].contract.activation.disjuncts)
      if (d.kind == ElementKind::Context)
        if (auto it = index.find(d.name); it != index.end()) successors[it->second].push_back(consumer);

  // Tarjan's algorithm, iterative.
  std::vector<int> order(n, -1), low(n, 0), component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int counter = 0;
  int components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> work{{root, 0}};
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!work.empty()) {
      auto& [v, edge] = work.back();
      if (edge < successors[v].size()) {
        const std::size_t w = successors[v][edge++];
        if (order[w] < 0) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          work.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      const std::size_t done = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
      if (low[done] == order[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }

  std::vector<std::vector<std::size_t>> members(components);
  for (std::size_t v = 0; v < n; ++v) members[component[v]].push_back(v);
  std::vector<std::size_t> cyclic;
  for (auto& m : members) {
    const bool self_loop =
        m.size() == 1 && std::find(successors[m[0]].begin(), successors[m[0]].end(), m[0]) !=
                             successors[m[0]].end();
    if (m.size() > 1 || self_loop) cyclic.push_back(m.front());
  }
  std::sort(cyclic.begin(), cyclic.end());

  for (std::size_t start : cyclic) {
    // Shortest cycle through `start` inside its component.
    std::vector<std::optional<std::size_t>> parent(n);
    std::deque<std::size_t> queue{start};
    std::optional<std::size_t> closing;
    std::vector<bool> seen(n, false);
    seen[start] = true;
    while (!queue.empty() && !closing) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : successors[v]) {
        if (component[w] != component[start]) continue;
        if (w == start) {
          closing = v;
          break;
        }
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::size_t> path;
    for (std::optional<std::size_t> v = closing; v; v = parent[*v]) {
      path.push_back(*v);
      if (*v == start) break;
    }
    std::reverse(path.begin(), path.end());
    std::string cycle = "[";
    for (std::size_t v : path) cycle += model.contexts[v].name + ", ";
    cycle += model.contexts[start].name + "]";
    add(report, Code::CycleDetected, "push cycle " + cycle, model.contexts[start].at.span);
  }
  return report;
}

CheckReport check_all(const ArchitectureModel& model) {
  CheckReport report = check_layering(model);
  report.append(check_contracts(model));
  report.append(check_types(model));
  report.append(check_push_acyclicity(model));
  sort_diagnostics(report.diagnostics);
  return report;
}

}  // namespace sccadl
