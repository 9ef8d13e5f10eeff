#include <algorithm>
#include <map>

#include "sccadl/verifier.hpp"

namespace sccadl {

std::string to_string(const Event& event) {
  switch (event.kind) {
    case EventKind::PublishSource:
      return "PublishSource(" + event.subject + ")";
    case EventKind::Activate:
      return "Activate(" + event.subject + ")";
    case EventKind::PullFrom:
      return "PullFrom(" + event.subject + ", " + event.object + ")";
    case EventKind::Publish:
      return "Publish(" + event.subject + ")";
    case EventKind::SkipPublish:
      return "SkipPublish(" + event.subject + ")";
    case EventKind::InvokeAction:
      return "InvokeAction(" + event.subject + ", " + event.object + ")";
    case EventKind::Quiesce:
      return "Quiesce";
  }
  return "?";
}

TransitionSystem::TransitionSystem(const ArchitectureModel& model) {
  std::map<std::string, int> index;
  auto add = [&](const std::string& name, bool controller, const InteractionContract& contract) {
    Operator op;
    op.name = name;
    op.controller = controller;
    for (const auto& r : contract.requirements) op.pulls.push_back(r.target.name);
    if (const Emission* e = publish_emission(contract)) op.publish = e->kind;
    for (const auto& e : contract.emissions)
      if (e.kind == EmissionKind::Invoke)
        for (const auto& m : e.methods) op.invokes.push_back(e.interface.name + "." + m.name);
    index.emplace(name, static_cast<int>(operators_.size()));
    operators_.push_back(std::move(op));
  };
  for (const auto& c : model.contexts) add(c.name, false, c.contract);
  for (const auto& c : model.controllers) add(c.name, true, c.contract);

  std::map<std::string, std::vector<int>> consumers;
  auto link = [&](int self, const InteractionContract& contract) {
    for (const auto& d : contract.activation.disjuncts) consumers[d.name].push_back(self);
  };
  for (const auto& c : model.contexts) link(index.at(c.name), c.contract);
  for (const auto& c : model.controllers) link(index.at(c.name), c.contract);

  for (auto& op : operators_)
    if (auto it = consumers.find(op.name); it != consumers.end()) op.consumers = it->second;
  for (const Source* s : all_sources(model)) {
    Stimulus st{qualified_name(*s), {}};
    if (auto it = consumers.find(st.source); it != consumers.end()) st.consumers = it->second;
    sources_.push_back(std::move(st));
  }
}

TransitionSystem build_ts(const ArchitectureModel& model) { return TransitionSystem(model); }

TransitionSystem::State TransitionSystem::initial() const {
  State s;
  s.pending.assign(operators_.size(), 0);
  return s;
}

std::string TransitionSystem::key(const State& state) const {
  std::string k;
  k.reserve(3 + state.pending.size());
  k.push_back(static_cast<char>(state.stimulus + 1));
  k.push_back(static_cast<char>(state.current + 1));
  k.push_back(static_cast<char>(state.pc));
  for (auto p : state.pending) k.push_back(static_cast<char>(p));
  return k;
}

TransitionSystem::State TransitionSystem::normalize(State state) const {
  if (state.current < 0) return state;
  const Operator& op = operators_[state.current];
  const int k = static_cast<int>(op.pulls.size());
  bool done;
  if (op.controller)
    done = state.pc >= k + static_cast<int>(op.invokes.size());
  else
    done = state.pc > k || (state.pc == k && op.publish == EmissionKind::NoPublish);
  if (done) {
    state.current = -1;
    state.pc = 0;
  }
  return state;
}

void TransitionSystem::idle_successors(const State& state, std::vector<std::pair<Event, State>>& out) const {
  bool any = false;
  for (std::size_t i = 0; i < operators_.size(); ++i) {
    if (state.pending[i] == 0) continue;
    any = true;
    State next = state;
    --next.pending[i];
    next.current = static_cast<int>(i);
    next.pc = 0;
    out.emplace_back(Event::activate(operators_[i].name), normalize(std::move(next)));
  }
  if (!any) out.emplace_back(Event::quiesce(), initial());
}

std::vector<std::pair<Event, TransitionSystem::State>> TransitionSystem::successors(const State& state) const {
  std::vector<std::pair<Event, State>> out;
  if (state.idle()) {
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      State next = initial();
      next.stimulus = static_cast<int>(i);
      for (int c : sources_[i].consumers) ++next.pending[c];
      out.emplace_back(Event::publish_source(sources_[i].source), std::move(next));
    }
    return out;
  }
  if (state.current < 0) {
    idle_successors(state, out);
    return out;
  }

  const Operator& op = operators_[state.current];
  const int k = static_cast<int>(op.pulls.size());
  auto step = [&](State next) {
    ++next.pc;
    return normalize(std::move(next));
  };
  if (state.pc < k) {
    out.emplace_back(Event::pull_from(op.name, op.pulls[state.pc]), step(state));
    return out;
  }
  if (!op.controller) {
    State published = state;
    for (int c : op.consumers) ++published.pending[c];
    out.emplace_back(Event::publish(op.name), step(std::move(published)));
    if (op.publish == EmissionKind::PublishMaybe) out.emplace_back(Event::skip_publish(op.name), step(state));
    return out;
  }
  for (int j = state.pc - k; j < static_cast<int>(op.invokes.size()); ++j) {
    State next = state;
    next.pc = k + j;
    out.emplace_back(Event::invoke(op.name, op.invokes[j]), step(std::move(next)));
  }
  State finished = state;
  finished.current = -1;
  finished.pc = 0;
  idle_successors(finished, out);
  return out;
}

bool replays(const TransitionSystem& ts, const Trace& trace) {
  std::vector<TransitionSystem::State> frontier{ts.initial()};
  for (const Event& e : trace) {
    std::vector<TransitionSystem::State> next;
    for (const auto& s : frontier)
      for (auto& [event, target] : ts.successors(s))
        if (event == e && std::find(next.begin(), next.end(), target) == next.end()) next.push_back(target);
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return true;
}

}  // namespace sccadl
