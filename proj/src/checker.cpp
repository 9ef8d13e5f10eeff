#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "sccadl/verifier.hpp"

namespace sccadl {

namespace {

constexpr std::uint8_t kViolated = 1;  // Never/Precedes: bad event seen; LeadsTo: open obligation
constexpr std::uint8_t kSeenFirst = 2;

struct Node {
  TransitionSystem::State state;
  std::uint8_t monitor = 0;
};

class Product {
public:
  Product(const TransitionSystem& ts, const InvariantSpec& inv, std::size_t limit)
      : ts_(ts), inv_(inv), limit_(limit) {}

  Node initial() const { return {ts_.initial(), 0}; }

  std::string key(const Node& n) const { return ts_.key(n.state) + static_cast<char>(n.monitor); }

  /// Successor nodes; `bad` is set on the Quiesce transition that closes a
  /// violating reaction.
  struct Step {
    Event event;
    Node target;
    bool bad = false;
  };

  std::vector<Step> successors(const Node& n) const {
    std::vector<Step> out;
    for (auto& [event, state] : ts_.successors(n.state)) {
      Step step{event, {std::move(state), n.monitor}, false};
      if (event.kind == EventKind::Quiesce) {
        step.bad = (n.monitor & kViolated) != 0;
        step.target.monitor = 0;
      } else {
        step.target.monitor = advance(n.monitor, event);
      }
      out.push_back(std::move(step));
    }
    return out;
  }

  void count(std::size_t visited) const {
    if (visited > limit_)
      throw DiagnosticError(make_diagnostic(
          Code::StateLimitExceeded,
          "state limit of " + std::to_string(limit_) + " exceeded while checking '" + inv_.text + "'",
          inv_.span));
  }

private:
  std::uint8_t advance(std::uint8_t m, const Event& e) const {
    switch (inv_.kind) {
      case PatternKind::Never:
        if (inv_.first.matches(e)) m |= kViolated;
        break;
      case PatternKind::Precedes:
        if (inv_.first.matches(e))
          m |= kSeenFirst;
        else if (inv_.second.matches(e) && !(m & kSeenFirst))
          m |= kViolated;
        break;
      case PatternKind::LeadsTo:
        if (inv_.second.matches(e))
          m &= static_cast<std::uint8_t>(~kViolated);
        else if (inv_.first.matches(e))
          m |= kViolated;
        break;
    }
    return m;
  }

  const TransitionSystem& ts_;
  const InvariantSpec& inv_;
  std::size_t limit_;
};

/// Depth-first search for any violating reaction. `visited` receives the
/// number of states seen.
bool dfs_finds_violation(const Product& p, std::size_t& visited) {
  std::unordered_set<std::string> seen;
  std::vector<Node> stack{p.initial()};
  seen.insert(p.key(stack.back()));
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    for (auto& step : p.successors(n)) {
      if (step.bad) {
        visited = seen.size();
        return true;
      }
      if (seen.insert(p.key(step.target)).second) {
        p.count(seen.size());
        stack.push_back(std::move(step.target));
      }
    }
  }
  visited = seen.size();
  return false;
}

Trace shortest_violation(const Product& p) {
  struct Parent {
    std::string from;
    Event event;
  };
  std::unordered_map<std::string, Parent> parent;
  std::deque<std::pair<std::string, Node>> queue;
  const Node start = p.initial();
  parent.emplace(p.key(start), Parent{});
  queue.emplace_back(p.key(start), start);

  auto unwind = [&](std::string key, Event last) {
    Trace trace{std::move(last)};
    const std::string root = p.key(start);
    while (key != root) {
      const Parent& up = parent.at(key);
      trace.push_back(up.event);
      key = up.from;
    }
    return Trace(trace.rbegin(), trace.rend());
  };

  while (!queue.empty()) {
    auto [key, n] = std::move(queue.front());
    queue.pop_front();
    for (auto& step : p.successors(n)) {
      if (step.bad) return unwind(key, step.event);
      std::string k = p.key(step.target);
      if (parent.emplace(k, Parent{key, step.event}).second) {
        p.count(parent.size());
        queue.emplace_back(std::move(k), std::move(step.target));
      }
    }
  }
  return {};
}

}  // namespace

std::vector<Verdict> check(const TransitionSystem& ts, const std::vector<InvariantSpec>& invariants,
                           const CheckOptions& options) {
  std::vector<Verdict> verdicts;
  for (const auto& inv : invariants) {
    Product product(ts, inv, options.stateLimit);
    Verdict v;
    v.invariant = inv;
    if (dfs_finds_violation(product, v.states)) {
      v.kind = VerdictKind::Violated;
      v.trace = shortest_violation(product);
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

std::string format_verdicts(const std::vector<Verdict>& verdicts) {
  std::string out;
  for (const auto& v : verdicts) {
    const std::string& text = v.invariant.text.empty() ? to_string(v.invariant) : v.invariant.text;
    out += (v.kind == VerdictKind::Holds ? "HOLDS " : "VIOLATED ") + text + "\n";
    for (const auto& e : v.trace) out += "  " + to_string(e) + "\n";
  }
  return out;
}

}  // namespace sccadl
