#pragma once

// Finite transition-system semantics of a checked architecture, interaction
// invariants over its events, the explicit-state checker, and Promela
// emission.
//
// Values are abstracted away. One stimulus is processed at a time: from
// Idle the environment publishes one source, activation tokens follow push
// edges, ready operators are interleaved, and an activated operator runs to
// completion before another starts. A context performs its pulls in
// declaration order and then publishes (always) or chooses between Publish
// and SkipPublish (maybe). A controller may invoke each licensed method at
// most once, in declaration order, skipping any of them. Quiesce returns to
// Idle once nothing is pending.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sccadl/diagnostic.hpp"
#include "sccadl/model.hpp"

namespace sccadl {

enum class EventKind { PublishSource, Activate, PullFrom, Publish, SkipPublish, InvokeAction, Quiesce };

struct Event {
  EventKind kind = EventKind::Quiesce;
  std::string subject;  // source, operator, context or controller (canonical name)
  std::string object;   // PullFrom target or "Interface.method"

  static Event publish_source(std::string s) { return {EventKind::PublishSource, std::move(s), {}}; }
  static Event activate(std::string op) { return {EventKind::Activate, std::move(op), {}}; }
  static Event pull_from(std::string op, std::string t) { return {EventKind::PullFrom, std::move(op), std::move(t)}; }
  static Event publish(std::string ctx) { return {EventKind::Publish, std::move(ctx), {}}; }
  static Event skip_publish(std::string ctx) { return {EventKind::SkipPublish, std::move(ctx), {}}; }
  static Event invoke(std::string ctrl, std::string m) { return {EventKind::InvokeAction, std::move(ctrl), std::move(m)}; }
  static Event quiesce() { return {}; }

  bool operator==(const Event&) const = default;
};

/// "PullFrom(FireRisk, Thermometer.temperature)"
std::string to_string(const Event& event);

using Trace = std::vector<Event>;

class TransitionSystem {
public:
  struct State {
    int stimulus = -1;                  // index into sources(); -1 when Idle
    std::vector<std::uint8_t> pending;  // activation tokens per operator
    int current = -1;                   // operator running to completion
    int pc = 0;                         // next step of the current operator

    bool idle() const { return stimulus < 0; }
    bool operator==(const State&) const = default;
  };

  struct Operator {
    std::string name;
    bool controller = false;
    std::vector<std::string> pulls;    // canonical targets, declaration order
    EmissionKind publish = EmissionKind::NoPublish;
    std::vector<std::string> invokes;  // "Interface.method", declaration order
    std::vector<int> consumers;        // operators activated by its publication
  };

  struct Stimulus {
    std::string source;  // Device.source
    std::vector<int> consumers;
  };

  TransitionSystem() = default;
  /// Requires a fully checked model (acyclic push graph).
  explicit TransitionSystem(const ArchitectureModel& model);

  const std::vector<Stimulus>& sources() const { return sources_; }
  const std::vector<Operator>& operators() const { return operators_; }

  State initial() const;
  std::vector<std::pair<Event, State>> successors(const State& state) const;

  /// Compact byte encoding, unique per state.
  std::string key(const State& state) const;

private:
  State normalize(State state) const;
  void idle_successors(const State& state, std::vector<std::pair<Event, State>>& out) const;

  std::vector<Stimulus> sources_;
  std::vector<Operator> operators_;
};

TransitionSystem build_ts(const ArchitectureModel& model);

/// True iff `trace` is a path of the transition relation starting at Idle.
bool replays(const TransitionSystem& ts, const Trace& trace);

// ---- invariants ----

enum class PatternKind { Never, Precedes, LeadsTo };

/// publish(X) matches PublishSource(X) and Publish(X); activate(X) matches
/// Activate(X); invoke(C, I.m) matches InvokeAction(C, I.m). `*` in the
/// operator position matches any operator.
struct EventPattern {
  enum class Kind { Publish, Activate, Invoke } kind = Kind::Publish;
  std::string element;  // canonical name or "*"
  std::string method;   // Invoke only: "Interface.method"

  bool matches(const Event& event) const;
  bool operator==(const EventPattern&) const = default;
};

std::string to_string(const EventPattern& pattern);

/// Never(first); Precedes(first, second): `second` does not occur before a
/// `first` within one reaction; LeadsTo(first, second): every `first` is
/// followed by a `second` before Quiesce. Evaluated per stimulus.
struct InvariantSpec {
  PatternKind kind = PatternKind::Never;
  EventPattern first;
  EventPattern second;  // unused by Never
  std::string text;     // source text, trimmed
  SourceSpan span;
};

/// Canonical spelling, e.g. "never invoke(*, Alarm.stop)".
std::string to_string(const InvariantSpec& spec);

struct InvariantParseResult {
  std::vector<InvariantSpec> invariants;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

/// One invariant per line, `#` comments. Names are resolved against the
/// model: sources may be written bare when unambiguous. Reports E010 and
/// E001 per offending line.
InvariantParseResult parse_invariants(std::string_view text, const ArchitectureModel& model,
                                      const std::string& file = "<invariants>");

// ---- checking ----

inline constexpr std::size_t kDefaultStateLimit = 1'000'000;

struct CheckOptions {
  std::size_t stateLimit = kDefaultStateLimit;
};

enum class VerdictKind { Holds, Violated };

struct Verdict {
  InvariantSpec invariant;
  VerdictKind kind = VerdictKind::Holds;
  Trace trace;              // Violated: a shortest violating reaction, PublishSource .. Quiesce
  std::size_t states = 0;   // product states explored
};

/// Checks each invariant over every reaction. Throws DiagnosticError (E050)
/// when one exploration visits more than `stateLimit` states.
std::vector<Verdict> check(const TransitionSystem& ts, const std::vector<InvariantSpec>& invariants,
                           const CheckOptions& options = {});

/// `HOLDS <inv>` or `VIOLATED <inv>` followed by the trace, one indented
/// event per line.
std::string format_verdicts(const std::vector<Verdict>& verdicts);

// ---- Promela ----

/// Self-contained Promela model: one process per operator, one channel per
/// push edge, an environment process that publishes one source per
/// reaction, and one `ltl` block per invariant.
std::string emit_promela(const ArchitectureModel& model, const std::vector<InvariantSpec>& invariants = {});

}  // namespace sccadl
