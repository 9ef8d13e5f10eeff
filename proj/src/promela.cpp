#include <map>
#include <sstream>

#include "sccadl/verifier.hpp"

namespace sccadl {

namespace {

struct Channel {
  int publisher;  // operator index, or -1 - source index
  int consumer;
  int capacity;
};

class PromelaWriter {
public:
  PromelaWriter(const ArchitectureModel& model, const std::vector<InvariantSpec>& invariants)
      : ts_(model), invariants_(invariants) {
    number(Event::quiesce());
    for (const auto& s : ts_.sources()) number(Event::publish_source(s.source));
    for (const auto& op : ts_.operators()) {
      number(Event::activate(op.name));
      for (const auto& t : op.pulls) number(Event::pull_from(op.name, t));
      if (!op.controller && op.publish != EmissionKind::NoPublish) number(Event::publish(op.name));
      if (op.publish == EmissionKind::PublishMaybe) number(Event::skip_publish(op.name));
      for (const auto& m : op.invokes) number(Event::invoke(op.name, m));
    }
    build_channels();
  }

  std::string write() {
    out_ << "/* Generated by sccadl from the architecture description. */\n\n";
    if (ts_.sources().empty() && ts_.operators().empty()) {
      ltl_blocks();
      out_ << "init { skip }\n";
      return out_.str();
    }
    out_ << "/* event codes; 0 means no event yet */\n";
    for (std::size_t i = 0; i < events_.size(); ++i)
      out_ << "/* " << i + 1 << " " << to_string(events_[i]) << " */\n";
    out_ << "\nbyte ev = 0;\n";
    out_ << "byte current = 0;  /* 0 = no operator running, i = operator i */\n";
    out_ << "bool idle = true;\n\n";
    for (std::size_t i = 0; i < channels_.size(); ++i)
      out_ << "chan c" << i << " = [" << channels_[i].capacity << "] of { bit };  /* "
           << publisher_name(channels_[i].publisher) << " -> "
           << ts_.operators()[channels_[i].consumer].name << " */\n";
    if (!channels_.empty()) out_ << "\n";
    for (std::size_t i = 0; i < ts_.operators().size(); ++i) operator_process(static_cast<int>(i));
    environment();
    ltl_blocks();
    return out_.str();
  }

private:
  void number(Event e) { events_.push_back(std::move(e)); }

  int code(const Event& e) const {
    for (std::size_t i = 0; i < events_.size(); ++i)
      if (events_[i] == e) return static_cast<int>(i) + 1;
    return 0;
  }

  std::string publisher_name(int p) const {
    return p >= 0 ? ts_.operators()[p].name : ts_.sources()[-1 - p].source;
  }

  void build_channels() {
    // Upper bound on publications of each operator within one reaction:
    // the number of push paths reaching it.
    const auto& ops = ts_.operators();
    std::vector<int> paths(ops.size(), -1);
    std::vector<std::vector<int>> producers(ops.size());
    for (std::size_t s = 0; s < ts_.sources().size(); ++s)
      for (int c : ts_.sources()[s].consumers) producers[c].push_back(-1 - static_cast<int>(s));
    for (std::size_t p = 0; p < ops.size(); ++p)
      for (int c : ops[p].consumers) producers[c].push_back(static_cast<int>(p));
    auto count = [&](auto& self, int op) -> int {
      if (paths[op] >= 0) return paths[op];
      int total = 0;
      for (int p : producers[op]) total += p < 0 ? 1 : self(self, p);
      return paths[op] = total;
    };
    for (std::size_t c = 0; c < ops.size(); ++c)
      for (int p : producers[c])
        channels_.push_back({p, static_cast<int>(c), std::max(1, p < 0 ? 1 : count(count, p))});
  }

  std::vector<int> outgoing(int publisher) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < channels_.size(); ++i)
      if (channels_[i].publisher == publisher) out.push_back(static_cast<int>(i));
    return out;
  }

  std::string sends(int publisher) const {
    std::string s;
    for (int c : outgoing(publisher)) s += "; c" + std::to_string(c) + "!1";
    return s;
  }

  void operator_process(int index) {
    const auto& op = ts_.operators()[index];
    const std::string id = std::to_string(index + 1);
    out_ << "active proctype " << op.name << "() {\n  do\n  :: if\n";
    bool any = false;
    for (std::size_t i = 0; i < channels_.size(); ++i) {
      if (channels_[i].consumer != index) continue;
      any = true;
      out_ << "     :: atomic { current == 0 && nempty(c" << i << ") -> c" << i << "?_; current = " << id
           << "; ev = " << code(Event::activate(op.name)) << " }\n";
    }
    if (!any) out_ << "     :: false\n";
    out_ << "     fi;\n";
    for (const auto& t : op.pulls) out_ << "     ev = " << code(Event::pull_from(op.name, t)) << ";\n";
    if (!op.controller) {
      const int pub = code(Event::publish(op.name));
      if (op.publish == EmissionKind::PublishAlways) {
        out_ << "     atomic { ev = " << pub << sends(index) << " };\n";
      } else if (op.publish == EmissionKind::PublishMaybe) {
        out_ << "     if\n     :: atomic { ev = " << pub << sends(index) << " }\n"
             << "     :: ev = " << code(Event::skip_publish(op.name)) << "\n     fi;\n";
      }
    } else {
      for (const auto& m : op.invokes)
        out_ << "     if\n     :: ev = " << code(Event::invoke(op.name, m)) << "\n     :: skip\n     fi;\n";
    }
    out_ << "     current = 0\n  od\n}\n\n";
  }

  void environment() {
    out_ << "active proctype environment() {\n  do\n";
    for (std::size_t s = 0; s < ts_.sources().size(); ++s) {
      const auto& src = ts_.sources()[s];
      out_ << "  :: atomic { idle -> idle = false; ev = " << code(Event::publish_source(src.source))
           << sends(-1 - static_cast<int>(s)) << " }\n";
    }
    out_ << "  :: atomic { !idle && current == 0";
    for (std::size_t i = 0; i < channels_.size(); ++i) out_ << " && empty(c" << i << ")";
    out_ << " -> ev = " << code(Event::quiesce()) << "; idle = true }\n  od\n}\n";
  }

  std::string proposition(const EventPattern& p) const {
    std::string s;
    for (std::size_t i = 0; i < events_.size(); ++i)
      if (p.matches(events_[i])) s += (s.empty() ? "" : " || ") + std::string("ev == ") + std::to_string(i + 1);
    return s.empty() ? "false" : "(" + s + ")";
  }

  void ltl_blocks() {
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
      const auto& inv = invariants_[i];
      out_ << "\n/* " << to_string(inv) << " */\nltl inv" << i + 1 << " { ";
      switch (inv.kind) {
        case PatternKind::Never:
          out_ << "[] !" << proposition(inv.first);
          break;
        case PatternKind::Precedes:
          out_ << "(!" << proposition(inv.second) << ") W " << proposition(inv.first);
          break;
        case PatternKind::LeadsTo:
          out_ << "[] (" << proposition(inv.first) << " -> <> " << proposition(inv.second) << ")";
          break;
      }
      out_ << " }\n";
    }
  }

  TransitionSystem ts_;
  const std::vector<InvariantSpec>& invariants_;
  std::vector<Event> events_;
  std::vector<Channel> channels_;
  std::ostringstream out_;
};

}  // namespace

std::string emit_promela(const ArchitectureModel& model, const std::vector<InvariantSpec>& invariants) {
  return PromelaWriter(model, invariants).write();
}

}  // namespace sccadl
