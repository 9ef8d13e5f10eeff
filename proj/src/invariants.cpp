#include <map>

#include "lexer.hpp"
#include "sccadl/verifier.hpp"

namespace sccadl {

using detail::Token;
using detail::TokenKind;

bool EventPattern::matches(const Event& event) const {
  const bool any = element == "*";
  switch (kind) {
    case Kind::Publish:
      return (event.kind == EventKind::PublishSource || event.kind == EventKind::Publish) &&
             (any || event.subject == element);
    case Kind::Activate:
      return event.kind == EventKind::Activate && (any || event.subject == element);
    case Kind::Invoke:
      return event.kind == EventKind::InvokeAction && (any || event.subject == element) &&
             event.object == method;
  }
  return false;
}

std::string to_string(const EventPattern& pattern) {
  switch (pattern.kind) {
    case EventPattern::Kind::Publish:
      return "publish(" + pattern.element + ")";
    case EventPattern::Kind::Activate:
      return "activate(" + pattern.element + ")";
    case EventPattern::Kind::Invoke:
      return "invoke(" + pattern.element + ", " + pattern.method + ")";
  }
  return "?";
}

std::string to_string(const InvariantSpec& spec) {
  switch (spec.kind) {
    case PatternKind::Never:
      return "never " + to_string(spec.first);
    case PatternKind::Precedes:
      return to_string(spec.first) + " precedes " + to_string(spec.second);
    case PatternKind::LeadsTo:
      return to_string(spec.first) + " leadsto " + to_string(spec.second);
  }
  return "?";
}

namespace {

struct LineError {
  Diagnostic diagnostic;
};

class LineParser {
public:
  LineParser(std::vector<Token> tokens, const ArchitectureModel& model, SourceSpan lineEnd)
      : tokens_(std::move(tokens)), model_(model), end_(std::move(lineEnd)) {}

  InvariantSpec parse() {
    InvariantSpec spec;
    if (peek().is("never")) {
      ++pos_;
      spec.kind = PatternKind::Never;
      spec.first = event();
    } else {
      spec.first = event();
      if (peek().is("precedes"))
        spec.kind = PatternKind::Precedes;
      else if (peek().is("leadsto"))
        spec.kind = PatternKind::LeadsTo;
      else
        fail("'precedes' or 'leadsto'");
      ++pos_;
      spec.second = event();
    }
    if (pos_ != tokens_.size()) fail("end of line");
    return spec;
  }

private:
  const Token& peek() const {
    static const Token none;
    return pos_ < tokens_.size() ? tokens_[pos_] : none;
  }

  SourceSpan here() const { return pos_ < tokens_.size() ? tokens_[pos_].span : end_; }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = pos_ < tokens_.size() ? detail::describe(tokens_[pos_]) : "end of line";
    throw LineError{make_diagnostic(Code::SyntaxError, "expected " + expected + ", found " + found, here())};
  }

  [[noreturn]] static void unknown(const std::string& message, const SourceSpan& span) {
    throw LineError{make_diagnostic(Code::UnknownReference, message, span)};
  }

  void expect(std::string_view punct) {
    if (!peek().is(punct) || peek().kind != TokenKind::Punct) fail("'" + std::string(punct) + "'");
    ++pos_;
  }

  const Token& identifier(const std::string& what) {
    if (peek().kind != TokenKind::Identifier) fail(what);
    return tokens_[pos_++];
  }

  struct Name {
    std::string text;
    SourceSpan span;
  };

  /// NAME, NAME.NAME, or `*` when allowed.
  Name name(bool allowStar) {
    if (allowStar && peek().is("*")) {
      Name n{"*", peek().span};
      ++pos_;
      return n;
    }
    const Token& first = identifier(allowStar ? "a name or '*'" : "a name");
    Name n{first.text, first.span};
    if (peek().is(".")) {
      ++pos_;
      const Token& second = identifier("a name after '.'");
      n.text += "." + second.text;
      n.span.endLine = second.span.endLine;
      n.span.endCol = second.span.endCol;
    }
    return n;
  }

  std::string publisher(const Name& n) const {
    if (n.text.find('.') != std::string::npos) {
      if (!find_source(model_, n.text)) unknown("unknown source '" + n.text + "'", n.span);
      return n.text;
    }
    if (find_context(model_, n.text)) return n.text;
    std::string match;
    for (const Source* s : all_sources(model_)) {
      if (s->name != n.text) continue;
      if (!match.empty()) unknown("source name '" + n.text + "' is ambiguous; qualify it as Device.source", n.span);
      match = qualified_name(*s);
    }
    if (match.empty()) unknown("'" + n.text + "' is neither a source nor a context", n.span);
    return match;
  }

  std::string activated(const Name& n) const {
    if (n.text == "*" || find_context(model_, n.text) || find_controller(model_, n.text)) return n.text;
    unknown("'" + n.text + "' is not a context or controller", n.span);
  }

  std::string controller(const Name& n) const {
    if (n.text == "*" || find_controller(model_, n.text)) return n.text;
    unknown("'" + n.text + "' is not a controller", n.span);
  }

  std::string method(const Name& n) const {
    const auto dot = n.text.find('.');
    if (dot == std::string::npos) unknown("expected Interface.method, found '" + n.text + "'", n.span);
    const ActionInterface* iface = find_interface(model_, n.text.substr(0, dot));
    if (!iface) unknown("unknown action interface '" + n.text.substr(0, dot) + "'", n.span);
    if (!find_method(*iface, n.text.substr(dot + 1)))
      unknown("action interface '" + iface->name + "' has no method '" + n.text.substr(dot + 1) + "'", n.span);
    return n.text;
  }

  EventPattern event() {
    const Token& head = identifier("'publish', 'activate' or 'invoke'");
    EventPattern p;
    if (head.text == "publish") {
      p.kind = EventPattern::Kind::Publish;
      expect("(");
      p.element = publisher(name(false));
    } else if (head.text == "activate") {
      p.kind = EventPattern::Kind::Activate;
      expect("(");
      p.element = activated(name(true));
    } else if (head.text == "invoke") {
      p.kind = EventPattern::Kind::Invoke;
      expect("(");
      p.element = controller(name(true));
      expect(",");
      p.method = method(name(false));
    } else {
      --pos_;
      fail("'publish', 'activate' or 'invoke'");
    }
    expect(")");
    return p;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ArchitectureModel& model_;
  SourceSpan end_;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

InvariantParseResult parse_invariants(std::string_view text, const ArchitectureModel& model,
                                      const std::string& file) {
  InvariantParseResult result;
  std::vector<Token> tokens = detail::tokenize(text, file, result.diagnostics, {.hashComments = true});

  std::map<int, std::vector<Token>> lines;
  for (auto& t : tokens)
    if (t.kind != TokenKind::End) lines[t.span.startLine].push_back(std::move(t));

  std::vector<std::string_view> rawLines;
  for (std::size_t start = 0; start <= text.size();) {
    const auto nl = text.find('\n', start);
    const auto stop = nl == std::string_view::npos ? text.size() : nl;
    rawLines.push_back(text.substr(start, stop - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  for (auto& [line, lineTokens] : lines) {
    std::string_view raw = rawLines[line - 1];
    raw = trim(raw.substr(0, raw.find('#')));
    SourceSpan end = lineTokens.back().span;
    end.startLine = end.endLine;
    end.startCol = end.endCol;
    const SourceSpan first = lineTokens.front().span;
    const SourceSpan last = lineTokens.back().span;
    try {
      LineParser parser(std::move(lineTokens), model, end);
      InvariantSpec spec = parser.parse();
      spec.text = std::string(raw);
      spec.span = {file, first.startLine, first.startCol, last.endLine, last.endCol};
      result.invariants.push_back(std::move(spec));
    } catch (const LineError& e) {
      result.diagnostics.push_back(e.diagnostic);
    }
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

}  // namespace sccadl
