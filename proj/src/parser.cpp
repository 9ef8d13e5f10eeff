#include "sccadl/parser.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "lexer.hpp"

namespace sccadl {

namespace {

using detail::Token;
using detail::TokenKind;

constexpr std::array<std::string_view, 20> kKeywords = {
    "device", "source",  "as",     "provides", "actioninterface", "method",     "context",
    "when",   "provided", "or",    "get",      "always",          "maybe",      "publish",
    "controller", "do",  "on",     "Bool",     "Int",             "enum"};

constexpr std::array<std::string_view, 5> kDeclarationKeywords = {
    "device", "actioninterface", "context", "controller", "enum"};

bool is_keyword(std::string_view text) {
  return std::find(kKeywords.begin(), kKeywords.end(), text) != kKeywords.end();
}

// Unwinds out of the declaration being parsed; the diagnostic has already
// been recorded.
struct AbandonDeclaration {};

std::string join_expected(std::initializer_list<std::string_view> expected) {
  std::string out;
  std::size_t i = 0;
  for (auto e : expected) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += e;
    ++i;
  }
  return out;
}

SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out = a;
  out.endLine = b.endLine;
  out.endCol = b.endCol;
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diagnostics)
      : tokens_(std::move(tokens)), diagnostics_(diagnostics) {}

  ArchitectureModel run() {
    while (peek().kind != TokenKind::End) {
      try {
        declaration();
      } catch (const AbandonDeclaration&) {
        synchronize();
      }
    }
    return std::move(model_);
  }

private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  bool at(std::string_view text) const { return peek().is(text); }

  bool at_declaration_start() const {
    const Token& t = peek();
    return t.kind == TokenKind::Identifier &&
           std::find(kDeclarationKeywords.begin(), kDeclarationKeywords.end(), t.text) !=
               kDeclarationKeywords.end();
  }

  [[noreturn]] void fail(std::initializer_list<std::string_view> expected) {
    const Token& t = peek();
    if (open_ && (t.kind == TokenKind::End || at_declaration_start())) {
      const SourceSpan& o = open_->span;
      diagnostics_.push_back(make_diagnostic(
          Code::UnterminatedBlock,
          "block of " + block_owner_ + " opened at " + std::to_string(o.startLine) + ":" +
              std::to_string(o.startCol) + " is not closed before " + detail::describe(t),
          t.span));
    } else {
      diagnostics_.push_back(make_diagnostic(
          Code::SyntaxError,
          "expected " + join_expected(expected) + ", found " + detail::describe(t), t.span));
    }
    throw AbandonDeclaration{};
  }

  void synchronize() {
    open_ = nullptr;
    while (peek().kind != TokenKind::End && !at_declaration_start()) next();
  }

  const Token& expect(std::string_view text) {
    if (!at(text)) fail({"'" + std::string(text) + "'"});
    return next();
  }

  const Token& expect_identifier() {
    const Token& t = peek();
    if (t.kind != TokenKind::Identifier || is_keyword(t.text)) fail({"identifier"});
    return next();
  }

  void open_block(const Token& brace, std::string owner) {
    open_ = &brace;
    block_owner_ = std::move(owner);
  }

  void close_block() {
    next();
    open_ = nullptr;
  }

  void declaration() {
    if (at("device")) return device();
    if (at("actioninterface")) return action_interface();
    if (at("enum")) return enumeration();
    if (at("context")) return context();
    if (at("controller")) return controller();
    const bool stray = peek().kind != TokenKind::End;
    try {
      fail({"'device'", "'actioninterface'", "'enum'", "'context'", "'controller'"});
    } catch (const AbandonDeclaration&) {
      // Step over the offending token so synchronize() makes progress.
      if (stray) next();
      throw;
    }
  }

  DataType type() {
    const Token& t = peek();
    if (t.is("Bool")) {
      next();
      return DataType::boolean();
    }
    if (t.is("Int")) {
      next();
      return DataType::integer();
    }
    if (t.kind == TokenKind::Identifier && !is_keyword(t.text)) {
      next();
      return DataType::opaque(t.text);
    }
    fail({"'Bool'", "'Int'", "type name"});
  }

  ElementRef reference() {
    const Token& first = expect_identifier();
    ElementRef ref;
    ref.name = first.text;
    ref.at.span = first.span;
    if (at(".")) {
      next();
      const Token& second = expect_identifier();
      ref.name += "." + second.text;
      ref.at.span = merge(first.span, second.span);
    }
    return ref;
  }

  void device() {
    next();
    DeviceClass device;
    const Token& name = expect_identifier();
    device.name = name.text;
    device.at.span = name.span;
    open_block(expect("{"), "device '" + device.name + "'");
    while (!at("}")) {
      if (at("source")) {
        next();
        Source source;
        const Token& id = expect_identifier();
        source.name = id.text;
        source.at.span = id.span;
        source.owner = device.name;
        expect("as");
        source.type = type();
        expect(";");
        device.sources.push_back(std::move(source));
      } else if (at("provides")) {
        next();
        const Token& id = expect_identifier();
        device.provides.push_back(ElementRef{ElementKind::Unresolved, id.text, Anchor{id.span}});
        expect(";");
      } else {
        fail({"'source'", "'provides'", "'}'"});
      }
    }
    close_block();
    model_.taxonomy.devices.push_back(std::move(device));
  }

  void action_interface() {
    next();
    ActionInterface iface;
    const Token& name = expect_identifier();
    iface.name = name.text;
    iface.at.span = name.span;
    open_block(expect("{"), "action interface '" + iface.name + "'");
    while (true) {
      if (at("}") && !iface.methods.empty()) break;
      if (!at("method")) {
        if (iface.methods.empty()) fail({"'method'"});
        fail({"'method'", "'}'"});
      }
      next();
      ActionMethod method;
      const Token& id = expect_identifier();
      method.name = id.text;
      method.at.span = id.span;
      expect("(");
      if (!at(")")) {
        while (true) {
          Param param;
          const Token& pid = expect_identifier();
          param.name = pid.text;
          param.at.span = pid.span;
          expect("as");
          param.type = type();
          method.params.push_back(std::move(param));
          if (!at(",")) break;
          next();
        }
      }
      expect(")");
      expect(";");
      iface.methods.push_back(std::move(method));
    }
    close_block();
    model_.taxonomy.interfaces.push_back(std::move(iface));
  }

  void enumeration() {
    next();
    EnumDecl decl;
    const Token& name = expect_identifier();
    decl.name = name.text;
    decl.at.span = name.span;
    open_block(expect("{"), "enum '" + decl.name + "'");
    if (!at("}")) {
      while (true) {
        decl.literals.push_back(expect_identifier().text);
        if (!at(",")) break;
        next();
      }
    }
    if (!at("}")) fail({"','", "'}'"});
    close_block();
    model_.taxonomy.enums.push_back(std::move(decl));
  }

  void context() {
    next();
    ContextOperator op;
    const Token& name = expect_identifier();
    op.name = name.text;
    op.at.span = name.span;
    expect("as");
    op.outputType = type();
    open_block(expect("{"), "context '" + op.name + "'");
    operator_body(op.contract);
    close_block();
    if (!publish_emission(op.contract))
      op.contract.emissions.insert(op.contract.emissions.begin(),
                                   Emission{EmissionKind::NoPublish, {}, {}, op.at});
    model_.contexts.push_back(std::move(op));
  }

  void controller() {
    next();
    ControlOperator op;
    const Token& name = expect_identifier();
    op.name = name.text;
    op.at.span = name.span;
    open_block(expect("{"), "controller '" + op.name + "'");
    operator_body(op.contract);
    close_block();
    model_.controllers.push_back(std::move(op));
  }

  void operator_body(InteractionContract& contract) {
    while (!at("}")) {
      if (at("when")) {
        next();
        expect("provided");
        contract.activation.disjuncts.push_back(reference());
        while (at("or")) {
          next();
          expect("provided");
          contract.activation.disjuncts.push_back(reference());
        }
      } else if (at("get")) {
        next();
        DataRequirement req;
        req.target = reference();
        if (at("as")) {
          next();
          req.declaredType = type();
        }
        contract.requirements.push_back(std::move(req));
      } else if (at("always") || at("maybe")) {
        const Token& kw = next();
        expect("publish");
        Emission e;
        e.kind = kw.text == "always" ? EmissionKind::PublishAlways : EmissionKind::PublishMaybe;
        e.at.span = kw.span;
        contract.emissions.push_back(std::move(e));
      } else if (at("do")) {
        const Token& kw = next();
        const Token& method = expect_identifier();
        expect("on");
        const Token& iface = expect_identifier();
        add_invocation(contract, kw, method, iface);
      } else {
        fail({"'when'", "'get'", "'always'", "'maybe'", "'do'", "'}'"});
      }
    }
  }

  // `do` clauses naming the same interface share one Invoke emission.
  static void add_invocation(InteractionContract& contract, const Token& keyword,
                             const Token& method, const Token& iface) {
    auto it = std::find_if(contract.emissions.begin(), contract.emissions.end(),
                           [&](const Emission& e) {
                             return e.kind == EmissionKind::Invoke && e.interface.name == iface.text;
                           });
    if (it == contract.emissions.end()) {
      Emission e;
      e.kind = EmissionKind::Invoke;
      e.interface = ElementRef{ElementKind::Unresolved, iface.text, Anchor{iface.span}};
      e.at.span = keyword.span;
      contract.emissions.push_back(std::move(e));
      it = std::prev(contract.emissions.end());
    }
    it->methods.push_back(MethodRef{method.text, Anchor{method.span}});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diagnostics_;
  ArchitectureModel model_;
  const Token* open_ = nullptr;
  std::string block_owner_;
};

}  // namespace

ParseResult parse(std::string_view text, const std::string& file) {
  ParseResult result;
  auto tokens = detail::tokenize(text, file, result.diagnostics);
  result.model = Parser(std::move(tokens), result.diagnostics).run();
  sort_diagnostics(result.diagnostics);
  return result;
}

}  // namespace sccadl
