#include "lexer.hpp"

namespace sccadl::detail {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  std::size_t offset() const { return pos_; }
  int line() const { return line_; }
  int col() const { return col_; }

  void advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // Columns count code points, not bytes.
      ++col_;
    }
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text, const std::string& file,
                            std::vector<Diagnostic>& diagnostics, LexOptions options) {
  std::vector<Token> tokens;
  Cursor cur(text);
  while (!cur.done()) {
    const char c = cur.peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      cur.advance();
      continue;
    }
    if ((c == '/' && cur.peek(1) == '/') || (options.hashComments && c == '#')) {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }

    Token tok;
    tok.span.file = file;
    tok.span.startLine = cur.line();
    tok.span.startCol = cur.col();
    const std::size_t begin = cur.offset();

    if (is_alpha(c)) {
      while (!cur.done() && (is_alpha(cur.peek()) || is_digit(cur.peek()) || cur.peek() == '_'))
        cur.advance();
      tok.kind = TokenKind::Identifier;
    } else if (std::string_view("{}();,.*").find(c) != std::string_view::npos) {
      cur.advance();
      tok.kind = TokenKind::Punct;
    } else {
      cur.advance();
      while (!cur.done() && (static_cast<unsigned char>(cur.peek()) & 0xC0) == 0x80) cur.advance();
      SourceSpan span = tok.span;
      span.endLine = cur.line();
      span.endCol = cur.col();
      diagnostics.push_back(make_diagnostic(
          Code::SyntaxError,
          "unexpected character '" + std::string(text.substr(begin, cur.offset() - begin)) + "'",
          span));
      continue;
    }
    tok.text = std::string(text.substr(begin, cur.offset() - begin));
    tok.span.endLine = cur.line();
    tok.span.endCol = cur.col();
    tokens.push_back(std::move(tok));
  }

  Token end;
  end.kind = TokenKind::End;
  end.span = {file, cur.line(), cur.col(), cur.line(), cur.col()};
  tokens.push_back(std::move(end));
  return tokens;
}

std::string describe(const Token& token) {
  if (token.kind == TokenKind::End) return "end of file";
  return "'" + token.text + "'";
}

}  // namespace sccadl::detail
