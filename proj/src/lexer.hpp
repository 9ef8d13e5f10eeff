#pragma once

// Shared tokenizer for architecture files and invariant files. Keywords are
// not distinguished here; each parser checks identifier text against its
// own keyword table.

#include <string>
#include <string_view>
#include <vector>

#include "sccadl/diagnostic.hpp"

namespace sccadl::detail {

enum class TokenKind { Identifier, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;

  bool is(std::string_view t) const { return kind != TokenKind::End && text == t; }
};

struct LexOptions {
  bool hashComments = false;  // `#` starts a line comment (invariant files)
};

/// Tokenizes `text`. Invalid characters are reported as E010 and skipped.
/// The result always ends with exactly one End token.
std::vector<Token> tokenize(std::string_view text, const std::string& file,
                            std::vector<Diagnostic>& diagnostics, LexOptions options = {});

/// Human-readable rendering of a token for "found ..." messages.
std::string describe(const Token& token);

}  // namespace sccadl::detail
