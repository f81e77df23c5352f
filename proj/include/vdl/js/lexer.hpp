#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vdl/js/ast.hpp"

namespace vdl::js {

/// Base for every diagnostic that carries a source location.
class SourceError : public std::runtime_error {
 public:
  SourceError(const std::string& what, SourceSpan span);
  const SourceSpan& span() const noexcept { return span_; }
  /// Message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

enum class TokenKind { Identifier, Keyword, Number, String, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;   // raw spelling; decoded value for strings
  double number = 0;  // Number tokens
  SourceSpan span;
  std::string trivia;  // whitespace and comments preceding the token

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punct, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

bool is_keyword(std::string_view word);
bool is_identifier_name(std::string_view word);

/// Splits `source` into tokens. The last token is always End and carries
/// any trailing trivia.
std::vector<Token> tokenize(std::string_view source, int file_id = 0);

}  // namespace vdl::js
