#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vdl/js/ast.hpp"
#include "vdl/js/lexer.hpp"

namespace vdl::js {

class ParseError : public SourceError {
 public:
  ParseError(const std::string& what, SourceSpan span, std::vector<std::string> expected = {})
      : SourceError(what, span), expected_(std::move(expected)) {}
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::vector<std::string> expected_;
};

/// Parses a token stream (as produced by tokenize) into a Program. Semicolons
/// are mandatory statement terminators. Break/continue placement is checked
/// after the tree is built.
NodePtr parse(const std::vector<Token>& tokens);

/// tokenize + parse.
NodePtr parse_source(std::string_view source, int file_id = 0);

/// Throws ParseError when break/continue appear outside a loop or switch.
void check_jump_targets(const Node& program);

}  // namespace vdl::js
