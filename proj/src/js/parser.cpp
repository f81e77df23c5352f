#include "vdl/js/parser.hpp"

#include <initializer_list>

#include "vdl/js/printer.hpp"

namespace vdl::js {

namespace {

int binary_precedence(const Token& t) {
  if (t.kind != TokenKind::Punct) return -1;
  const std::string& s = t.text;
  if (s == "||") return 1;
  if (s == "&&") return 2;
  if (s == "==" || s == "!=" || s == "===" || s == "!==") return 3;
  if (s == "<" || s == ">" || s == "<=" || s == ">=") return 4;
  if (s == "+" || s == "-") return 5;
  if (s == "*" || s == "/" || s == "%") return 6;
  return -1;
}

bool is_assign_op(const Token& t) {
  if (t.kind != TokenKind::Punct) return false;
  const std::string& s = t.text;
  return s == "=" || s == "+=" || s == "-=" || s == "*=" || s == "/=" || s == "%=";
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::String: return "string literal";
    case TokenKind::Number: return "number " + t.text;
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::End)
      throw ParseError("token stream is not terminated", {});
  }

  NodePtr program() {
    auto prog = make(NodeKind::Program, cur().span);
    while (cur().kind != TokenKind::End) prog->kids.push_back(statement());
    prog->span.end_line = cur().span.end_line;
    prog->span.end_col = cur().span.end_col;
    if (!prog->kids.empty()) {
      prog->span.start_line = 1;
      prog->span.start_col = 1;
    }
    return prog;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t n = 1) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  const Token& prev() const { return toks_[pos_ - 1]; }

  const Token& bump() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  bool eat_punct(std::string_view p) {
    if (cur().is_punct(p)) {
      bump();
      return true;
    }
    return false;
  }
  bool eat_keyword(std::string_view k) {
    if (cur().is_keyword(k)) {
      bump();
      return true;
    }
    return false;
  }

  [[noreturn]] void expected(std::initializer_list<std::string> what) const {
    std::vector<std::string> set(what);
    std::string msg = "expected ";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) msg += " or ";
      msg += set[i];
    }
    msg += ", found " + describe(cur());
    throw ParseError(msg, cur().span, set);
  }

  void expect_punct(std::string_view p) {
    if (!eat_punct(p)) expected({std::string(p)});
  }
  void expect_keyword(std::string_view k) {
    if (!eat_keyword(k)) expected({std::string(k)});
  }
  void semicolon() { expect_punct(";"); }

  // Closes `node`'s span at the last consumed token.
  NodePtr finish(NodePtr node, const SourceSpan& start) {
    node->span.file_id = start.file_id;
    node->span.start_line = start.start_line;
    node->span.start_col = start.start_col;
    node->span.end_line = prev().span.end_line;
    node->span.end_col = prev().span.end_col;
    return node;
  }

  std::string identifier() {
    if (cur().kind != TokenKind::Identifier) expected({"identifier"});
    return bump().text;
  }

  // ---- statements ----

  NodePtr statement() {
    const Token& t = cur();
    SourceSpan start = t.span;
    if (t.is_punct("{")) return block();
    if (t.is_punct(";")) {
      bump();
      return finish(make(NodeKind::EmptyStmt), start);
    }
    if (t.kind == TokenKind::Keyword) {
      const std::string& k = t.text;
      if (k == "var" || k == "let" || k == "const") {
        auto decl = var_decl();
        semicolon();
        return finish(std::move(decl), start);
      }
      if (k == "function") return function(NodeKind::FunctionDecl);
      if (k == "if") return if_stmt();
      if (k == "while") {
        bump();
        auto n = make(NodeKind::While);
        expect_punct("(");
        n->kids.push_back(expression());
        expect_punct(")");
        n->kids.push_back(statement());
        return finish(std::move(n), start);
      }
      if (k == "do") {
        bump();
        auto n = make(NodeKind::DoWhile);
        n->kids.push_back(statement());
        expect_keyword("while");
        expect_punct("(");
        n->kids.push_back(expression());
        expect_punct(")");
        semicolon();
        return finish(std::move(n), start);
      }
      if (k == "for") return for_stmt();
      if (k == "switch") return switch_stmt();
      if (k == "return") {
        bump();
        auto n = make(NodeKind::Return);
        if (!cur().is_punct(";")) n->kids.push_back(expression());
        semicolon();
        return finish(std::move(n), start);
      }
      if (k == "break" || k == "continue") {
        bump();
        auto n = make(k == "break" ? NodeKind::Break : NodeKind::Continue);
        semicolon();
        return finish(std::move(n), start);
      }
      if (k == "debugger") {
        bump();
        semicolon();
        return finish(make(NodeKind::DebuggerStmt), start);
      }
      if (k == "else" || k == "case" || k == "default")
        throw ParseError("unexpected '" + k + "'", t.span, {"statement"});
    }
    auto n = make(NodeKind::ExprStmt);
    n->kids.push_back(expression());
    semicolon();
    return finish(std::move(n), start);
  }

  NodePtr block() {
    SourceSpan start = cur().span;
    expect_punct("{");
    auto n = make(NodeKind::Block);
    while (!cur().is_punct("}")) {
      if (cur().kind == TokenKind::End) expected({"}"});
      n->kids.push_back(statement());
    }
    bump();
    return finish(std::move(n), start);
  }

  NodePtr var_decl() {
    SourceSpan start = cur().span;
    auto n = make(NodeKind::VarDecl);
    n->text = bump().text;
    do {
      SourceSpan dstart = cur().span;
      auto d = make(NodeKind::Declarator);
      d->text = identifier();
      if (eat_punct("=")) d->kids.push_back(assignment());
      n->kids.push_back(finish(std::move(d), dstart));
    } while (eat_punct(","));
    return finish(std::move(n), start);
  }

  NodePtr function(NodeKind kind) {
    SourceSpan start = cur().span;
    expect_keyword("function");
    auto n = make(kind);
    if (kind == NodeKind::FunctionDecl)
      n->text = identifier();
    else if (cur().kind == TokenKind::Identifier)
      n->text = bump().text;
    expect_punct("(");
    if (!cur().is_punct(")")) {
      do {
        n->params.push_back(identifier());
      } while (eat_punct(","));
    }
    expect_punct(")");
    if (!cur().is_punct("{")) expected({"{"});
    n->kids.push_back(block());
    return finish(std::move(n), start);
  }

  NodePtr if_stmt() {
    SourceSpan start = cur().span;
    bump();
    auto n = make(NodeKind::If);
    expect_punct("(");
    n->kids.push_back(expression());
    expect_punct(")");
    n->kids.push_back(statement());
    if (eat_keyword("else")) n->kids.push_back(statement());
    return finish(std::move(n), start);
  }

  NodePtr for_stmt() {
    SourceSpan start = cur().span;
    bump();
    auto n = make(NodeKind::For);
    expect_punct("(");
    if (cur().is_punct(";")) {
      n->kids.push_back(nullptr);
    } else if (cur().is_keyword("var") || cur().is_keyword("let") || cur().is_keyword("const")) {
      n->kids.push_back(var_decl());
    } else {
      SourceSpan es = cur().span;
      auto e = make(NodeKind::ExprStmt);
      e->kids.push_back(expression());
      n->kids.push_back(finish(std::move(e), es));
    }
    semicolon();
    n->kids.push_back(cur().is_punct(";") ? nullptr : expression());
    semicolon();
    n->kids.push_back(cur().is_punct(")") ? nullptr : expression());
    expect_punct(")");
    n->kids.push_back(statement());
    return finish(std::move(n), start);
  }

  NodePtr switch_stmt() {
    SourceSpan start = cur().span;
    bump();
    auto n = make(NodeKind::Switch);
    expect_punct("(");
    n->kids.push_back(expression());
    expect_punct(")");
    expect_punct("{");
    bool seen_default = false;
    while (!eat_punct("}")) {
      SourceSpan cstart = cur().span;
      auto c = make(NodeKind::Case);
      if (eat_keyword("case")) {
        c->kids.push_back(expression());
      } else if (cur().is_keyword("default")) {
        if (seen_default) throw ParseError("duplicate default clause", cur().span);
        seen_default = true;
        bump();
        c->kids.push_back(nullptr);
      } else {
        expected({"case", "default", "}"});
      }
      expect_punct(":");
      while (!cur().is_keyword("case") && !cur().is_keyword("default") && !cur().is_punct("}")) {
        if (cur().kind == TokenKind::End) expected({"}"});
        c->kids.push_back(statement());
      }
      n->kids.push_back(finish(std::move(c), cstart));
    }
    return finish(std::move(n), start);
  }

  // ---- expressions ----

  NodePtr expression() { return assignment(); }

  NodePtr assignment() {
    SourceSpan start = cur().span;
    auto left = conditional();
    if (is_assign_op(cur())) {
      if (!left->is(NodeKind::Identifier) && !left->is(NodeKind::Member))
        throw ParseError("invalid assignment target", left->span);
      auto n = make(NodeKind::Assign);
      n->text = bump().text;
      n->kids.push_back(std::move(left));
      n->kids.push_back(assignment());
      return finish(std::move(n), start);
    }
    return left;
  }

  NodePtr conditional() {
    SourceSpan start = cur().span;
    auto test = binary(1);
    if (!eat_punct("?")) return test;
    auto n = make(NodeKind::Conditional);
    n->kids.push_back(std::move(test));
    n->kids.push_back(assignment());
    expect_punct(":");
    n->kids.push_back(assignment());
    return finish(std::move(n), start);
  }

  NodePtr binary(int min_prec) {
    SourceSpan start = cur().span;
    auto left = unary();
    for (;;) {
      int prec = binary_precedence(cur());
      if (prec < min_prec) break;
      auto n = make(NodeKind::Binary);
      n->text = bump().text;
      n->kids.push_back(std::move(left));
      n->kids.push_back(binary(prec + 1));
      left = finish(std::move(n), start);
    }
    return left;
  }

  NodePtr unary() {
    SourceSpan start = cur().span;
    const Token& t = cur();
    if (t.is_punct("!") || t.is_punct("-") || t.is_punct("+") || t.is_keyword("typeof")) {
      auto n = make(NodeKind::Unary);
      n->text = bump().text;
      n->kids.push_back(unary());
      return finish(std::move(n), start);
    }
    return postfix();
  }

  NodePtr postfix() {
    SourceSpan start = cur().span;
    NodePtr e = cur().is_keyword("new") ? new_expr() : primary();
    for (;;) {
      if (eat_punct(".")) {
        e = finish(make_member(std::move(e), property_name()), start);
      } else if (eat_punct("[")) {
        auto prop = expression();
        expect_punct("]");
        e = finish(make_index(std::move(e), std::move(prop)), start);
      } else if (cur().is_punct("(")) {
        auto n = make(NodeKind::Call);
        n->kids.push_back(std::move(e));
        arguments(*n);
        e = finish(std::move(n), start);
      } else {
        break;
      }
    }
    return e;
  }

  std::string property_name() {
    if (cur().kind != TokenKind::Identifier && cur().kind != TokenKind::Keyword)
      expected({"property name"});
    return bump().text;
  }

  NodePtr new_expr() {
    SourceSpan start = cur().span;
    expect_keyword("new");
    NodePtr callee = cur().is_keyword("new") ? new_expr() : primary();
    for (;;) {
      if (eat_punct(".")) {
        callee = finish(make_member(std::move(callee), property_name()), start);
      } else if (eat_punct("[")) {
        auto prop = expression();
        expect_punct("]");
        callee = finish(make_index(std::move(callee), std::move(prop)), start);
      } else {
        break;
      }
    }
    auto n = make(NodeKind::New);
    n->kids.push_back(std::move(callee));
    if (cur().is_punct("(")) arguments(*n);
    return finish(std::move(n), start);
  }

  void arguments(Node& call) {
    expect_punct("(");
    if (!cur().is_punct(")")) {
      do {
        call.kids.push_back(assignment());
      } while (eat_punct(","));
    }
    expect_punct(")");
  }

  NodePtr primary() {
    SourceSpan start = cur().span;
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Identifier:
        bump();
        return make_ident(t.text, t.span);
      case TokenKind::Number:
        bump();
        return make_number(t.number, t.span);
      case TokenKind::String:
        bump();
        return make_string(t.text, t.span);
      case TokenKind::Keyword:
        if (t.text == "true" || t.text == "false") {
          bump();
          return make_bool(t.text == "true", t.span);
        }
        if (t.text == "null") {
          bump();
          auto n = make(NodeKind::Literal, t.span);
          n->literal = LiteralType::Null;
          return n;
        }
        if (t.text == "function") return function(NodeKind::FunctionExpr);
        break;
      case TokenKind::Punct:
        if (t.text == "(") {
          bump();
          auto e = expression();
          expect_punct(")");
          return e;
        }
        if (t.text == "[") {
          bump();
          auto n = make(NodeKind::ArrayLiteral);
          if (!cur().is_punct("]")) {
            do {
              if (cur().is_punct("]")) break;  // trailing comma
              n->kids.push_back(assignment());
            } while (eat_punct(","));
          }
          expect_punct("]");
          return finish(std::move(n), start);
        }
        if (t.text == "{") return object_literal();
        break;
      case TokenKind::End:
        break;
    }
    expected({"expression"});
  }

  NodePtr object_literal() {
    SourceSpan start = cur().span;
    expect_punct("{");
    auto n = make(NodeKind::ObjectLiteral);
    if (!cur().is_punct("}")) {
      do {
        if (cur().is_punct("}")) break;  // trailing comma
        const Token& k = cur();
        std::string key;
        if (k.kind == TokenKind::Identifier || k.kind == TokenKind::Keyword || k.kind == TokenKind::String) {
          key = k.text;
        } else if (k.kind == TokenKind::Number) {
          key = number_to_string(k.number);
        } else {
          expected({"property name"});
        }
        bump();
        expect_punct(":");
        n->keys.push_back(std::move(key));
        n->kids.push_back(assignment());
      } while (eat_punct(","));
    }
    expect_punct("}");
    return finish(std::move(n), start);
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

void check_jumps(const Node& n, bool in_loop, bool in_switch) {
  switch (n.kind) {
    case NodeKind::Break:
      if (!in_loop && !in_switch) throw ParseError("'break' outside loop or switch", n.span);
      return;
    case NodeKind::Continue:
      if (!in_loop) throw ParseError("'continue' outside loop", n.span);
      return;
    case NodeKind::FunctionDecl:
    case NodeKind::FunctionExpr:
      in_loop = in_switch = false;
      break;
    case NodeKind::While:
    case NodeKind::DoWhile:
    case NodeKind::For:
      for (const auto& k : n.kids)
        if (k) check_jumps(*k, true, in_switch);
      return;
    case NodeKind::Switch:
      for (const auto& k : n.kids)
        if (k) check_jumps(*k, in_loop, true);
      return;
    default:
      break;
  }
  for (const auto& k : n.kids)
    if (k) check_jumps(*k, in_loop, in_switch);
}

}  // namespace

NodePtr parse(const std::vector<Token>& tokens) {
  auto prog = Parser(tokens).program();
  check_jump_targets(*prog);
  return prog;
}

NodePtr parse_source(std::string_view source, int file_id) {
  return parse(tokenize(source, file_id));
}

void check_jump_targets(const Node& program) { check_jumps(program, false, false); }

}  // namespace vdl::js
