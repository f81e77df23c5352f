#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vdl::js {

/// 1-based source region. file_id indexes the owning Project's file list.
struct SourceSpan {
  int file_id = 0;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  bool encloses(const SourceSpan& other) const;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

SourceSpan merge(const SourceSpan& a, const SourceSpan& b);

enum class NodeKind {
  Program,
  FunctionDecl,
  VarDecl,
  Declarator,
  Block,
  If,
  While,
  DoWhile,
  For,
  Switch,
  Case,
  Return,
  Break,
  Continue,
  ExprStmt,
  EmptyStmt,
  DebuggerStmt,
  Assign,
  Conditional,
  Binary,
  Unary,
  Call,
  New,
  Member,
  Identifier,
  Literal,
  ArrayLiteral,
  ObjectLiteral,
  FunctionExpr,
};

std::string_view kind_name(NodeKind kind);

enum class LiteralType { Number, String, Boolean, Null };

struct Node;
using NodePtr = std::unique_ptr<Node>;

// Child layout per kind (absent optional children are nullptr):
//   Program        kids = statements
//   FunctionDecl   text = name, params, kids[0] = Block body
//   FunctionExpr   text = name (may be empty), params, kids[0] = Block body
//   VarDecl        text = "var" | "let" | "const", kids = Declarators
//   Declarator     text = binding name, kids = [init] or []
//   Block          kids = statements
//   If             kids = [test, consequent, alternate?]
//   While          kids = [test, body]
//   DoWhile        kids = [body, test]
//   For            kids = [init?, test?, update?, body]
//   Switch         kids = [discriminant, Case...]
//   Case           kids = [test? (nullptr for default), statements...]
//   Return         kids = [] or [argument]
//   ExprStmt       kids = [expression]
//   Assign         text = operator, kids = [target, value]
//   Conditional    kids = [test, consequent, alternate]
//   Binary         text = operator, kids = [left, right]
//   Unary          text = operator, kids = [argument]
//   Call, New      kids = [callee, arguments...]
//   Member         computed ? kids = [object, property] : text = name, kids = [object]
//   Identifier     text = name
//   Literal        literal, number / text / boolean
//   ArrayLiteral   kids = elements
//   ObjectLiteral  keys[i] names the property whose value is kids[i]
struct Node {
  NodeKind kind;
  SourceSpan span;
  std::string text;
  std::vector<NodePtr> kids;
  std::vector<std::string> params;  // FunctionDecl / FunctionExpr
  std::vector<std::string> keys;    // ObjectLiteral
  LiteralType literal = LiteralType::Null;
  double number = 0;
  bool boolean = false;
  bool computed = false;  // Member

  // Program-level printing flags set by layout transforms.
  bool compact = false;
  bool requires_compact = false;

  explicit Node(NodeKind k, SourceSpan s = {}) : kind(k), span(s) {}

  Node* kid(std::size_t i) const { return i < kids.size() ? kids[i].get() : nullptr; }
  bool is(NodeKind k) const { return kind == k; }
  bool is_string() const { return kind == NodeKind::Literal && literal == LiteralType::String; }
  bool is_number() const { return kind == NodeKind::Literal && literal == LiteralType::Number; }

  NodePtr clone() const;
};

bool is_statement(NodeKind kind);
bool is_function(NodeKind kind);

/// Structural equality: ignores spans, trivia and program printing flags.
bool structural_eq(const Node& a, const Node& b);

// Construction helpers used by the parser and by transforms.
NodePtr make(NodeKind kind, SourceSpan span = {});
NodePtr make_ident(std::string name, SourceSpan span = {});
NodePtr make_number(double value, SourceSpan span = {});
NodePtr make_string(std::string value, SourceSpan span = {});
NodePtr make_bool(bool value, SourceSpan span = {});
NodePtr make_binary(std::string op, NodePtr left, NodePtr right);
NodePtr make_unary(std::string op, NodePtr arg);
NodePtr make_assign(std::string op, NodePtr target, NodePtr value);
NodePtr make_call(NodePtr callee, std::vector<NodePtr> args);
NodePtr make_member(NodePtr object, std::string name);
NodePtr make_index(NodePtr object, NodePtr property);
NodePtr make_expr_stmt(NodePtr expr);
NodePtr make_block(std::vector<NodePtr> stmts);
NodePtr make_var(std::string keyword, std::string name, NodePtr init);

/// Pre-order visit of every node. The callback returns false to skip the
/// node's children.
template <typename F>
void walk(const Node& node, F&& fn) {
  if (!fn(node)) return;
  for (const auto& k : node.kids)
    if (k) walk(*k, fn);
}

template <typename F>
void walk_mut(Node& node, F&& fn) {
  if (!fn(node)) return;
  for (auto& k : node.kids)
    if (k) walk_mut(*k, fn);
}

/// Names bound or referenced anywhere in the tree (identifiers, declarators,
/// function names, parameters, property names).
std::vector<std::string> collect_names(const Node& root);

}  // namespace vdl::js
