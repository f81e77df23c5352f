#include "vdl/js/ast.hpp"

#include <set>
#include <tuple>

namespace vdl::js {

bool SourceSpan::encloses(const SourceSpan& o) const {
  auto before = [](int l1, int c1, int l2, int c2) { return std::tie(l1, c1) <= std::tie(l2, c2); };
  return before(start_line, start_col, o.start_line, o.start_col) &&
         before(o.end_line, o.end_col, end_line, end_col);
}

SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan s = a;
  if (std::tie(b.start_line, b.start_col) < std::tie(s.start_line, s.start_col)) {
    s.start_line = b.start_line;
    s.start_col = b.start_col;
  }
  if (std::tie(b.end_line, b.end_col) > std::tie(s.end_line, s.end_col)) {
    s.end_line = b.end_line;
    s.end_col = b.end_col;
  }
  return s;
}

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Program: return "Program";
    case NodeKind::FunctionDecl: return "FunctionDecl";
    case NodeKind::VarDecl: return "VarDecl";
    case NodeKind::Declarator: return "Declarator";
    case NodeKind::Block: return "Block";
    case NodeKind::If: return "If";
    case NodeKind::While: return "While";
    case NodeKind::DoWhile: return "DoWhile";
    case NodeKind::For: return "For";
    case NodeKind::Switch: return "Switch";
    case NodeKind::Case: return "Case";
    case NodeKind::Return: return "Return";
    case NodeKind::Break: return "Break";
    case NodeKind::Continue: return "Continue";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::EmptyStmt: return "EmptyStmt";
    case NodeKind::DebuggerStmt: return "DebuggerStmt";
    case NodeKind::Assign: return "Assign";
    case NodeKind::Conditional: return "Conditional";
    case NodeKind::Binary: return "Binary";
    case NodeKind::Unary: return "Unary";
    case NodeKind::Call: return "Call";
    case NodeKind::New: return "New";
    case NodeKind::Member: return "Member";
    case NodeKind::Identifier: return "Identifier";
    case NodeKind::Literal: return "Literal";
    case NodeKind::ArrayLiteral: return "ArrayLiteral";
    case NodeKind::ObjectLiteral: return "ObjectLiteral";
    case NodeKind::FunctionExpr: return "FunctionExpr";
  }
  return "?";
}

bool is_statement(NodeKind kind) {
  switch (kind) {
    case NodeKind::FunctionDecl:
    case NodeKind::VarDecl:
    case NodeKind::Block:
    case NodeKind::If:
    case NodeKind::While:
    case NodeKind::DoWhile:
    case NodeKind::For:
    case NodeKind::Switch:
    case NodeKind::Return:
    case NodeKind::Break:
    case NodeKind::Continue:
    case NodeKind::ExprStmt:
    case NodeKind::EmptyStmt:
    case NodeKind::DebuggerStmt:
      return true;
    default:
      return false;
  }
}

bool is_function(NodeKind kind) {
  return kind == NodeKind::FunctionDecl || kind == NodeKind::FunctionExpr;
}

NodePtr Node::clone() const {
  auto n = std::make_unique<Node>(kind, span);
  n->text = text;
  n->params = params;
  n->keys = keys;
  n->literal = literal;
  n->number = number;
  n->boolean = boolean;
  n->computed = computed;
  n->compact = compact;
  n->requires_compact = requires_compact;
  n->kids.reserve(kids.size());
  for (const auto& k : kids) n->kids.push_back(k ? k->clone() : nullptr);
  return n;
}

bool structural_eq(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.params != b.params || a.keys != b.keys ||
      a.computed != b.computed || a.kids.size() != b.kids.size())
    return false;
  if (a.kind == NodeKind::Literal) {
    if (a.literal != b.literal) return false;
    switch (a.literal) {
      case LiteralType::Number:
        // Bitwise identity would distinguish NaN payloads; literals are never NaN.
        if (a.number != b.number) return false;
        break;
      case LiteralType::Boolean:
        if (a.boolean != b.boolean) return false;
        break;
      default:
        break;
    }
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    const Node* x = a.kids[i].get();
    const Node* y = b.kids[i].get();
    if (!x || !y) {
      if (x != y) return false;
      continue;
    }
    if (!structural_eq(*x, *y)) return false;
  }
  return true;
}

NodePtr make(NodeKind kind, SourceSpan span) { return std::make_unique<Node>(kind, span); }

NodePtr make_ident(std::string name, SourceSpan span) {
  auto n = make(NodeKind::Identifier, span);
  n->text = std::move(name);
  return n;
}

NodePtr make_number(double value, SourceSpan span) {
  auto n = make(NodeKind::Literal, span);
  n->literal = LiteralType::Number;
  n->number = value;
  return n;
}

NodePtr make_string(std::string value, SourceSpan span) {
  auto n = make(NodeKind::Literal, span);
  n->literal = LiteralType::String;
  n->text = std::move(value);
  return n;
}

NodePtr make_bool(bool value, SourceSpan span) {
  auto n = make(NodeKind::Literal, span);
  n->literal = LiteralType::Boolean;
  n->boolean = value;
  return n;
}

NodePtr make_binary(std::string op, NodePtr left, NodePtr right) {
  auto n = make(NodeKind::Binary, merge(left->span, right->span));
  n->text = std::move(op);
  n->kids.push_back(std::move(left));
  n->kids.push_back(std::move(right));
  return n;
}

NodePtr make_unary(std::string op, NodePtr arg) {
  auto n = make(NodeKind::Unary, arg->span);
  n->text = std::move(op);
  n->kids.push_back(std::move(arg));
  return n;
}

NodePtr make_assign(std::string op, NodePtr target, NodePtr value) {
  auto n = make(NodeKind::Assign, merge(target->span, value->span));
  n->text = std::move(op);
  n->kids.push_back(std::move(target));
  n->kids.push_back(std::move(value));
  return n;
}

NodePtr make_call(NodePtr callee, std::vector<NodePtr> args) {
  auto n = make(NodeKind::Call, callee->span);
  n->kids.push_back(std::move(callee));
  for (auto& a : args) {
    n->span = merge(n->span, a->span);
    n->kids.push_back(std::move(a));
  }
  return n;
}

NodePtr make_member(NodePtr object, std::string name) {
  auto n = make(NodeKind::Member, object->span);
  n->text = std::move(name);
  n->kids.push_back(std::move(object));
  return n;
}

NodePtr make_index(NodePtr object, NodePtr property) {
  auto n = make(NodeKind::Member, merge(object->span, property->span));
  n->computed = true;
  n->kids.push_back(std::move(object));
  n->kids.push_back(std::move(property));
  return n;
}

NodePtr make_expr_stmt(NodePtr expr) {
  auto n = make(NodeKind::ExprStmt, expr->span);
  n->kids.push_back(std::move(expr));
  return n;
}

NodePtr make_block(std::vector<NodePtr> stmts) {
  auto n = make(NodeKind::Block);
  for (auto& s : stmts) n->kids.push_back(std::move(s));
  return n;
}

NodePtr make_var(std::string keyword, std::string name, NodePtr init) {
  auto d = make(NodeKind::Declarator);
  d->text = std::move(name);
  if (init) d->kids.push_back(std::move(init));
  auto v = make(NodeKind::VarDecl);
  v->text = std::move(keyword);
  v->kids.push_back(std::move(d));
  return v;
}

std::vector<std::string> collect_names(const Node& root) {
  std::set<std::string> names;
  walk(root, [&](const Node& n) {
    switch (n.kind) {
      case NodeKind::Identifier:
      case NodeKind::Declarator:
      case NodeKind::FunctionDecl:
      case NodeKind::FunctionExpr:
      case NodeKind::Member:
        if (!n.text.empty()) names.insert(n.text);
        break;
      default:
        break;
    }
    for (const auto& p : n.params) names.insert(p);
    for (const auto& k : n.keys) names.insert(k);
    return true;
  });
  return {names.begin(), names.end()};
}

}  // namespace vdl::js
