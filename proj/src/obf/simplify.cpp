#include "vdl/obf/obfuscate.hpp"

namespace vdl::obf {

using js::Node;
using js::NodeKind;
using js::NodePtr;

namespace {

// Unwraps `{ s; }` to `s`; returns nullptr for anything else.
Node* single_stmt(Node* n) {
  if (!n) return nullptr;
  if (n->is(NodeKind::Block)) return n->kids.size() == 1 ? n->kids[0].get() : nullptr;
  return n;
}

bool simple_target(const Node& n) {
  if (n.is(NodeKind::Identifier)) return true;
  return n.is(NodeKind::Member) && !n.computed && simple_target(*n.kids[0]);
}

Node* plain_assign(Node* s) {
  if (!s || !s->is(NodeKind::ExprStmt)) return nullptr;
  Node* e = s->kids[0].get();
  if (!e->is(NodeKind::Assign) || e->text != "=") return nullptr;
  return simple_target(*e->kids[0]) ? e : nullptr;
}

NodePtr conditional(NodePtr test, NodePtr a, NodePtr b) {
  auto c = js::make(NodeKind::Conditional, test->span);
  c->kids.push_back(std::move(test));
  c->kids.push_back(std::move(a));
  c->kids.push_back(std::move(b));
  return c;
}

NodePtr rewrite_if(NodePtr stmt) {
  if (!stmt->is(NodeKind::If) || !stmt->kid(2)) return stmt;
  Node* then_s = single_stmt(stmt->kid(1));
  Node* else_s = single_stmt(stmt->kid(2));
  if (!then_s || !else_s) return stmt;
  Node* a = plain_assign(then_s);
  Node* b = plain_assign(else_s);
  if (a && b && js::structural_eq(*a->kids[0], *b->kids[0])) {
    auto value = conditional(std::move(stmt->kids[0]), std::move(a->kids[1]), std::move(b->kids[1]));
    auto out = js::make_expr_stmt(js::make_assign("=", std::move(a->kids[0]), std::move(value)));
    out->span = stmt->span;
    out->kids[0]->span = stmt->span;
    return out;
  }
  if (then_s->is(NodeKind::Return) && else_s->is(NodeKind::Return) && then_s->kid(0) && else_s->kid(0)) {
    auto out = js::make(NodeKind::Return, stmt->span);
    out->kids.push_back(conditional(std::move(stmt->kids[0]), std::move(then_s->kids[0]),
                                    std::move(else_s->kids[0])));
    return out;
  }
  return stmt;
}

void simplify_list(std::vector<NodePtr>& stmts, std::size_t first);

void visit(Node& n) {
  for (auto& k : n.kids)
    if (k) visit(*k);
  switch (n.kind) {
    case NodeKind::Program:
    case NodeKind::Block:
      simplify_list(n.kids, 0);
      break;
    case NodeKind::Case:
      simplify_list(n.kids, 1);
      break;
    default:
      break;
  }
  // Single-statement bodies of if/while/for are not lists but may still hold an if.
  if (n.is(NodeKind::If) || n.is(NodeKind::While) || n.is(NodeKind::For) || n.is(NodeKind::DoWhile)) {
    for (auto& k : n.kids)
      if (k && k->is(NodeKind::If)) k = rewrite_if(std::move(k));
  }
}

void simplify_list(std::vector<NodePtr>& stmts, std::size_t first) {
  std::vector<NodePtr> out(std::make_move_iterator(stmts.begin()),
                           std::make_move_iterator(stmts.begin() + static_cast<long>(first)));
  for (std::size_t i = first; i < stmts.size(); ++i) {
    NodePtr s = rewrite_if(std::move(stmts[i]));
    if (s->is(NodeKind::VarDecl) && out.size() > first && out.back()->is(NodeKind::VarDecl) &&
        out.back()->text == s->text) {
      Node& prev = *out.back();
      prev.span = js::merge(prev.span, s->span);
      for (auto& d : s->kids) prev.kids.push_back(std::move(d));
      continue;
    }
    out.push_back(std::move(s));
  }
  stmts = std::move(out);
}

}  // namespace

NodePtr tf_simplify(const Node& program) {
  auto out = program.clone();
  visit(*out);
  return out;
}

}  // namespace vdl::obf
