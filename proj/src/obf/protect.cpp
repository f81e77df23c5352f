#include "vdl/obf/names.hpp"
#include "vdl/obf/obfuscate.hpp"

namespace vdl::obf {

using js::Node;
using js::NodeKind;
using js::NodePtr;

NodePtr tf_compact(const Node& program) {
  auto out = program.clone();
  out->compact = true;
  return out;
}

NodePtr tf_debug_protection(const Node& program) {
  auto out = program.clone();
  js::walk_mut(*out, [](Node& n) {
    if (js::is_function(n.kind)) {
      auto& body = n.kids[0]->kids;
      body.insert(body.begin(), js::make(NodeKind::DebuggerStmt, n.kids[0]->span));
    }
    return true;
  });
  out->kids.insert(out->kids.begin(), js::make(NodeKind::DebuggerStmt, out->span));
  return out;
}

NodePtr tf_self_defending(const Node& program, Rng& rng, bool cmp_follows) {
  if (!cmp_follows) throw TransformError(Technique::SD, "self defending requires compact output", program.span);
  auto out = js::make(NodeKind::Program, program.span);
  NameGen names(program, rng);
  const std::string guard = names.fresh();

  auto fn = js::make(NodeKind::FunctionDecl, program.span);
  fn->text = guard;
  std::vector<NodePtr> body;
  for (const auto& s : program.kids) body.push_back(s->clone());
  fn->kids.push_back(js::make_block(std::move(body)));

  std::vector<NodePtr> pattern;
  pattern.push_back(js::make_string(kSelfDefendPattern));
  auto regex = js::make_call(js::make_ident("RegExp"), std::move(pattern));
  std::vector<NodePtr> text_args;
  text_args.push_back(js::make_call(js::make_ident("selfText"), {}));
  auto test = js::make_call(js::make_member(std::move(regex), "test"), std::move(text_args));

  std::vector<NodePtr> run;
  run.push_back(js::make_expr_stmt(js::make_call(js::make_ident(guard), {})));
  auto check = js::make(NodeKind::If);
  check->kids.push_back(std::move(test));
  check->kids.push_back(js::make_block(std::move(run)));

  out->kids.push_back(std::move(fn));
  out->kids.push_back(std::move(check));
  out->compact = program.compact;
  out->requires_compact = true;
  return out;
}

}  // namespace vdl::obf
