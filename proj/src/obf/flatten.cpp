#include <numeric>
#include <set>

#include "vdl/obf/names.hpp"
#include "vdl/obf/obfuscate.hpp"

namespace vdl::obf {

using js::Node;
using js::NodeKind;
using js::NodePtr;

namespace {

class Flattener {
 public:
  Flattener(const Node& program, Rng& rng, const ObfuscationParams& params)
      : rng_(rng), names_(program, rng), params_(params) {}

  void visit(Node& n) {
    for (auto& k : n.kids)
      if (k) visit(*k);
    if (js::is_function(n.kind)) flatten_body(*n.kids[0]);
  }

 private:
  void flatten_body(Node& body) {
    std::size_t flat = 0;
    for (const auto& s : body.kids)
      if (!s->is(NodeKind::FunctionDecl)) ++flat;
    if (flat == 0 || flat < static_cast<std::size_t>(params_.cff_min_stmts)) return;
    std::vector<NodePtr> decls;
    std::vector<NodePtr> rest;
    for (auto& s : body.kids) (s->is(NodeKind::FunctionDecl) ? decls : rest).push_back(std::move(s));

    // Lexical and var bindings move to the top so every case sees them.
    std::vector<std::string> var_names, let_names;
    std::set<std::string> seen_var, seen_let;
    std::vector<std::vector<NodePtr>> groups;
    for (auto& s : rest) {
      std::vector<NodePtr> group;
      if (s->is(NodeKind::VarDecl)) {
        bool is_var = s->text == "var";
        for (auto& d : s->kids) {
          auto& names = is_var ? var_names : let_names;
          auto& seen = is_var ? seen_var : seen_let;
          if (seen.insert(d->text).second) names.push_back(d->text);
          if (!d->kids.empty()) {
            auto assign = js::make_assign("=", js::make_ident(d->text, d->span), std::move(d->kids[0]));
            assign->span = d->span;
            auto stmt = js::make_expr_stmt(std::move(assign));
            stmt->span = d->span;
            group.push_back(std::move(stmt));
          }
        }
      } else {
        group.push_back(std::move(s));
      }
      groups.push_back(std::move(group));
    }

    const std::size_t n = groups.size();
    std::set<std::int64_t> used;
    std::vector<std::int64_t> states;
    while (states.size() < n + 1) {
      std::int64_t v = rng_.range(1, 99999);
      if (used.insert(v).second) states.push_back(v);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (n >= 2) {
      do {
        rng_.shuffle(order);
      } while (std::is_sorted(order.begin(), order.end()));
    }

    const std::string dispatch = names_.fresh();
    auto sw = js::make(NodeKind::Switch);
    sw->kids.push_back(js::make_ident(dispatch));
    for (std::size_t idx : order) {
      auto c = js::make(NodeKind::Case);
      c->kids.push_back(js::make_number(static_cast<double>(states[idx])));
      for (auto& s : groups[idx]) c->kids.push_back(std::move(s));
      c->kids.push_back(js::make_expr_stmt(js::make_assign(
          "=", js::make_ident(dispatch), js::make_number(static_cast<double>(states[idx + 1])))));
      c->kids.push_back(js::make(NodeKind::Break));
      sw->kids.push_back(std::move(c));
    }
    auto loop = js::make(NodeKind::While);
    loop->kids.push_back(js::make_binary("!==", js::make_ident(dispatch),
                                         js::make_number(static_cast<double>(states[n]))));
    std::vector<NodePtr> loop_body;
    loop_body.push_back(std::move(sw));
    loop->kids.push_back(js::make_block(std::move(loop_body)));

    std::vector<NodePtr> out;
    auto declare = [&](const char* keyword, const std::vector<std::string>& names) {
      if (names.empty()) return;
      auto v = js::make(NodeKind::VarDecl);
      v->text = keyword;
      for (const auto& name : names) {
        auto d = js::make(NodeKind::Declarator);
        d->text = name;
        v->kids.push_back(std::move(d));
      }
      out.push_back(std::move(v));
    };
    declare("var", var_names);
    declare("let", let_names);
    for (auto& d : decls) out.push_back(std::move(d));
    out.push_back(js::make_var("var", dispatch, js::make_number(static_cast<double>(states[0]))));
    out.push_back(std::move(loop));
    body.kids = std::move(out);
  }

  Rng& rng_;
  NameGen names_;
  const ObfuscationParams& params_;
};

}  // namespace

NodePtr tf_flatten(const Node& program, Rng& rng, const ObfuscationParams& params) {
  auto out = program.clone();
  Flattener f(*out, rng, params);
  f.visit(*out);
  return out;
}

}  // namespace vdl::obf
