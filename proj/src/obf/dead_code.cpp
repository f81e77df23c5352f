#include "vdl/obf/names.hpp"
#include "vdl/obf/obfuscate.hpp"

namespace vdl::obf {

using js::Node;
using js::NodeKind;
using js::NodePtr;

NodePtr make_opaque_predicate(Rng& rng, bool truth) {
  const double n = static_cast<double>(rng.range(1, 10000));
  auto num = [n] { return js::make_number(n); };
  NodePtr lhs;
  double modulus = 2;
  switch (rng.below(3)) {
    case 0:  // n(7n+1) is even
      lhs = js::make_binary("+", js::make_binary("*", js::make_binary("*", js::make_number(7), num()), num()),
                            num());
      break;
    case 1:  // n(n+1) is even
      lhs = js::make_binary("+", js::make_binary("*", num(), num()), num());
      break;
    default:  // (n-1)n(n+1) is divisible by 3
      lhs = js::make_binary("-", js::make_binary("*", js::make_binary("*", num(), num()), num()), num());
      modulus = 3;
      break;
  }
  return js::make_binary(truth ? "===" : "!==", js::make_binary("%", std::move(lhs), js::make_number(modulus)),
                         js::make_number(0));
}

namespace {

class Injector {
 public:
  Injector(const Node& program, Rng& rng, const ObfuscationParams& params)
      : rng_(rng), names_(program, rng), params_(params) {}

  void visit(Node& n) {
    for (auto& k : n.kids)
      if (k) visit(*k);
    if (n.is(NodeKind::Program) || n.is(NodeKind::Block)) inject(n.kids);
  }

 private:
  NodePtr dead_block() {
    const std::string v = names_.fresh();
    std::vector<NodePtr> stmts;
    stmts.push_back(js::make_var("var", v, js::make_number(static_cast<double>(rng_.range(1, 999)))));
    const std::uint64_t extra = 1 + rng_.below(2);
    for (std::uint64_t i = 0; i < extra; ++i) {
      NodePtr value;
      if (rng_.below(2) == 0) {
        value = js::make_binary("+",
                                js::make_binary("*", js::make_ident(v),
                                                js::make_number(static_cast<double>(rng_.range(2, 97)))),
                                js::make_number(static_cast<double>(rng_.range(1, 997))));
      } else {
        value = js::make_binary("%",
                                js::make_binary("+", js::make_ident(v),
                                                js::make_number(static_cast<double>(rng_.range(1, 997)))),
                                js::make_number(static_cast<double>(rng_.range(2, 97))));
      }
      stmts.push_back(js::make_expr_stmt(js::make_assign("=", js::make_ident(v), std::move(value))));
    }
    return js::make_block(std::move(stmts));
  }

  static bool tail_wrappable(const std::vector<NodePtr>& stmts, std::size_t from) {
    for (std::size_t i = from; i < stmts.size(); ++i) {
      const Node& s = *stmts[i];
      if (s.is(NodeKind::FunctionDecl)) return false;
      if (s.is(NodeKind::VarDecl) && s.text != "var") return false;
    }
    return true;
  }

  void inject(std::vector<NodePtr>& stmts) {
    if (stmts.empty()) return;
    if (!rng_.chance(params_.dci_ratio)) return;
    const std::size_t at = static_cast<std::size_t>(rng_.below(stmts.size() + 1));
    auto guard = js::make(NodeKind::If);
    if (at < stmts.size() && tail_wrappable(stmts, at) && rng_.below(2) == 0) {
      guard->kids.push_back(make_opaque_predicate(rng_, true));
      std::vector<NodePtr> tail(std::make_move_iterator(stmts.begin() + static_cast<long>(at)),
                                std::make_move_iterator(stmts.end()));
      stmts.resize(at);
      guard->kids.push_back(js::make_block(std::move(tail)));
      guard->kids.push_back(dead_block());
      stmts.push_back(std::move(guard));
    } else {
      guard->kids.push_back(make_opaque_predicate(rng_, false));
      guard->kids.push_back(dead_block());
      stmts.insert(stmts.begin() + static_cast<long>(at), std::move(guard));
    }
  }

  Rng& rng_;
  NameGen names_;
  const ObfuscationParams& params_;
};

}  // namespace

NodePtr tf_dead_code(const Node& program, Rng& rng, const ObfuscationParams& params) {
  auto out = program.clone();
  Injector inj(*out, rng, params);
  inj.visit(*out);
  return out;
}

}  // namespace vdl::obf
