#include <map>

#include "vdl/scan/scan.hpp"

namespace vdl::scan {

using js::Node;
using js::NodeKind;
using js::SourceSpan;

namespace {

using Path = std::vector<SourceSpan>;

bool source_matches(const std::vector<std::string>& path, const std::string& pattern) {
  std::string joined = join_path(path);
  if (pattern.size() > 2 && pattern.compare(pattern.size() - 2, 2, ".*") == 0) {
    std::string prefix = pattern.substr(0, pattern.size() - 2);
    return joined == prefix || joined.rfind(prefix + ".", 0) == 0;
  }
  return joined == pattern;
}

class Tracker {
 public:
  Tracker(const Rule& rule, std::vector<Finding>& out) : rule_(rule), out_(out) {}

  void run(const Node& unit) {
    const auto& stmts = unit.is(NodeKind::Program) ? unit.kids : unit.kids[0]->kids;
    for (const auto& s : stmts) stmt(*s);
  }

 private:
  // Path of the taint carried by `e`, or nullopt when `e` is clean.
  std::optional<Path> taint_of(const Node& e) {
    switch (e.kind) {
      case NodeKind::Identifier: {
        auto it = tainted_.find(e.text);
        if (it == tainted_.end()) return std::nullopt;
        return it->second;
      }
      case NodeKind::Member: {
        if (auto path = member_path(e))
          for (const auto& src : rule_.taint.sources)
            if (source_matches(*path, src)) return Path{e.span};
        if (e.computed && !e.kids[1]->is_string()) return std::nullopt;
        return taint_of(*e.kids[0]);
      }
      case NodeKind::Call:
      case NodeKind::New:
      case NodeKind::FunctionExpr:
      case NodeKind::Literal:
        return std::nullopt;
      case NodeKind::Assign:
        return taint_of(*e.kids[1]);
      default:
        for (const auto& k : e.kids)
          if (k)
            if (auto p = taint_of(*k)) return p;
        return std::nullopt;
    }
  }

  // Visits calls in evaluation order, reporting tainted sink arguments.
  void sinks(const Node& e) {
    if (e.is(NodeKind::FunctionExpr)) return;
    for (const auto& k : e.kids)
      if (k) sinks(*k);
    if (e.is(NodeKind::Assign)) assign(e);
    if (!e.is(NodeKind::Call)) return;
    const Node& callee = *e.kids[0];
    for (const auto& sink : rule_.taint.sinks) {
      if (!callee_matches(callee, sink.callee)) continue;
      const Node* arg = e.kid(static_cast<std::size_t>(sink.arg) + 1);
      if (!arg) continue;
      if (auto p = taint_of(*arg)) {
        Finding f;
        f.rule_id = rule_.id;
        f.severity = rule_.severity;
        f.span = e.span;
        f.message = rule_.description;
        p->push_back(e.span);
        f.taint_path = std::move(*p);
        out_.push_back(std::move(f));
        break;
      }
    }
  }

  bool sanitized(const Node& e) const {
    if (!e.is(NodeKind::Call)) return false;
    for (const auto& s : rule_.taint.sanitizers)
      if (callee_matches(*e.kids[0], s)) return true;
    return false;
  }

  void bind(const std::string& name, const Node& value, const SourceSpan& at, bool keep_old) {
    std::optional<Path> p = sanitized(value) ? std::nullopt : taint_of(value);
    if (!p && keep_old && tainted_.count(name)) p = tainted_[name];
    if (p) {
      p->push_back(at);
      tainted_[name] = std::move(*p);
    } else {
      tainted_.erase(name);
    }
  }

  void assign(const Node& a) {
    const Node& target = *a.kids[0];
    const Node& value = *a.kids[1];
    if (target.is(NodeKind::Identifier)) {
      bind(target.text, value, a.span, a.text != "=");
      return;
    }
    // A container holding tainted data is tainted as a whole.
    const Node* root = &target;
    while (root->is(NodeKind::Member)) root = root->kids[0].get();
    if (root->is(NodeKind::Identifier) && !sanitized(value))
      if (auto p = taint_of(value)) {
        p->push_back(a.span);
        tainted_[root->text] = std::move(*p);
      }
  }

  void stmt(const Node& s) {
    switch (s.kind) {
      case NodeKind::FunctionDecl:
        return;
      case NodeKind::VarDecl:
        for (const auto& d : s.kids) {
          if (d->kids.empty()) {
            tainted_.erase(d->text);
            continue;
          }
          sinks(*d->kids[0]);
          bind(d->text, *d->kids[0], d->span, false);
        }
        return;
      case NodeKind::ExprStmt:
      case NodeKind::Return:
        for (const auto& k : s.kids) sinks(*k);
        return;
      default:
        // Compound statements: expressions and nested statements once, in source order.
        for (const auto& k : s.kids) {
          if (!k) continue;
          if (js::is_statement(k->kind) || k->is(NodeKind::Case)) stmt(*k);
          else sinks(*k);
        }
        return;
    }
  }

  const Rule& rule_;
  std::vector<Finding>& out_;
  std::map<std::string, Path> tainted_;
};

}  // namespace

std::vector<Finding> taint_analyze(const Node& unit, const Rule& rule) {
  std::vector<Finding> out;
  if (rule.kind != RuleKind::Taint) return out;
  Tracker(rule, out).run(unit);
  return out;
}

std::vector<Finding> taint_program(const Rule& rule, const Node& program) {
  std::vector<Finding> out;
  auto add = [&](const Node& unit) {
    auto f = taint_analyze(unit, rule);
    out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  };
  add(program);
  js::walk(program, [&](const Node& n) {
    if (js::is_function(n.kind)) add(n);
    return true;
  });
  return out;
}

}  // namespace vdl::scan
