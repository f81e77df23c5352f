#include <algorithm>

#include "vdl/scan/scan.hpp"

namespace vdl::scan {

using js::Node;
using js::NodeKind;

bool Cfg::has_edge(int from, int to) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(from, to)) != edges.end();
}

std::vector<int> Cfg::successors(int id) const {
  std::vector<int> out;
  for (auto [a, b] : edges)
    if (a == id) out.push_back(b);
  return out;
}

std::vector<bool> Cfg::reachable() const {
  std::vector<bool> seen(nodes.size(), false);
  std::vector<int> stack{kEntry};
  seen[kEntry] = true;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    for (int s : successors(n))
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = true;
        stack.push_back(s);
      }
  }
  return seen;
}

namespace {

class Builder {
 public:
  Cfg run(const Node& fn) {
    cfg_.nodes.push_back({Cfg::kEntry, {}});
    cfg_.nodes.push_back({Cfg::kExit, {}});
    cur_ = fresh();
    edge(Cfg::kEntry, cur_);
    const auto& stmts = fn.is(NodeKind::Program) ? fn.kids : fn.kids[0]->kids;
    list(stmts, 0);
    if (cur_ >= 0) edge(cur_, Cfg::kExit);
    return std::move(cfg_);
  }

 private:
  int fresh() {
    int id = static_cast<int>(cfg_.nodes.size());
    cfg_.nodes.push_back({id, {}});
    return id;
  }

  void edge(int a, int b) {
    if (a >= 0 && !cfg_.has_edge(a, b)) cfg_.edges.emplace_back(a, b);
  }

  // Current block, opening an unreachable one after a jump.
  int here() {
    if (cur_ < 0) cur_ = fresh();
    return cur_;
  }

  void place(const Node& s) { cfg_.nodes[static_cast<std::size_t>(here())].stmts.push_back(&s); }

  // A fresh block when the current one already holds statements.
  int header() {
    if (cur_ >= 0 && cfg_.nodes[static_cast<std::size_t>(cur_)].stmts.empty()) return cur_;
    int h = fresh();
    edge(cur_, h);
    return h;
  }

  void list(const std::vector<js::NodePtr>& stmts, std::size_t from) {
    for (std::size_t i = from; i < stmts.size(); ++i) stmt(*stmts[i]);
  }

  void body(const Node& s) {
    if (s.is(NodeKind::Block)) list(s.kids, 0);
    else stmt(s);
  }

  void stmt(const Node& s) {
    switch (s.kind) {
      case NodeKind::Block:
        list(s.kids, 0);
        return;
      case NodeKind::If: {
        place(s);
        int cond = cur_;
        int join = -1;
        cur_ = fresh();
        edge(cond, cur_);
        body(*s.kids[1]);
        int then_end = cur_;
        int else_end = cond;
        if (s.kid(2)) {
          cur_ = fresh();
          edge(cond, cur_);
          body(*s.kids[2]);
          else_end = cur_;
        }
        join = fresh();
        edge(then_end, join);
        edge(else_end, join);
        cur_ = join;
        return;
      }
      case NodeKind::While:
      case NodeKind::For: {
        if (s.is(NodeKind::For)) {
          // the initializer runs once, before the loop header
          place(s);
        }
        int head = header();
        if (s.is(NodeKind::While)) {
          cur_ = head;
          place(s);
        }
        int after = fresh();
        loops_.push_back({after, head});
        cur_ = fresh();
        edge(head, cur_);
        edge(head, after);
        body(*s.kids.back());
        edge(cur_, head);
        loops_.pop_back();
        cur_ = after;
        return;
      }
      case NodeKind::DoWhile: {
        int entry = header();
        int cond = fresh();
        int after = fresh();
        loops_.push_back({after, cond});
        cur_ = entry;
        body(*s.kids[0]);
        edge(cur_, cond);
        loops_.pop_back();
        cfg_.nodes[static_cast<std::size_t>(cond)].stmts.push_back(&s);
        edge(cond, entry);
        edge(cond, after);
        cur_ = after;
        return;
      }
      case NodeKind::Switch: {
        place(s);
        int disc = cur_;
        int after = fresh();
        loops_.push_back({after, -1});
        bool has_default = false;
        int prev_end = -1;
        for (std::size_t i = 1; i < s.kids.size(); ++i) {
          const Node& c = *s.kids[i];
          if (!c.kid(0)) has_default = true;
          int block = fresh();
          edge(disc, block);
          edge(prev_end, block);
          cur_ = block;
          list(c.kids, 1);
          prev_end = cur_;
        }
        edge(prev_end, after);
        if (!has_default) edge(disc, after);
        loops_.pop_back();
        cur_ = after;
        return;
      }
      case NodeKind::Return:
        place(s);
        edge(cur_, Cfg::kExit);
        cur_ = -1;
        return;
      case NodeKind::Break:
        place(s);
        if (!loops_.empty()) edge(cur_, loops_.back().break_to);
        cur_ = -1;
        return;
      case NodeKind::Continue: {
        place(s);
        for (auto it = loops_.rbegin(); it != loops_.rend(); ++it)
          if (it->continue_to >= 0) {
            edge(cur_, it->continue_to);
            break;
          }
        cur_ = -1;
        return;
      }
      default:
        place(s);
        return;
    }
  }

  struct Loop {
    int break_to;
    int continue_to;  // -1 for switch
  };

  Cfg cfg_;
  int cur_ = -1;
  std::vector<Loop> loops_;
};

}  // namespace

Cfg build_cfg(const Node& fn) { return Builder().run(fn); }

}  // namespace vdl::scan
