#include "regex.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vdl::js::detail {

struct Regex::Node {
  enum class Kind { Char, Any, Class, Seq, Alt, Repeat, Bol, Eol } kind;
  char16_t ch = 0;
  // Class: inclusive ranges, negated flag.
  std::vector<std::pair<char16_t, char16_t>> ranges;
  bool negated = false;
  std::vector<std::unique_ptr<Node>> kids;
  int min = 0;
  int max = -1;  // -1 = unbounded

  explicit Node(Kind k) : kind(k) {}

  bool class_match(char16_t c) const {
    bool in = false;
    for (auto [lo, hi] : ranges)
      if (c >= lo && c <= hi) {
        in = true;
        break;
      }
    return in != negated;
  }
};

namespace {

using NodePtr = std::unique_ptr<Regex::Node>;
using Kind = Regex::Node::Kind;

bool line_terminator(char16_t c) { return c == u'\n' || c == u'\r' || c == 0x2028 || c == 0x2029; }

void add_digit(std::vector<std::pair<char16_t, char16_t>>& r) { r.emplace_back(u'0', u'9'); }
void add_word(std::vector<std::pair<char16_t, char16_t>>& r) {
  r.emplace_back(u'a', u'z');
  r.emplace_back(u'A', u'Z');
  r.emplace_back(u'0', u'9');
  r.emplace_back(u'_', u'_');
}
void add_space(std::vector<std::pair<char16_t, char16_t>>& r) {
  r.emplace_back(u'\t', u'\r');
  r.emplace_back(u' ', u' ');
  r.emplace_back(0xA0, 0xA0);
  r.emplace_back(0x2028, 0x2029);
  r.emplace_back(0xFEFF, 0xFEFF);
}

// Complement of a range set, for \D \W \S inside classes.
std::vector<std::pair<char16_t, char16_t>> complement(std::vector<std::pair<char16_t, char16_t>> r) {
  std::sort(r.begin(), r.end());
  std::vector<std::pair<char16_t, char16_t>> out;
  char32_t next = 0;
  for (auto [lo, hi] : r) {
    if (lo > next) out.emplace_back(static_cast<char16_t>(next), static_cast<char16_t>(lo - 1));
    if (static_cast<char32_t>(hi) + 1 > next) next = static_cast<char32_t>(hi) + 1;
  }
  if (next <= 0xFFFF) out.emplace_back(static_cast<char16_t>(next), 0xFFFF);
  return out;
}

class Compiler {
 public:
  explicit Compiler(std::u16string_view p) : p_(p) {}

  NodePtr run() {
    auto n = alternation();
    if (i_ != p_.size()) fail("unbalanced ')'");
    return n;
  }

 private:
  [[noreturn]] void fail(const char* msg) const { throw std::invalid_argument(msg); }
  bool done() const { return i_ >= p_.size(); }
  char16_t peek() const { return p_[i_]; }

  NodePtr alternation() {
    auto first = sequence();
    if (done() || peek() != u'|') return first;
    auto alt = std::make_unique<Regex::Node>(Kind::Alt);
    alt->kids.push_back(std::move(first));
    while (!done() && peek() == u'|') {
      ++i_;
      alt->kids.push_back(sequence());
    }
    return alt;
  }

  NodePtr sequence() {
    auto seq = std::make_unique<Regex::Node>(Kind::Seq);
    while (!done() && peek() != u'|' && peek() != u')') {
      auto atom_node = atom();
      seq->kids.push_back(quantified(std::move(atom_node)));
    }
    return seq;
  }

  NodePtr quantified(NodePtr atom_node) {
    while (!done()) {
      char16_t c = peek();
      int min, max;
      if (c == u'*') {
        min = 0;
        max = -1;
      } else if (c == u'+') {
        min = 1;
        max = -1;
      } else if (c == u'?') {
        min = 0;
        max = 1;
      } else {
        break;
      }
      ++i_;
      if (atom_node->kind == Kind::Bol || atom_node->kind == Kind::Eol) fail("nothing to repeat");
      auto rep = std::make_unique<Regex::Node>(Kind::Repeat);
      rep->min = min;
      rep->max = max;
      rep->kids.push_back(std::move(atom_node));
      atom_node = std::move(rep);
    }
    return atom_node;
  }

  NodePtr atom() {
    char16_t c = p_[i_++];
    switch (c) {
      case u'(': {
        if (i_ + 1 < p_.size() && p_[i_] == u'?' && p_[i_ + 1] == u':') i_ += 2;
        auto inner = alternation();
        if (done() || peek() != u')') fail("missing ')'");
        ++i_;
        return inner;
      }
      case u'.':
        return std::make_unique<Regex::Node>(Kind::Any);
      case u'^':
        return std::make_unique<Regex::Node>(Kind::Bol);
      case u'$':
        return std::make_unique<Regex::Node>(Kind::Eol);
      case u'[':
        return char_class();
      case u'\\':
        return escape();
      case u'*':
      case u'+':
      case u'?':
        fail("nothing to repeat");
      default: {
        auto n = std::make_unique<Regex::Node>(Kind::Char);
        n->ch = c;
        return n;
      }
    }
  }

  // Returns true and fills ranges for class escapes (\d etc.); otherwise sets ch.
  bool escape_into(std::vector<std::pair<char16_t, char16_t>>& ranges, char16_t& ch) {
    if (done()) fail("trailing backslash");
    char16_t e = p_[i_++];
    std::vector<std::pair<char16_t, char16_t>> r;
    switch (e) {
      case u'd': add_digit(ranges); return true;
      case u'w': add_word(ranges); return true;
      case u's': add_space(ranges); return true;
      case u'D': add_digit(r); for (auto x : complement(r)) ranges.push_back(x); return true;
      case u'W': add_word(r); for (auto x : complement(r)) ranges.push_back(x); return true;
      case u'S': add_space(r); for (auto x : complement(r)) ranges.push_back(x); return true;
      case u'n': ch = u'\n'; return false;
      case u't': ch = u'\t'; return false;
      case u'r': ch = u'\r'; return false;
      case u'f': ch = u'\f'; return false;
      case u'v': ch = u'\v'; return false;
      default: ch = e; return false;
    }
  }

  NodePtr escape() {
    std::vector<std::pair<char16_t, char16_t>> ranges;
    char16_t ch = 0;
    if (escape_into(ranges, ch)) {
      auto n = std::make_unique<Regex::Node>(Kind::Class);
      n->ranges = std::move(ranges);
      return n;
    }
    auto n = std::make_unique<Regex::Node>(Kind::Char);
    n->ch = ch;
    return n;
  }

  NodePtr char_class() {
    auto n = std::make_unique<Regex::Node>(Kind::Class);
    if (!done() && peek() == u'^') {
      n->negated = true;
      ++i_;
    }
    bool first = true;
    for (;;) {
      if (done()) fail("missing ']'");
      char16_t c = p_[i_++];
      if (c == u']' && !first) break;
      first = false;
      char16_t lo = c;
      if (c == u'\\') {
        if (escape_into(n->ranges, lo)) continue;
      }
      if (i_ + 1 < p_.size() && p_[i_] == u'-' && p_[i_ + 1] != u']') {
        ++i_;
        char16_t hi = p_[i_++];
        if (hi == u'\\') {
          std::vector<std::pair<char16_t, char16_t>> dummy;
          if (escape_into(dummy, hi)) fail("class escape in range");
        }
        if (hi < lo) fail("range out of order");
        n->ranges.emplace_back(lo, hi);
      } else {
        n->ranges.emplace_back(lo, lo);
      }
    }
    return n;
  }

  std::u16string_view p_;
  std::size_t i_ = 0;
};

class Matcher {
 public:
  Matcher(std::u16string_view in, const std::function<void()>& tick) : in_(in), tick_(tick) {}

  using Cont = std::function<bool(std::size_t)>;

  bool match(const Regex::Node& n, std::size_t pos, const Cont& k) {
    tick_();
    switch (n.kind) {
      case Kind::Char:
        return pos < in_.size() && in_[pos] == n.ch && k(pos + 1);
      case Kind::Any:
        return pos < in_.size() && !line_terminator(in_[pos]) && k(pos + 1);
      case Kind::Class:
        return pos < in_.size() && n.class_match(in_[pos]) && k(pos + 1);
      case Kind::Bol:
        return pos == 0 && k(pos);
      case Kind::Eol:
        return pos == in_.size() && k(pos);
      case Kind::Alt:
        for (const auto& alt : n.kids)
          if (match(*alt, pos, k)) return true;
        return false;
      case Kind::Seq:
        return seq(n, 0, pos, k);
      case Kind::Repeat:
        return repeat(n, 0, pos, k);
    }
    return false;
  }

 private:
  bool seq(const Regex::Node& n, std::size_t idx, std::size_t pos, const Cont& k) {
    if (idx == n.kids.size()) return k(pos);
    return match(*n.kids[idx], pos, [&](std::size_t p) { return seq(n, idx + 1, p, k); });
  }

  bool repeat(const Regex::Node& n, int count, std::size_t pos, const Cont& k) {
    if (n.max < 0 || count < n.max) {
      bool ok = match(*n.kids[0], pos, [&](std::size_t p) {
        if (p == pos) return false;  // empty iteration
        return repeat(n, count + 1, p, k);
      });
      if (ok) return true;
    }
    return count >= n.min && k(pos);
  }

  std::u16string_view in_;
  const std::function<void()>& tick_;
};

}  // namespace

Regex::Regex(std::u16string_view pattern) : source_(pattern), root_(Compiler(pattern).run()) {}
Regex::~Regex() = default;
Regex::Regex(Regex&&) noexcept = default;
Regex& Regex::operator=(Regex&&) noexcept = default;

bool Regex::test(std::u16string_view input, const std::function<void()>& tick) const {
  Matcher m(input, tick);
  for (std::size_t start = 0; start <= input.size(); ++start) {
    if (m.match(*root_, start, [](std::size_t) { return true; })) return true;
  }
  return false;
}

}  // namespace vdl::js::detail
