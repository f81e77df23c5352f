#include "vdl/js/printer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "vdl/js/lexer.hpp"
#include "vdl/js/unicode.hpp"

namespace vdl::js {

namespace {

constexpr int kPrecAssign = 2;
constexpr int kPrecConditional = 3;
constexpr int kPrecUnary = 15;
constexpr int kPrecPostfix = 18;
constexpr int kPrecPrimary = 20;

int binary_prec(const std::string& op) {
  if (op == "||") return 4;
  if (op == "&&") return 5;
  if (op == "==" || op == "!=" || op == "===" || op == "!==") return 9;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 10;
  if (op == "+" || op == "-") return 12;
  return 13;
}

bool negative_number(const Node& n) { return n.is_number() && std::signbit(n.number); }

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Assign: return kPrecAssign;
    case NodeKind::Conditional: return kPrecConditional;
    case NodeKind::Binary: return binary_prec(n.text);
    case NodeKind::Unary: return kPrecUnary;
    case NodeKind::Call:
    case NodeKind::New:
    case NodeKind::Member: return kPrecPostfix;
    case NodeKind::Literal: return negative_number(n) ? kPrecUnary : kPrecPrimary;
    default: return kPrecPrimary;
  }
}

bool word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '$';
}

bool call_in_chain(const Node& n) {
  if (n.is(NodeKind::Call)) return true;
  if (n.is(NodeKind::Member)) return call_in_chain(*n.kids[0]);
  return false;
}

// Leftmost primary of an expression as it appears in source.
const Node& leftmost(const Node& n) {
  switch (n.kind) {
    case NodeKind::Binary:
    case NodeKind::Assign:
    case NodeKind::Conditional:
    case NodeKind::Call:
    case NodeKind::Member:
      return leftmost(*n.kids[0]);
    default:
      return n;
  }
}

class Printer {
 public:
  explicit Printer(bool compact) : compact_(compact) {}

  std::string take() { return std::move(out_); }

  void program(const Node& p) {
    for (const auto& s : p.kids) statement(*s);
  }

  void any(const Node& n) {
    if (n.is(NodeKind::Program))
      program(n);
    else if (is_statement(n.kind) || n.is(NodeKind::Case) || n.is(NodeKind::Declarator))
      statement(n);
    else
      expr(n, 0);
  }

 private:
  void tok(std::string_view t) {
    if (t.empty()) return;
    if (!out_.empty()) {
      char last = out_.back();
      char first = t.front();
      if ((word_char(last) && word_char(first)) || (last == '+' && first == '+') ||
          (last == '-' && first == '-'))
        out_.push_back(' ');
    }
    out_.append(t);
  }
  void sp() {
    if (!compact_ && !out_.empty() && out_.back() != ' ' && out_.back() != '\n') out_.push_back(' ');
  }
  void line_start() {
    if (compact_) return;
    out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
  }
  void line_end() {
    if (!compact_) out_.push_back('\n');
  }

  // A statement on its own line(s).
  void statement(const Node& s) {
    line_start();
    statement_inline(s);
    line_end();
  }

  // Body of if/while/for: blocks stay on the header line, anything else moves
  // to an indented line of its own.
  void body(const Node& s) {
    if (s.is(NodeKind::Block)) {
      sp();
      block(s);
    } else {
      line_end();
      ++indent_;
      line_start();
      statement_inline(s);
      --indent_;
    }
  }

  void block(const Node& b) {
    tok("{");
    if (!b.kids.empty()) {
      line_end();
      ++indent_;
      for (const auto& s : b.kids) statement(*s);
      --indent_;
      line_start();
    }
    tok("}");
  }

  void var_decl(const Node& v) {
    tok(v.text);
    for (std::size_t i = 0; i < v.kids.size(); ++i) {
      if (i) {
        tok(",");
        sp();
      }
      const Node& d = *v.kids[i];
      tok(d.text);
      if (!d.kids.empty()) {
        sp();
        tok("=");
        sp();
        expr(*d.kids[0], kPrecAssign);
      }
    }
  }

  void function(const Node& f) {
    tok("function");
    if (!f.text.empty()) tok(f.text);
    tok("(");
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i) {
        tok(",");
        sp();
      }
      tok(f.params[i]);
    }
    tok(")");
    sp();
    block(*f.kids[0]);
  }

  void statement_inline(const Node& s) {
    switch (s.kind) {
      case NodeKind::FunctionDecl:
        function(s);
        break;
      case NodeKind::VarDecl:
        var_decl(s);
        tok(";");
        break;
      case NodeKind::Block:
        block(s);
        break;
      case NodeKind::If: {
        tok("if");
        sp();
        tok("(");
        expr(*s.kids[0], 0);
        tok(")");
        body(*s.kids[1]);
        if (const Node* alt = s.kid(2)) {
          if (s.kids[1]->is(NodeKind::Block)) {
            sp();
          } else {
            line_end();
            line_start();
          }
          tok("else");
          if (alt->is(NodeKind::If)) {
            sp();
            statement_inline(*alt);
          } else {
            body(*alt);
          }
        }
        break;
      }
      case NodeKind::While:
        tok("while");
        sp();
        tok("(");
        expr(*s.kids[0], 0);
        tok(")");
        body(*s.kids[1]);
        break;
      case NodeKind::DoWhile:
        tok("do");
        body(*s.kids[0]);
        if (s.kids[0]->is(NodeKind::Block)) {
          sp();
        } else {
          line_end();
          line_start();
        }
        tok("while");
        sp();
        tok("(");
        expr(*s.kids[1], 0);
        tok(")");
        tok(";");
        break;
      case NodeKind::For: {
        tok("for");
        sp();
        tok("(");
        if (const Node* init = s.kid(0)) {
          if (init->is(NodeKind::VarDecl))
            var_decl(*init);
          else
            expr(*init->kids[0], 0);
        }
        tok(";");
        if (const Node* test = s.kid(1)) {
          sp();
          expr(*test, 0);
        }
        tok(";");
        if (const Node* update = s.kid(2)) {
          sp();
          expr(*update, 0);
        }
        tok(")");
        body(*s.kids[3]);
        break;
      }
      case NodeKind::Switch: {
        tok("switch");
        sp();
        tok("(");
        expr(*s.kids[0], 0);
        tok(")");
        sp();
        tok("{");
        line_end();
        ++indent_;
        for (std::size_t i = 1; i < s.kids.size(); ++i) statement(*s.kids[i]);
        --indent_;
        line_start();
        tok("}");
        break;
      }
      case NodeKind::Case: {
        if (const Node* test = s.kid(0)) {
          tok("case");
          if (!compact_) sp();
          expr(*test, 0);
        } else {
          tok("default");
        }
        tok(":");
        if (s.kids.size() > 1) {
          line_end();
          ++indent_;
          for (std::size_t i = 1; i < s.kids.size(); ++i) {
            if (i > 1) line_end();
            line_start();
            statement_inline(*s.kids[i]);
          }
          --indent_;
        }
        break;
      }
      case NodeKind::Return:
        tok("return");
        if (const Node* arg = s.kid(0)) {
          sp();
          expr(*arg, 0);
        }
        tok(";");
        break;
      case NodeKind::Break:
        tok("break");
        tok(";");
        break;
      case NodeKind::Continue:
        tok("continue");
        tok(";");
        break;
      case NodeKind::ExprStmt: {
        const Node& e = *s.kids[0];
        const Node& first = leftmost(e);
        bool wrap = first.is(NodeKind::FunctionExpr) || first.is(NodeKind::ObjectLiteral);
        if (wrap) tok("(");
        expr(e, 0);
        if (wrap) tok(")");
        tok(";");
        break;
      }
      case NodeKind::EmptyStmt:
        tok(";");
        break;
      case NodeKind::DebuggerStmt:
        tok("debugger");
        tok(";");
        break;
      case NodeKind::Declarator: {
        tok(s.text);
        if (!s.kids.empty()) {
          sp();
          tok("=");
          sp();
          expr(*s.kids[0], kPrecAssign);
        }
        break;
      }
      default:
        expr(s, 0);
        break;
    }
  }

  void expr(const Node& e, int min_prec) {
    bool paren = precedence(e) < min_prec;
    if (paren) tok("(");
    expr_bare(e);
    if (paren) tok(")");
  }

  void expr_bare(const Node& e) {
    switch (e.kind) {
      case NodeKind::Identifier:
        tok(e.text);
        break;
      case NodeKind::Literal:
        literal(e);
        break;
      case NodeKind::Assign:
        expr(*e.kids[0], kPrecPostfix);
        sp();
        tok(e.text);
        sp();
        expr(*e.kids[1], kPrecAssign);
        break;
      case NodeKind::Conditional:
        expr(*e.kids[0], kPrecConditional + 1);
        sp();
        tok("?");
        sp();
        expr(*e.kids[1], kPrecAssign);
        sp();
        tok(":");
        sp();
        expr(*e.kids[2], kPrecAssign);
        break;
      case NodeKind::Binary: {
        int p = binary_prec(e.text);
        expr(*e.kids[0], p);
        sp();
        tok(e.text);
        sp();
        expr(*e.kids[1], p + 1);
        break;
      }
      case NodeKind::Unary:
        tok(e.text);
        if (e.text == "typeof") sp();
        expr(*e.kids[0], kPrecUnary);
        break;
      case NodeKind::Call:
        expr(*e.kids[0], kPrecPostfix);
        args(e);
        break;
      case NodeKind::New: {
        tok("new");
        const Node& callee = *e.kids[0];
        bool wrap = call_in_chain(callee) || precedence(callee) < kPrecPostfix;
        if (wrap) tok("(");
        expr_bare(callee);
        if (wrap) tok(")");
        args(e);
        break;
      }
      case NodeKind::Member: {
        const Node& obj = *e.kids[0];
        if (obj.is_number() || obj.is(NodeKind::FunctionExpr) || obj.is(NodeKind::ObjectLiteral)) {
          tok("(");
          expr(obj, 0);
          tok(")");
        } else {
          expr(obj, kPrecPostfix);
        }
        if (e.computed) {
          tok("[");
          expr(*e.kids[1], 0);
          tok("]");
        } else {
          tok(".");
          // Raw append: the dot already separates the name.
          out_.append(e.text);
        }
        break;
      }
      case NodeKind::ArrayLiteral:
        tok("[");
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
          if (i) {
            tok(",");
            sp();
          }
          expr(*e.kids[i], kPrecAssign);
        }
        tok("]");
        break;
      case NodeKind::ObjectLiteral:
        tok("{");
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
          if (i) {
            tok(",");
            sp();
          }
          const std::string& key = e.keys[i];
          tok(is_identifier_name(key) ? key : quote_string(key));
          tok(":");
          sp();
          expr(*e.kids[i], kPrecAssign);
        }
        tok("}");
        break;
      case NodeKind::FunctionExpr:
        function(e);
        break;
      default:
        statement_inline(e);
        break;
    }
  }

  void args(const Node& call) {
    tok("(");
    for (std::size_t i = 1; i < call.kids.size(); ++i) {
      if (i > 1) {
        tok(",");
        sp();
      }
      expr(*call.kids[i], kPrecAssign);
    }
    tok(")");
  }

  void literal(const Node& e) {
    switch (e.literal) {
      case LiteralType::Number:
        if (std::signbit(e.number)) {
          tok("-");
          tok(number_to_string(-e.number));
        } else {
          tok(number_to_string(e.number));
        }
        break;
      case LiteralType::String:
        tok(quote_string(e.text));
        break;
      case LiteralType::Boolean:
        tok(e.boolean ? "true" : "false");
        break;
      case LiteralType::Null:
        tok("null");
        break;
    }
  }

  bool compact_;
  int indent_ = 0;
  std::string out_;
};

}  // namespace

std::string print_pretty(const Node& node) {
  Printer p(false);
  p.any(node);
  return p.take();
}

std::string print_compact(const Node& node) {
  Printer p(true);
  p.any(node);
  return p.take();
}

std::string print_program(const Node& program) {
  return program.compact ? print_compact(program) : print_pretty(program);
}

std::string number_to_string(double v) {
  if (std::isnan(v)) return "NaN";
  if (v == 0) return "0";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  if (v < 0) return "-" + number_to_string(-v);

  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  std::string sci(buf, res.ptr);
  auto epos = sci.find('e');
  std::string digits;
  for (std::size_t i = 0; i < epos; ++i)
    if (sci[i] != '.') digits.push_back(sci[i]);
  int exp10 = std::stoi(sci.substr(epos + 1));
  int k = static_cast<int>(digits.size());
  int n = exp10 + 1;  // value = 0.d1d2... x 10^n

  if (k <= n && n <= 21) return digits + std::string(static_cast<std::size_t>(n - k), '0');
  if (0 < n && n <= 21) return digits.substr(0, n) + "." + digits.substr(n);
  if (-6 < n && n <= 0) return "0." + std::string(static_cast<std::size_t>(-n), '0') + digits;
  std::string out(1, digits[0]);
  if (k > 1) out += "." + digits.substr(1);
  out += "e";
  out += (n - 1 >= 0) ? "+" : "-";
  out += std::to_string(std::abs(n - 1));
  return out;
}

std::string quote_string(const std::string& utf8) {
  std::string out = "\"";
  for (char16_t u : utf8_to_utf16(utf8)) {
    switch (u) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (u < 0x20) {
          char b[8];
          std::snprintf(b, sizeof b, "\\x%02X", static_cast<unsigned>(u));
          out += b;
        } else if (u >= 0x7F) {
          char b[8];
          std::snprintf(b, sizeof b, "\\u%04X", static_cast<unsigned>(u));
          out += b;
        } else {
          out.push_back(static_cast<char>(u));
        }
    }
  }
  out += "\"";
  return out;
}

}  // namespace vdl::js
