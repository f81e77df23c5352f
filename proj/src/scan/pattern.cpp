#include <regex>

#include "vdl/scan/scan.hpp"

namespace vdl::scan {

using js::Node;
using js::NodeKind;

std::optional<std::vector<std::string>> member_path(const Node& expr) {
  if (expr.is(NodeKind::Identifier)) return std::vector<std::string>{expr.text};
  if (!expr.is(NodeKind::Member)) return std::nullopt;
  auto base = member_path(*expr.kids[0]);
  if (!base) return std::nullopt;
  if (!expr.computed) {
    base->push_back(expr.text);
  } else {
    const Node& prop = *expr.kids[1];
    if (!prop.is_string()) return std::nullopt;
    base->push_back(prop.text);
  }
  return base;
}

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (const auto& p : path) {
    if (!out.empty()) out += '.';
    out += p;
  }
  return out;
}

bool callee_matches(const Node& callee, const std::string& pattern) {
  auto path = member_path(callee);
  if (!path) return false;
  if (pattern.find('.') == std::string::npos) return path->back() == pattern;
  return join_path(*path) == pattern;
}

namespace {

// A string built only from literals, e.g. "<b>" + "hi" + "</b>".
bool constant_value(const Node& n) {
  if (n.is(NodeKind::Literal)) return true;
  if (n.is(NodeKind::Binary) && n.text == "+") return constant_value(*n.kids[0]) && constant_value(*n.kids[1]);
  return false;
}

bool property_is(const Node& member, const std::vector<std::string>& names) {
  if (!member.is(NodeKind::Member)) return false;
  const std::string* prop = nullptr;
  if (!member.computed) prop = &member.text;
  else if (member.kids[1]->is_string()) prop = &member.kids[1]->text;
  if (!prop) return false;
  for (const auto& n : names)
    if (*prop == n) return true;
  return false;
}

const std::regex& secret_assignment() {
  static const std::regex re("(api[_-]?key|secret|passw(or)?d)[=:].{4,}", std::regex::icase);
  return re;
}

const std::regex& base64_blob() {
  static const std::regex re("^[A-Za-z0-9+/]{20,}={0,2}$");
  return re;
}

const std::regex& secret_name() {
  static const std::regex re("key|token|secret", std::regex::icase);
  return re;
}

bool looks_secret(const std::string& name, const std::string& value) {
  if (std::regex_search(value, secret_assignment())) return true;
  return std::regex_match(value, base64_blob()) && std::regex_search(name, secret_name());
}

Finding make_finding(const Rule& rule, const Node& at, std::string message) {
  Finding f;
  f.rule_id = rule.id;
  f.severity = rule.severity;
  f.span = at.span;
  f.message = std::move(message);
  return f;
}

}  // namespace

std::vector<Finding> match_pattern(const Rule& rule, const Node& program) {
  std::vector<Finding> out;
  const PatternSpec& p = rule.pattern;
  js::walk(program, [&](const Node& n) {
    switch (p.kind) {
      case PatternKind::Callee:
        if (n.is(NodeKind::Call) || (p.include_new && n.is(NodeKind::New))) {
          for (const auto& name : p.names)
            if (callee_matches(*n.kids[0], name)) {
              out.push_back(make_finding(rule, n, rule.description));
              break;
            }
        }
        break;
      case PatternKind::MemberAssign:
        if (n.is(NodeKind::Assign) && property_is(*n.kids[0], p.names) && !constant_value(*n.kids[1]))
          out.push_back(make_finding(rule, n, rule.description));
        break;
      case PatternKind::SecretLiteral:
        if (n.is(NodeKind::Declarator) && !n.kids.empty() && n.kids[0]->is_string() &&
            looks_secret(n.text, n.kids[0]->text))
          out.push_back(make_finding(rule, n, rule.description));
        break;
    }
    return true;
  });
  return out;
}

}  // namespace vdl::scan
