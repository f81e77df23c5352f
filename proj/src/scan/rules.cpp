#include "vdl/scan/rules.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vdl::scan {

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Low: return "Low";
    case Severity::Medium: return "Medium";
    case Severity::High: return "High";
    case Severity::Critical: return "Critical";
  }
  return "?";
}

std::optional<Severity> parse_severity(std::string_view s) {
  for (Severity v : {Severity::Low, Severity::Medium, Severity::High, Severity::Critical})
    if (severity_name(v) == s) return v;
  return std::nullopt;
}

Level project_level(Severity s) {
  return s == Severity::Low || s == Severity::Medium ? Level::Warning : Level::Error;
}

std::string_view level_name(Level l) { return l == Level::Warning ? "Warning" : "Error"; }

bool SeverityFilter::accepts(Severity s) const {
  return kind == Kind::Severity ? s == severity : project_level(s) == level;
}

std::string SeverityFilter::name() const {
  return std::string(kind == Kind::Severity ? severity_name(severity) : level_name(level));
}

std::optional<SeverityFilter> SeverityFilter::parse(std::string_view s) {
  if (auto sev = parse_severity(s)) return of(*sev);
  if (s == "Warning") return of(Level::Warning);
  if (s == "Error") return of(Level::Error);
  return std::nullopt;
}

std::vector<SeverityFilter> all_severity_filters() {
  return {SeverityFilter::of(Severity::Low),  SeverityFilter::of(Severity::Medium),
          SeverityFilter::of(Severity::High), SeverityFilter::of(Severity::Critical),
          SeverityFilter::of(Level::Warning), SeverityFilter::of(Level::Error)};
}

namespace {

TaintSpec web_taint(std::vector<TaintSink> sinks) {
  TaintSpec t;
  t.sources = {"req.query.*", "req.body.*", "req.params.*", "process.argv"};
  t.sinks = std::move(sinks);
  t.sanitizers = {"sanitize", "escapeHtml"};
  return t;
}

Rule pattern_rule(std::string id, Severity sev, PatternKind kind, std::vector<std::string> names,
                  bool include_new, std::string description) {
  Rule r;
  r.id = std::move(id);
  r.kind = RuleKind::Pattern;
  r.severity = sev;
  r.pattern = PatternSpec{kind, std::move(names), include_new};
  r.description = std::move(description);
  return r;
}

Rule taint_rule(std::string id, Severity sev, std::vector<TaintSink> sinks, std::string description) {
  Rule r;
  r.id = std::move(id);
  r.kind = RuleKind::Taint;
  r.severity = sev;
  r.taint = web_taint(std::move(sinks));
  r.description = std::move(description);
  return r;
}

}  // namespace

std::vector<Rule> default_ruleset() {
  std::vector<Rule> rules;
  rules.push_back(pattern_rule("js-eval-usage", Severity::High, PatternKind::Callee, {"eval"}, false,
                               "eval() executes arbitrary code"));
  rules.push_back(pattern_rule("js-new-function", Severity::High, PatternKind::Callee, {"Function"}, true,
                               "Function constructor compiles code from strings"));
  rules.push_back(pattern_rule("js-innerhtml-assign", Severity::Medium, PatternKind::MemberAssign,
                               {"innerHTML"}, false, "non-constant value assigned to innerHTML"));
  rules.push_back(pattern_rule("js-hardcoded-secret", Severity::High, PatternKind::SecretLiteral, {}, false,
                               "credential stored in source"));
  rules.push_back(pattern_rule("js-document-write", Severity::Low, PatternKind::Callee, {"document.write"},
                               false, "document.write injects markup"));
  rules.push_back(taint_rule("js-sqli-taint", Severity::Critical, {{"db.query", 0}, {"db.run", 0}},
                             "user input reaches a SQL query"));
  rules.push_back(taint_rule("js-cmdi-taint", Severity::Critical, {{"exec", 0}},
                             "user input reaches a shell command"));
  rules.push_back(taint_rule("js-xss-taint", Severity::High, {{"res.send", 0}},
                             "user input reflected into a response"));
  return rules;
}

void validate_ruleset(const std::vector<Rule>& rules) {
  std::set<std::string> ids;
  for (const auto& r : rules) {
    if (r.id.empty()) throw RulesetError("rule with empty id");
    if (!ids.insert(r.id).second) throw RulesetError("duplicate rule id: " + r.id);
    if (r.kind == RuleKind::Taint &&
        (r.taint.sources.empty() || r.taint.sinks.empty() || r.taint.sanitizers.empty()))
      throw RulesetError("taint rule " + r.id + " needs sources, sinks and sanitizers");
    if (r.kind == RuleKind::Pattern && r.pattern.kind != PatternKind::SecretLiteral && r.pattern.names.empty())
      throw RulesetError("pattern rule " + r.id + " has no names");
  }
}

std::vector<Rule> parse_ruleset(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw RulesetError(std::string("ruleset is not valid JSON: ") + e.what());
  }
  try {
    std::vector<Rule> rules;
    for (const auto& j : doc.at("rules")) {
      Rule r;
      r.id = j.at("id").get<std::string>();
      auto sev = parse_severity(j.at("severity").get<std::string>());
      if (!sev) throw RulesetError("rule " + r.id + ": unknown severity");
      r.severity = *sev;
      r.description = j.value("description", "");
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "pattern") {
        r.kind = RuleKind::Pattern;
        const auto& p = j.at("pattern");
        const std::string pk = p.at("kind").get<std::string>();
        if (pk == "callee") r.pattern.kind = PatternKind::Callee;
        else if (pk == "member_assign") r.pattern.kind = PatternKind::MemberAssign;
        else if (pk == "secret_literal") r.pattern.kind = PatternKind::SecretLiteral;
        else throw RulesetError("rule " + r.id + ": unknown pattern kind " + pk);
        r.pattern.names = p.value("names", std::vector<std::string>{});
        r.pattern.include_new = p.value("include_new", false);
      } else if (kind == "taint") {
        r.kind = RuleKind::Taint;
        const auto& t = j.at("taint");
        r.taint.sources = t.at("sources").get<std::vector<std::string>>();
        r.taint.sanitizers = t.at("sanitizers").get<std::vector<std::string>>();
        for (const auto& s : t.at("sinks")) r.taint.sinks.push_back({s.at("callee").get<std::string>(), s.value("arg", 0)});
      } else {
        throw RulesetError("rule " + r.id + ": unknown kind " + kind);
      }
      rules.push_back(std::move(r));
    }
    validate_ruleset(rules);
    return rules;
  } catch (const json::exception& e) {
    throw RulesetError(std::string("malformed ruleset: ") + e.what());
  }
}

std::vector<Rule> load_ruleset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RulesetError("cannot read ruleset " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ruleset(ss.str());
}

}  // namespace vdl::scan
