#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vdl::scan {

enum class Severity { Low, Medium, High, Critical };

/// Two-level grouping used by tools that only report warnings and errors.
enum class Level { Warning, Error };

std::string_view severity_name(Severity s);
/// Exact, case-sensitive match against "Low", "Medium", "High", "Critical".
std::optional<Severity> parse_severity(std::string_view s);
Level project_level(Severity s);
std::string_view level_name(Level l);

/// A per-severity or per-level filter applied to reports before matching.
struct SeverityFilter {
  enum class Kind { Severity, Level } kind = Kind::Severity;
  Severity severity = Severity::Low;
  Level level = Level::Warning;

  static SeverityFilter of(Severity s) { return {Kind::Severity, s, Level::Warning}; }
  static SeverityFilter of(Level l) { return {Kind::Level, Severity::Low, l}; }

  bool accepts(Severity s) const;
  std::string name() const;
  static std::optional<SeverityFilter> parse(std::string_view s);

  friend bool operator==(const SeverityFilter&, const SeverityFilter&) = default;
};

/// Low, Medium, High, Critical, Warning, Error.
std::vector<SeverityFilter> all_severity_filters();

enum class RuleKind { Pattern, Taint };

enum class PatternKind {
  Callee,        // call (and optionally `new`) whose callee matches one of `names`
  MemberAssign,  // assignment to a property in `names` with a non-constant value
  SecretLiteral  // declarator initialised with a credential-looking string
};

/// Callee patterns: a bare name ("eval") matches the bare identifier or the
/// last segment of a member path; a dotted name ("db.query") matches the
/// whole path.
struct PatternSpec {
  PatternKind kind = PatternKind::Callee;
  std::vector<std::string> names;
  bool include_new = false;
};

struct TaintSink {
  std::string callee;
  int arg = 0;
};

/// Source patterns are member paths; a trailing ".*" matches the path and
/// anything below it.
struct TaintSpec {
  std::vector<std::string> sources;
  std::vector<TaintSink> sinks;
  std::vector<std::string> sanitizers;
};

struct Rule {
  std::string id;
  RuleKind kind = RuleKind::Pattern;
  Severity severity = Severity::Low;
  PatternSpec pattern;
  TaintSpec taint;
  std::string description;
};

class RulesetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rule> default_ruleset();

/// JSON form: {"rules": [{"id", "kind": "pattern"|"taint", "severity",
/// "description", "pattern": {"kind": "callee"|"member_assign"|"secret_literal",
/// "names": [...], "include_new": bool}, "taint": {"sources": [...],
/// "sinks": [{"callee", "arg"}], "sanitizers": [...]}}]}
std::vector<Rule> parse_ruleset(std::string_view json_text);
std::vector<Rule> load_ruleset(const std::string& path);

/// Throws RulesetError on duplicate ids or empty taint lists.
void validate_ruleset(const std::vector<Rule>& rules);

}  // namespace vdl::scan
