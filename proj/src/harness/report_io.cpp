#include "vdl/harness/report_io.hpp"

#include <set>

#include "json.hpp"
#include "vdl/harness/project.hpp"
#include "vdl/js/printer.hpp"

namespace vdl::harness {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& at) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at, "missing key \"" + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const std::string& key, const std::string& at) {
  const json& v = require(obj, key, at);
  if (!v.is_string()) throw SchemaError(at + "/" + key, "expected a string");
  return v.get<std::string>();
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& at) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) throw SchemaError(at + "/" + it.key(), "unexpected key");
}

}  // namespace

scan::ScanReport parse_external_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  only_keys(doc, {"tool", "project", "variant", "findings"}, "");
  scan::ScanReport r;
  r.tool = require_string(doc, "tool", "");
  r.project_id = require_string(doc, "project", "");
  r.variant_id = require_string(doc, "variant", "");
  const json& findings = require(doc, "findings", "");
  if (!findings.is_array()) throw SchemaError("/findings", "expected an array");
  for (std::size_t i = 0; i < findings.size(); ++i) {
    const std::string at = "/findings/" + std::to_string(i);
    const json& f = findings[i];
    if (!f.is_object()) throw SchemaError(at, "expected an object");
    only_keys(f, {"rule_id", "severity", "file", "line", "message"}, at);
    scan::Finding out;
    out.rule_id = require_string(f, "rule_id", at);
    auto sev = scan::parse_severity(require_string(f, "severity", at));
    if (!sev) throw SchemaError(at + "/severity", "must be one of Low, Medium, High, Critical");
    out.severity = *sev;
    out.file = require_string(f, "file", at);
    const json& line = require(f, "line", at);
    if (!line.is_number_integer() || line.get<long long>() < 1)
      throw SchemaError(at + "/line", "expected an integer >= 1");
    out.span.start_line = out.span.end_line = static_cast<int>(line.get<long long>());
    out.message = require_string(f, "message", at);
    r.add(std::move(out));
  }
  return r;
}

scan::ScanReport ingest_external_report(const std::filesystem::path& path) {
  return parse_external_report(read_file(path));
}

std::string emit_external_report(const scan::ScanReport& report) {
  ordered_json doc;
  doc["tool"] = report.tool;
  doc["project"] = report.project_id;
  doc["variant"] = report.variant_id;
  doc["findings"] = ordered_json::array();
  for (const auto& f : report.findings) {
    ordered_json j;
    j["rule_id"] = f.rule_id;
    j["severity"] = std::string(scan::severity_name(f.severity));
    j["file"] = f.file;
    j["line"] = f.line();
    j["message"] = f.message;
    doc["findings"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string records_to_json(const std::vector<VdlRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["project"] = r.project;
    j["config"] = r.config;
    j["seed"] = r.seed;
    j["severity_filter"] = r.severity_filter ? ordered_json(r.severity_filter->name()) : ordered_json(nullptr);
    j["baseline"] = r.baseline;
    j["matched"] = r.matched;
    j["vdl"] = r.vdl ? ordered_json(*r.vdl) : ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<VdlRecord> records_from_json(const std::string& text) {
  json arr = json::parse(text);
  std::vector<VdlRecord> out;
  for (const auto& j : arr) {
    VdlRecord r;
    r.project = j.at("project").get<std::string>();
    r.config = j.at("config").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("severity_filter").is_null())
      r.severity_filter = scan::SeverityFilter::parse(j.at("severity_filter").get<std::string>());
    r.baseline = j.at("baseline").get<int>();
    r.matched = j.at("matched").get<int>();
    if (!j.at("vdl").is_null()) r.vdl = j.at("vdl").get<double>();
    r.plugin_count = 0;
    std::size_t start = 0;
    if (!r.config.empty()) {
      obf::TechniqueSet set;
      while (start <= r.config.size()) {
        std::size_t end = r.config.find('+', start);
        if (end == std::string::npos) end = r.config.size();
        if (auto t = obf::parse_technique(std::string_view(r.config).substr(start, end - start))) set.insert(*t);
        start = end + 1;
      }
      obf::ObfuscationConfig c;
      c.techniques = set;
      r.plugin_count = c.plugin_count();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_number(double v) { return js::number_to_string(v); }

std::string aggregate_csv_header() {
  return "group_by,group_key,n,min,q1,median,q3,max,lower_whisker,upper_whisker,outliers\n";
}

std::string aggregation_to_csv(const Aggregation& agg) {
  std::string out = aggregate_csv_header();
  const std::string mode(group_by_name(agg.group_by));
  for (const auto& b : agg.groups) {
    std::string outliers;
    for (double o : b.outliers) {
      if (!outliers.empty()) outliers += ';';
      outliers += format_number(o);
    }
    out += mode + "," + b.group_key + "," + std::to_string(b.n) + "," + format_number(b.min) + "," +
           format_number(b.q1) + "," + format_number(b.median) + "," + format_number(b.q3) + "," +
           format_number(b.max) + "," + format_number(b.lower_whisker) + "," + format_number(b.upper_whisker) +
           "," + outliers + "\n";
  }
  return out;
}

}  // namespace vdl::harness
