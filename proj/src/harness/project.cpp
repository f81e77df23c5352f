#include "vdl/harness/project.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vdl/js/lexer.hpp"
#include "vdl/js/parser.hpp"

namespace vdl::harness {

namespace fs = std::filesystem;

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::string out = "parse failures:";
  for (const auto& e : errors) out += "\n  " + e;
  return out;
}

bool match_segment(std::string_view p, std::string_view s) {
  if (p.empty()) return s.empty();
  if (p[0] == '*') {
    for (std::size_t i = 0; i <= s.size(); ++i)
      if (match_segment(p.substr(1), s.substr(i))) return true;
    return false;
  }
  if (s.empty()) return false;
  if (p[0] == '?' || p[0] == s[0]) return match_segment(p.substr(1), s.substr(1));
  return false;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == '/') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

bool match_parts(const std::vector<std::string_view>& p, std::size_t pi, const std::vector<std::string_view>& s,
                 std::size_t si) {
  if (pi == p.size()) return si == s.size();
  if (p[pi] == "**") {
    for (std::size_t k = si; k <= s.size(); ++k)
      if (match_parts(p, pi + 1, s, k)) return true;
    return false;
  }
  if (si == s.size()) return false;
  return match_segment(p[pi], s[si]) && match_parts(p, pi + 1, s, si + 1);
}

}  // namespace

ParseFailures::ParseFailures(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

bool glob_match(std::string_view pattern, std::string_view path) {
  return match_parts(split(pattern), 0, split(path), 0);
}

std::vector<std::string> default_include() { return {"**/*.js"}; }
std::vector<std::string> default_exclude() { return {"**/node_modules/**"}; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& content) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + p.string());
}

Project ingest_project(const fs::path& root, const std::vector<std::string>& include,
                       const std::vector<std::string>& exclude) {
  if (!fs::is_directory(root)) throw std::runtime_error("not a directory: " + root.string());
  std::vector<std::string> paths;
  for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator(); ++it) {
    if (!it->is_regular_file()) continue;
    std::string rel = fs::relative(it->path(), root).generic_string();
    auto any = [&](const std::vector<std::string>& globs) {
      return std::any_of(globs.begin(), globs.end(), [&](const std::string& g) { return glob_match(g, rel); });
    };
    if (any(include) && !any(exclude)) paths.push_back(rel);
  }
  if (paths.empty()) throw NoFilesMatched("no files matched in " + root.string());
  std::sort(paths.begin(), paths.end());

  Project p;
  p.id = root.filename().string();
  if (p.id.empty() || p.id == ".") p.id = fs::weakly_canonical(root).filename().string();
  p.root = root;
  std::vector<std::string> errors;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    SourceFile f{paths[i], read_file(root / paths[i]), static_cast<int>(i)};
    try {
      p.programs.push_back(std::shared_ptr<const js::Node>(js::parse_source(f.content, f.id)));
    } catch (const js::SourceError& e) {
      errors.push_back(f.path + ":" + e.what());
      p.programs.push_back(nullptr);
    }
    p.files.push_back(std::move(f));
  }
  if (!errors.empty()) throw ParseFailures(std::move(errors));
  return p;
}

std::vector<Project> ingest_projects(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> roots;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_directory()) roots.push_back(e.path());
  std::sort(roots.begin(), roots.end());
  std::vector<Project> out;
  for (const auto& r : roots) out.push_back(ingest_project(r));
  return out;
}

}  // namespace vdl::harness
