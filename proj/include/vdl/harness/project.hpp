#pragma once

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "vdl/js/ast.hpp"

namespace vdl::harness {

struct SourceFile {
  std::string path;  // relative to the project root, '/' separated
  std::string content;
  int id = 0;
};

struct Project {
  std::string id;
  std::filesystem::path root;
  std::vector<SourceFile> files;
  std::vector<std::shared_ptr<const js::Node>> programs;  // parallel to files
};

class NoFilesMatched : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseFailures : public std::runtime_error {
 public:
  explicit ParseFailures(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const noexcept { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// `*` and `?` stay within one path segment; `**/` matches zero or more
/// whole segments.
bool glob_match(std::string_view pattern, std::string_view path);

std::vector<std::string> default_include();
std::vector<std::string> default_exclude();

Project ingest_project(const std::filesystem::path& root, const std::vector<std::string>& include = default_include(),
                       const std::vector<std::string>& exclude = default_exclude());

/// Every immediate subdirectory is one project, sorted by name.
std::vector<Project> ingest_projects(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

}  // namespace vdl::harness
