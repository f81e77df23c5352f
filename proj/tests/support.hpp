#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace vdl::test {

inline std::filesystem::path source_dir() { return VDL_SOURCE_DIR; }
inline std::filesystem::path golden(const std::string& name) { return source_dir() / "tests" / "golden" / name; }
inline std::filesystem::path corpus() { return source_dir() / "fixtures" / "corpus"; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace vdl::test

#include <memory>
#include <vector>

#include "vdl/harness/project.hpp"

namespace vdl::test {

struct CorpusProgram {
  std::string name;
  std::string source;
  std::shared_ptr<const js::Node> program;
};

inline std::vector<CorpusProgram> corpus_programs() {
  std::vector<CorpusProgram> out;
  std::vector<std::filesystem::path> dirs;
  for (const auto& e : std::filesystem::directory_iterator(corpus()))
    if (e.is_directory()) dirs.push_back(e.path());
  std::sort(dirs.begin(), dirs.end());
  for (const auto& d : dirs) {
    auto p = harness::ingest_project(d);
    for (std::size_t i = 0; i < p.files.size(); ++i)
      out.push_back({d.filename().string(), p.files[i].content, p.programs[i]});
  }
  return out;
}

}  // namespace vdl::test
