#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "vdl/harness/aggregate.hpp"
#include "vdl/harness/vdl.hpp"
#include "vdl/scan/scan.hpp"

namespace vdl::harness {

/// Schema violation; `pointer` is the JSON pointer of the first offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// External Findings JSON. Keys beyond the schema are rejected.
scan::ScanReport parse_external_report(const std::string& json_text);
scan::ScanReport ingest_external_report(const std::filesystem::path& path);
/// Two-space indented, schema key order, trailing newline.
std::string emit_external_report(const scan::ScanReport& report);

std::string records_to_json(const std::vector<VdlRecord>& records);
std::vector<VdlRecord> records_from_json(const std::string& json_text);

std::string aggregate_csv_header();
std::string aggregation_to_csv(const Aggregation& agg);

/// Shortest decimal that round-trips, as JavaScript prints numbers.
std::string format_number(double v);

}  // namespace vdl::harness
