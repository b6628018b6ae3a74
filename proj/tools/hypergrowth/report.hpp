#pragma once

// JSON and CSV renderings of library results for the command-line tool.

#include <json.hpp>
#include <filesystem>
#include <string>
#include <vector>

#include "hypergrowth/diagnostics.hpp"
#include "hypergrowth/fitting.hpp"
#include "hypergrowth/ratio.hpp"

namespace hypergrowth::cli {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const HyperbolicParams& p);
nlohmann::json to_json(const HyperbolicFit& fit, const TimeSeries& series);
nlohmann::json to_json(const RatioModel& m);
nlohmann::json to_json(const BreakTestResult& r);
nlohmann::json to_json(const MonotonicityReport& r);
nlohmann::json to_json(const ScanEntry& e, const std::string& series_name);

/// Columns of equal length written as CSV with format_number cells. NaN
/// cells are left empty.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};

std::string render_csv(const CsvTable& table);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hypergrowth::cli
