#include "hypergrowth/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/ingest.hpp"

namespace hypergrowth::cli {

using nlohmann::json;

json to_json(const HyperbolicParams& p) {
  return {{"a", p.intercept()},
          {"k", p.slope()},
          {"singularity_time", p.singularity_time()}};
}

json to_json(const HyperbolicFit& fit, const TimeSeries& series) {
  json residuals = json::array();
  for (std::size_t i = 0; i < fit.residuals.size(); ++i) {
    residuals.push_back(
        {{"year", series.points()[i].year}, {"residual", fit.residuals[i]}});
  }
  return {{"series", series.name()},
          {"unit_label", series.unit_label()},
          {"n_points", fit.n_points},
          {"weighting", to_string(fit.weighting)},
          {"a", fit.params.intercept()},
          {"k", fit.params.slope()},
          {"singularity_time", fit.singularity_time},
          {"rmse_reciprocal", fit.rmse_reciprocal},
          {"r_squared_reciprocal", fit.r_squared_reciprocal},
          {"residuals", residuals}};
}

json to_json(const RatioModel& m) {
  const RatioShape shape = m.shape();
  json out = {{"numerator", to_json(m.numerator())},
              {"denominator", to_json(m.denominator())},
              {"modulation_constant", m.modulation_constant()},
              {"shape", to_string(shape)},
              {"domain_end", m.domain_end()},
              {"guard_time", m.guard_time()},
              {"ratio_singularity", nullptr},
              {"vanishes_at", nullptr}};
  if (shape == RatioShape::escalating) {
    out["ratio_singularity"] = m.numerator().singularity_time();
  } else if (shape == RatioShape::diminishing) {
    out["vanishes_at"] = m.denominator().singularity_time();
  }
  return out;
}

json to_json(const BreakTestResult& r) {
  json f = std::isfinite(r.f_statistic) ? json(r.f_statistic) : json("inf");
  return {{"break_year", r.break_year},
          {"sse_single", r.sse_single},
          {"sse_segmented", r.sse_segmented},
          {"f_statistic", f},
          {"p_value", r.p_value},
          {"alpha", r.alpha},
          {"decision", to_string(r.decision)},
          {"n_before", r.n_before},
          {"n_after", r.n_after},
          {"weighting", to_string(r.weighting)}};
}

json to_json(const MonotonicityReport& r) {
  json out = {{"verdict", to_string(r.verdict)}, {"first_violation", nullptr}};
  if (r.first_violation) out["first_violation"] = *r.first_violation;
  return out;
}

json to_json(const ScanEntry& e, const std::string& series_name) {
  json out = {{"series", series_name},
              {"candidate_year", e.candidate_year},
              {"within_industrial_revolution", e.within_industrial_revolution}};
  if (e.result) {
    out["result"] = to_json(*e.result);
  } else {
    out["error"] = e.error;
  }
  return out;
}

std::string render_csv(const CsvTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    out << (c ? "," : "") << table.header[c];
  }
  out << '\n';
  const std::size_t rows = table.columns.empty() ? 0 : table.columns[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << ',';
      const double v = table.columns[c][r];
      if (!std::isnan(v)) out << format_number(v);
    }
    out << '\n';
  }
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw ValidationError("cannot write '" + path.string() + "'");
  }
}

}  // namespace hypergrowth::cli
