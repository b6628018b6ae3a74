#include "hypergrowth/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hypergrowth/errors.hpp"

namespace hypergrowth {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits one CSV record. Double-quoted fields may contain commas; a doubled
// quote inside them is a literal quote.
std::vector<std::string> split_record(std::string_view line,
                                      std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back(trim(cell));
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  cells.emplace_back(trim(cell));
  return cells;
}

double parse_number(std::string_view text, std::string_view column,
                    std::size_t line_no) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError("column '" + std::string(column) +
                         "': cannot parse number '" + std::string(text) + "'",
                     line_no);
  }
  return value;
}

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw ParseError("header has no column '" + name + "'", 1);
  }
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

TimeSeries parse_csv(std::istream& in, const CsvSchema& schema,
                     std::string name, std::string unit_label) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!trim(line).empty()) {
      header = split_record(line, line_no);
      break;
    }
  }
  if (header.empty()) throw ParseError("input has no header row", line_no);

  const std::size_t year_col = find_column(header, schema.year_column);
  const std::size_t value_col = find_column(header, schema.value_column);
  const std::size_t needed = std::max(year_col, value_col) + 1;

  struct Row {
    Observation obs;
    std::size_t line;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_record(line, line_no);
    if (cells.size() < needed) {
      throw ParseError("expected at least " + std::to_string(needed) +
                           " fields, found " + std::to_string(cells.size()),
                       line_no);
    }
    const double year = parse_number(cells[year_col], schema.year_column, line_no);
    const double value =
        parse_number(cells[value_col], schema.value_column, line_no);
    if (!(value > 0.0)) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "value at year " << year << " must be positive, got " << value;
      throw ValidationError(msg.str(), line_no);
    }
    rows.push_back({{year, value}, line_no});
  }

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.obs.year < b.obs.year;
  });
  std::vector<Observation> points;
  points.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].obs.year == rows[i - 1].obs.year) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "duplicate year " << rows[i].obs.year << " (lines "
          << std::min(rows[i - 1].line, rows[i].line) << " and "
          << std::max(rows[i - 1].line, rows[i].line) << ")";
      throw ValidationError(msg.str(),
                            std::max(rows[i - 1].line, rows[i].line));
    }
    points.push_back(rows[i].obs);
  }
  return TimeSeries(std::move(points), std::move(name), std::move(unit_label));
}

TimeSeries parse_csv_file(const std::filesystem::path& path,
                          const CsvSchema& schema, std::string unit_label) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  return parse_csv(in, schema, path.stem().string(), std::move(unit_label));
}

std::string format_number(double x) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_csv(std::ostream& out, const TimeSeries& series,
               const CsvSchema& schema) {
  out << schema.year_column << ',' << schema.value_column << '\n';
  for (const Observation& p : series.points()) {
    out << format_number(p.year) << ',' << format_number(p.value) << '\n';
  }
}

TimeSeries derive_per_capita(const TimeSeries& gdp,
                             const TimeSeries& population) {
  std::vector<Observation> points;
  for (const Observation& p : gdp.points()) {
    if (auto pop = population.value_at(p.year)) {
      points.push_back({p.year, p.value / *pop});
    }
  }
  if (points.empty()) {
    throw NoCommonYearsError("series '" + gdp.name() + "' and '" +
                             population.name() + "' share no years");
  }
  std::string unit;
  if (!gdp.unit_label().empty() || !population.unit_label().empty()) {
    unit = "(" + gdp.unit_label() + ") / (" + population.unit_label() + ")";
  }
  std::string name = gdp.name().empty() && population.name().empty()
                         ? std::string("per_capita")
                         : gdp.name() + "/" + population.name();
  return TimeSeries(std::move(points), std::move(name), std::move(unit));
}

Dataset make_dataset(TimeSeries gdp, TimeSeries population,
                     std::string provenance) {
  TimeSeries per_capita = derive_per_capita(gdp, population);
  return Dataset{std::move(gdp), std::move(population), std::move(per_capita),
                 std::move(provenance)};
}

TimeSeries synthesize(const HyperbolicParams& params,
                      std::span<const double> grid, NoiseModel noise,
                      std::uint64_t seed, std::string name) {
  if (!(noise.sigma >= 0.0) || !std::isfinite(noise.sigma)) {
    throw ValidationError("noise sigma must be finite and non-negative");
  }
  std::vector<Observation> points;
  points.reserve(grid.size());
  for (double t : grid) points.push_back({t, eval_hyperbolic(params, t)});

  if (noise.sigma > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, noise.sigma);
    for (Observation& p : points) p.value *= std::exp(normal(rng));
  }
  return TimeSeries(std::move(points), std::move(name));
}

}  // namespace hypergrowth
