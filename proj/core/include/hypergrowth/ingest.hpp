#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "hypergrowth/hyperbolic.hpp"
#include "hypergrowth/time_series.hpp"

namespace hypergrowth {

/// Column names of a (year, value) CSV table. The file must have a header
/// row; other columns are ignored and rows may appear in any order.
struct CsvSchema {
  std::string year_column = "year";
  std::string value_column = "value";
};

/// Reads and validates a series. Throws ParseError (with line number) for
/// malformed text and ValidationError for non-positive values or duplicate
/// years.
TimeSeries parse_csv(std::istream& in, const CsvSchema& schema = {},
                     std::string name = {}, std::string unit_label = {});

TimeSeries parse_csv_file(const std::filesystem::path& path,
                          const CsvSchema& schema = {},
                          std::string unit_label = {});

/// Writes a header row and one row per observation, numbers formatted by
/// format_number.
void write_csv(std::ostream& out, const TimeSeries& series,
               const CsvSchema& schema = {});

/// Shortest of "%.12g".
std::string format_number(double x);

/// Quotient on the years common to both series. Throws NoCommonYearsError.
TimeSeries derive_per_capita(const TimeSeries& gdp,
                             const TimeSeries& population);

/// GDP and population with the per-capita series derived from them.
struct Dataset {
  TimeSeries gdp;
  TimeSeries population;
  TimeSeries gdp_per_capita;
  std::string provenance;
};

Dataset make_dataset(TimeSeries gdp, TimeSeries population,
                     std::string provenance = {});

/// Multiplicative log-normal noise: each value is scaled by exp(e) with
/// e ~ Normal(0, sigma^2). sigma == 0 means noiseless.
struct NoiseModel {
  double sigma = 0.0;
};

/// Samples a trajectory on a strictly increasing grid. Deterministic per
/// seed; the seed is ignored for noiseless output. Throws DomainError for
/// grid points past the singularity guard.
TimeSeries synthesize(const HyperbolicParams& params,
                      std::span<const double> grid, NoiseModel noise = {},
                      std::uint64_t seed = 0, std::string name = {});

}  // namespace hypergrowth
