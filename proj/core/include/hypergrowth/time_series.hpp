#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypergrowth {

struct Observation {
  double year;
  double value;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Observations with strictly increasing, finite years and finite, strictly
/// positive values. Years are continuous (fractional years are allowed).
class TimeSeries {
 public:
  TimeSeries() = default;

  /// Throws ValidationError when an invariant is violated.
  explicit TimeSeries(std::vector<Observation> points, std::string name = {},
                      std::string unit_label = {});

  const std::vector<Observation>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  const std::string& name() const noexcept { return name_; }
  const std::string& unit_label() const noexcept { return unit_label_; }

  std::vector<double> years() const;
  std::vector<double> values() const;

  std::optional<double> value_at(double year) const noexcept;

  /// Observations with from <= year <= to.
  TimeSeries window(double from, double to) const;

  /// Observations at exactly the requested years. Throws MissingYearError
  /// listing every absent year.
  TimeSeries subset(std::span<const double> years) const;

 private:
  std::vector<Observation> points_;
  std::string name_;
  std::string unit_label_;
};

/// `count` evenly spaced points from `from` to `to` inclusive.
std::vector<double> evenly_spaced(double from, double to, std::size_t count);

/// from, from + step, ... up to and including `to` (within rounding).
std::vector<double> stepped_grid(double from, double to, double step);

}  // namespace hypergrowth
