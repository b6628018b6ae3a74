#include "hypergrowth/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypergrowth/errors.hpp"

namespace hypergrowth {

TimeSeries::TimeSeries(std::vector<Observation> points, std::string name,
                       std::string unit_label)
    : points_(std::move(points)),
      name_(std::move(name)),
      unit_label_(std::move(unit_label)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Observation& p = points_[i];
    std::ostringstream msg;
    msg.precision(12);
    if (!std::isfinite(p.year)) {
      msg << "observation " << i << " has a non-finite year";
      throw ValidationError(msg.str());
    }
    if (!std::isfinite(p.value) || !(p.value > 0.0)) {
      msg << "value at year " << p.year << " must be finite and positive, got "
          << p.value;
      throw ValidationError(msg.str());
    }
    if (i > 0 && !(points_[i - 1].year < p.year)) {
      msg << "years must be strictly increasing: " << points_[i - 1].year
          << " followed by " << p.year;
      throw ValidationError(msg.str());
    }
  }
}

std::vector<double> TimeSeries::years() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.year);
  return out;
}

std::vector<double> TimeSeries::values() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.value);
  return out;
}

std::optional<double> TimeSeries::value_at(double year) const noexcept {
  auto it = std::lower_bound(
      points_.begin(), points_.end(), year,
      [](const Observation& p, double y) { return p.year < y; });
  if (it == points_.end() || it->year != year) return std::nullopt;
  return it->value;
}

TimeSeries TimeSeries::window(double from, double to) const {
  std::vector<Observation> kept;
  for (const auto& p : points_) {
    if (from <= p.year && p.year <= to) kept.push_back(p);
  }
  return TimeSeries(std::move(kept), name_, unit_label_);
}

TimeSeries TimeSeries::subset(std::span<const double> years) const {
  std::vector<double> wanted(years.begin(), years.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  std::vector<Observation> kept;
  std::vector<double> missing;
  for (double y : wanted) {
    if (auto v = value_at(y)) {
      kept.push_back({y, *v});
    } else {
      missing.push_back(y);
    }
  }
  if (!missing.empty()) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "requested years absent from series";
    if (!name_.empty()) msg << " '" << name_ << "'";
    msg << ":";
    for (double y : missing) msg << ' ' << y;
    throw MissingYearError(msg.str());
  }
  return TimeSeries(std::move(kept), name_, unit_label_);
}

std::vector<double> evenly_spaced(double from, double to, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {from};
  if (!(from < to)) {
    throw ValidationError("grid requires from < to");
  }
  std::vector<double> grid(count);
  const double span = to - from;
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = from + span * (static_cast<double>(i) /
                             static_cast<double>(count - 1));
  }
  grid.back() = to;
  return grid;
}

std::vector<double> stepped_grid(double from, double to, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ValidationError("grid step must be finite and positive");
  }
  if (!(from <= to)) {
    throw ValidationError("grid requires from <= to");
  }
  const auto n = static_cast<std::size_t>(
      std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = from + static_cast<double>(i) * step;
  }
  return grid;
}

}  // namespace hypergrowth
