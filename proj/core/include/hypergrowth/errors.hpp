#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypergrowth {

enum class ErrorKind {
  domain,             // evaluation at or past a singularity guard
  parse,              // malformed input text
  validation,         // well-formed input that violates a data invariant
  insufficient_data,  // too few points for the requested estimate
  fit_rejected,       // data does not have the shape of hyperbolic growth
  no_solution,        // level-crossing equation has no admissible root
  no_common_years,    // paired series share no years
  year_mismatch,      // paired series share too few years
  missing_year,       // requested years absent from a series
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. Carries a machine-readable
/// kind and, for file input, the 1-based line the problem was found on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

template <ErrorKind Kind>
class KindedError : public Error {
 public:
  explicit KindedError(const std::string& message,
                       std::optional<std::size_t> line = std::nullopt)
      : Error(Kind, message, line) {}
};

using DomainError = KindedError<ErrorKind::domain>;
using ParseError = KindedError<ErrorKind::parse>;
using ValidationError = KindedError<ErrorKind::validation>;
using InsufficientDataError = KindedError<ErrorKind::insufficient_data>;
using FitRejectedError = KindedError<ErrorKind::fit_rejected>;
using NoSolutionError = KindedError<ErrorKind::no_solution>;
using NoCommonYearsError = KindedError<ErrorKind::no_common_years>;
using YearMismatchError = KindedError<ErrorKind::year_mismatch>;
using MissingYearError = KindedError<ErrorKind::missing_year>;

}  // namespace hypergrowth
