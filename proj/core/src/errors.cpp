#include "hypergrowth/errors.hpp"

namespace hypergrowth {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::insufficient_data: return "insufficient_data";
    case ErrorKind::fit_rejected: return "fit_rejected";
    case ErrorKind::no_solution: return "no_solution";
    case ErrorKind::no_common_years: return "no_common_years";
    case ErrorKind::year_mismatch: return "year_mismatch";
    case ErrorKind::missing_year: return "missing_year";
  }
  return "unknown";
}

}  // namespace hypergrowth
