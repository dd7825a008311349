#pragma once

#include <stdexcept>
#include <string>

namespace su2 {

// Parameter outside the range an operation is defined on.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Quadrature grid cannot integrate the requested products exactly.
struct GridTooCoarseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BandLimitError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Blocks of mismatched dimension were combined.
struct ConformabilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or unreadable input file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace su2
