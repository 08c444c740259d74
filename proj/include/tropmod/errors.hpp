#pragma once

#include <stdexcept>
#include <string>

namespace tropmod {

/// Invalid input handed to the library (bad graph, bad partition, bad range).
struct InvalidArgument : std::invalid_argument {
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// A cross-check the library performs on itself failed (non-integer orbit
/// count, boundary-of-boundary nonzero, ...).  Callers map this to a distinct
/// exit status because it signals a bug, not a usage error.
struct InternalCheckFailure : std::logic_error {
  explicit InternalCheckFailure(const std::string& what) : std::logic_error(what) {}
};

/// Exact integer arithmetic left the representable range.
struct Overflow : std::overflow_error {
  explicit Overflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace tropmod
