#pragma once

#include <stdexcept>
#include <string>

namespace lieq {

/// A mathematical identity the library guarantees failed to hold at runtime.
/// The command line tool maps this to its own exit code, distinct from bad
/// input, because it indicates a defect rather than a user error.
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation stepped outside the declared truncation degrees. Raising the
/// degree bound is the only remedy; results are never silently truncated.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested shift is critical at the chosen horizon: two comparable
/// Casimir eigenvalues coincide and the triangular solve would divide by
/// zero. The message carries the witness pairs.
struct CriticalityError : std::runtime_error {
  explicit CriticalityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lieq
