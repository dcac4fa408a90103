#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srpk {

enum class ErrorKind {
  no_closure,
  no_inverse,
  no_convergence,
  shape_mismatch,
  bad_split,
  not_triangular,
  not_symmetric,
  not_idempotent,
  band_violation,
  invalid_interval,
  no_path,
  parse_error,
};

/// Name used in diagnostics, e.g. "NoClosure".
std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is what callers branch on;
/// the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& detail);

}  // namespace srpk
