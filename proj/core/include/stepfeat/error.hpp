#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stepfeat {

/// Failure categories surfaced by the library. Each precondition violation
/// named in the module contracts maps onto exactly one code so callers (and
/// tests) can tell them apart without parsing messages.
enum class Errc {
  invalid_argument,
  io_error,
  malformed_wav,
  unsupported_encoding,
  empty_data,
  zero_deviation,
  no_scorable_candidate,
  one_sided_signal,
  out_of_range,
  dimension_mismatch,
  single_class,
  non_finite_loss,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace stepfeat
