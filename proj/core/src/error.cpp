#include "stepfeat/error.hpp"

namespace stepfeat {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::io_error: return "i/o error";
    case Errc::malformed_wav: return "malformed WAV";
    case Errc::unsupported_encoding: return "unsupported encoding";
    case Errc::empty_data: return "empty data";
    case Errc::zero_deviation: return "zero deviation";
    case Errc::no_scorable_candidate: return "no scorable candidate";
    case Errc::one_sided_signal: return "one-sided signal";
    case Errc::out_of_range: return "out of range";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::single_class: return "single class";
    case Errc::non_finite_loss: return "non-finite loss";
    case Errc::parse_error: return "parse error";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace stepfeat
