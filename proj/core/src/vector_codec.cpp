#include "stepfeat/vector_codec.hpp"

#include <string>

#include "stepfeat/error.hpp"

namespace stepfeat {

namespace {

void check_lw(std::size_t lw) {
  if (lw == 0 || lw > kMaxWindow)
    fail(Errc::invalid_argument,
         "window length " + std::to_string(lw) + " outside [1, " + std::to_string(kMaxWindow) + "]");
}

Code pow5(std::size_t k) {
  Code p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 5;
  return p;
}

}  // namespace

Code code_bound(std::size_t lw) {
  check_lw(lw);
  return (pow5(lw) - 1) / 2;
}

WindowVector::WindowVector(std::vector<Level> digits) : digits_(std::move(digits)) {
  check_lw(digits_.size());
  for (Level d : digits_)
    if (!is_level(d)) fail(Errc::out_of_range, "window digit " + std::to_string(d) + " outside [-2, 2]");
}

WindowVector WindowVector::operator-() const {
  std::vector<Level> neg(digits_.size());
  for (std::size_t k = 0; k < digits_.size(); ++k) neg[k] = static_cast<Level>(-digits_[k]);
  return WindowVector(std::move(neg));
}

VectorCode::VectorCode(Code value, std::size_t lw) : value_(value), lw_(lw) {
  const Code bound = code_bound(lw);
  if (value < -bound || value > bound)
    fail(Errc::out_of_range,
         "code " + std::to_string(value) + " outside [-" + std::to_string(bound) + ", " + std::to_string(bound) + "]");
}

Code encode(std::span<const Level> digits) {
  check_lw(digits.size());
  Code value = 0;
  Code place = 1;
  for (Level d : digits) {
    if (!is_level(d)) fail(Errc::out_of_range, "window digit " + std::to_string(d) + " outside [-2, 2]");
    value += d * place;
    place *= 5;
  }
  return value;
}

VectorCode encode(const WindowVector& v) { return VectorCode(encode(v.digits()), v.lw()); }

WindowVector decode(Code value, std::size_t lw) {
  const VectorCode checked(value, lw);
  std::vector<Level> digits(lw);
  Code rest = checked.value();
  for (auto& d : digits) {
    Code r = rest % 5;  // in (-5, 5)
    if (r > 2) r -= 5;
    if (r < -2) r += 5;
    d = static_cast<Level>(r);
    rest = (rest - r) / 5;
  }
  return WindowVector(std::move(digits));
}

WindowVector decode(const VectorCode& c) { return decode(c.value(), c.lw()); }

std::vector<WindowVector> windows(const StepSignal& s, std::size_t lw) {
  check_lw(lw);
  if (s.size() < lw) fail(Errc::invalid_argument, "step signal is shorter than the window");
  std::vector<WindowVector> out;
  out.reserve(s.size() - lw + 1);
  const auto levels = s.levels();
  for (std::size_t i = 0; i + lw <= s.size(); ++i)
    out.emplace_back(std::vector<Level>(levels.begin() + static_cast<std::ptrdiff_t>(i),
                                        levels.begin() + static_cast<std::ptrdiff_t>(i + lw)));
  return out;
}

std::vector<Code> window_codes(const StepSignal& s, std::size_t lw) {
  check_lw(lw);
  if (s.size() < lw) fail(Errc::invalid_argument, "step signal is shorter than the window");
  const auto levels = s.levels();
  const std::size_t count = s.size() - lw + 1;
  const Code top = pow5(lw - 1);
  std::vector<Code> out(count);
  Code code = encode(levels.first(lw));
  out[0] = code;
  for (std::size_t i = 1; i < count; ++i) {
    // Drop the lowest digit, shift down one place, append the new top digit.
    code = (code - levels[i - 1]) / 5 + levels[i + lw - 1] * top;
    out[i] = code;
  }
  return out;
}

}  // namespace stepfeat
