#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "stepfeat/error.hpp"

namespace stepfeat::testing {

/// Code of the stepfeat::Error thrown by f; records a failure if none is.
inline Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected stepfeat::Error";
  return static_cast<Errc>(-1);
}

}  // namespace stepfeat::testing
