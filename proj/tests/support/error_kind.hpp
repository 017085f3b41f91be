#pragma once

#include "sic/error.hpp"

#include <gtest/gtest.h>

#include <optional>

namespace sic::test {

/// Kind of the sic::Error thrown by `f`, or nothing if it returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace sic::test
