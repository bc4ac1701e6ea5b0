#pragma once

#include <functional>

#include "hamvt/error.hpp"

/// Code of the hamvt::Error thrown by `f`; NoneFound when nothing is thrown.
inline hamvt::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const hamvt::Error& e) {
    return e.code();
  }
  return hamvt::ErrorCode::NoneFound;
}
