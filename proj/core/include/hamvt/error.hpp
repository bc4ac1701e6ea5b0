#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamvt {

enum class ErrorCode {
  InvalidPermutation,
  DegreeMismatch,
  Overflow,
  NotTransitive,
  SubgroupNotContained,
  InvalidGraph,
  DuplicateEdge,
  OverlappingParts,
  InvalidPartition,
  NotEquitable,
  EmptySelection,
  InvalidSelection,
  NotSemiregular,
  NotAutomorphism,
  InvalidChoice,
  GcdNotOne,
  BadBaseCycle,
  NotCubic,
  UnknownName,
  BadParams,
  DegreeOutOfRange,
  NoneFound,
  ReducibleQuadratic,
  ZeroC,
  MalformedInput,
  GroupDegreeMismatch,
  GroupNotAutomorphisms,
  UnknownFixture,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hamvt
