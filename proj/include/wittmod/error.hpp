#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittmod {

enum class ErrorCode {
  ContextMismatch,
  ParameterDomain,
  InvalidArgument,
  InadmissibleTerm,
  RankMismatch,
  CentralOutsideVirasoro,
  Syntax,
  NegativeModuleExponent,
  UnknownVariable,
  Config,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& what, std::size_t position = kNoPosition)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  /// Character offset into parsed text, for syntax-type errors.
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace wittmod
