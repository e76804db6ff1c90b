#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polychora {

/// Base for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLYCHORA_DEFINE_ERROR(Name) \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

/// Quaternion with norm below 1e-12 handed to a unit constructor.
POLYCHORA_DEFINE_ERROR(DegenerateQuaternion);
POLYCHORA_DEFINE_ERROR(AntipodalPair);
POLYCHORA_DEFINE_ERROR(UnknownPolytope);
POLYCHORA_DEFINE_ERROR(ZeroVector);
POLYCHORA_DEFINE_ERROR(NearPole);
POLYCHORA_DEFINE_ERROR(SubdivisionTooDeep);
POLYCHORA_DEFINE_ERROR(ConfigError);
POLYCHORA_DEFINE_ERROR(NonMonotonicTime);
POLYCHORA_DEFINE_ERROR(BadStep);
POLYCHORA_DEFINE_ERROR(InvalidArgument);

#undef POLYCHORA_DEFINE_ERROR

/// Malformed input file. line() is 1-based, 0 when not line-oriented.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg, std::size_t line = 0)
      : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace polychora
