#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

enum class ErrorKind {
  Domain,
  Param,
  Variant,
  MissingField,
  UnsupportedForm,
  NoConvergence,
  Step,
  FootOutsideDomain,
  CflViolation,
  DegenerateFit,
  Config,
  Parse,
  Overflow,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C layer can map
// it to a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace eulerlab
