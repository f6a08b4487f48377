#include "eulerlab/error.hpp"

namespace eulerlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Param: return "ParamError";
    case ErrorKind::Variant: return "VariantError";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::UnsupportedForm: return "UnsupportedForm";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Step: return "StepError";
    case ErrorKind::FootOutsideDomain: return "FootOutsideDomain";
    case ErrorKind::CflViolation: return "CFLViolation";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Error";
}

}  // namespace eulerlab
