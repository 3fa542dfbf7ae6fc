#include "pwell/errors.hpp"

namespace pwell {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::no_sign_change: return "NoSignChange";
    case ErrorKind::max_iterations: return "MaxIterations";
    case ErrorKind::bound_unavailable: return "BoundUnavailable";
    case ErrorKind::non_convergent: return "NonConvergent";
    case ErrorKind::divergent_integral: return "DivergentIntegral";
    case ErrorKind::bracket_failure: return "BracketFailure";
    case ErrorKind::precision_exhausted: return "PrecisionExhausted";
    case ErrorKind::pole: return "Pole";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::not_unimodal: return "NotUnimodal";
    case ErrorKind::step_not_found: return "StepNotFound";
  }
  return "Error";
}

}  // namespace pwell
