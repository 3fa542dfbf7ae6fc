#include "pwell/precision.hpp"

#include <algorithm>
#include <cmath>

namespace pwell {

void PrecisionPolicy::validate() const {
  require(working_digits >= 20, "PrecisionPolicy: working_digits must be >= 20");
  require(working_digits <= max_digits, "PrecisionPolicy: working_digits exceeds max_digits");
  require(max_digits <= 150, "PrecisionPolicy: max_digits above 150 is not supported");
  require(escalation_factor > 1.0, "PrecisionPolicy: escalation factor must exceed 1");
  require(target_abs_error > 0 && std::isfinite(target_abs_error),
          "PrecisionPolicy: target_abs_error must be positive");
  require(target_rel_error > 0 && std::isfinite(target_rel_error),
          "PrecisionPolicy: target_rel_error must be positive");
}

int PrecisionPolicy::escalate(int digits) const {
  return std::max(digits + 1, static_cast<int>(std::ceil(digits * escalation_factor)));
}

double PrecisionPolicy::goal_for(double value) const {
  return std::max(target_abs_error, target_rel_error * std::abs(value));
}

int tier_digits(int requested) {
  if (requested <= 33) return 33;
  if (requested <= 50) return 50;
  if (requested <= 100) return 100;
  if (requested <= 150) return 150;
  fail(ErrorKind::precision_exhausted, "no number type with " + std::to_string(requested) + " digits");
}

}  // namespace pwell
