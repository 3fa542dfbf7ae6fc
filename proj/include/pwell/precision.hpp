#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>
#include <string>

#include "pwell/errors.hpp"

namespace pwell {

/// Arithmetic and accuracy requirements for the oracle. working_digits picks
/// the number type; escalation multiplies it until max_digits is exceeded.
struct PrecisionPolicy {
  int working_digits = 30;
  int max_digits = 120;
  double escalation_factor = 2.0;
  double target_abs_error = 1e-12;
  double target_rel_error = 1e-20;

  void validate() const;
  /// Next digit count in the escalation sequence (strictly larger).
  int escalate(int digits) const;
  /// max(target_abs_error, target_rel_error * |value|)
  double goal_for(double value) const;
};

using Quad = boost::multiprecision::float128;
using Wide50 = boost::multiprecision::cpp_bin_float_50;
using Wide100 = boost::multiprecision::cpp_bin_float_100;
using Wide150 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<150>>;

/// Digits of the smallest available number type covering `requested`.
/// Throws precision_exhausted above 150.
int tier_digits(int requested);

template <class Real>
struct Tag {
  using type = Real;
};

/// Calls fn(Tag<Real>{}) with the number type matching `digits`.
template <class Fn>
decltype(auto) with_precision(int digits, Fn&& fn) {
  switch (tier_digits(digits)) {
    case 33: return fn(Tag<Quad>{});
    case 50: return fn(Tag<Wide50>{});
    case 100: return fn(Tag<Wide100>{});
    default: return fn(Tag<Wide150>{});
  }
}

/// Round-trip decimal representation of an extended value.
template <class Real>
std::string to_decimal(const Real& x) {
  return x.str(std::numeric_limits<Real>::max_digits10, std::ios_base::scientific);
}

}  // namespace pwell
