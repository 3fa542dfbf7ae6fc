#pragma once

#include <cstdint>

#include "pwell/core_model.hpp"
#include "pwell/precision.hpp"

namespace pwell {

enum class ShiftMethod { zero_t_closed_form, finite_t_solve };

/// Partition displacement xi that balances the physical forces, with
/// W+ shrunk to l (1 - xi) and W- widened to l (1 + xi).
struct ShiftResult {
  double xi = 0;
  double r_ratio = 0;  // (1 + xi) / (1 - xi)
  double t = 0;
  ShiftMethod method = ShiftMethod::zero_t_closed_form;
  double residual = 0;  // relative force imbalance at xi
};

/// xi = (r - 1)/(r + 1), r = (f^-(0) / f^+(0))^{1/3}.
ShiftResult shift_zero_t(Statistics stat, std::int64_t N);

/// Solves f^-(t (1 + xi)^2) / (1 + xi)^3 = f^+(t (1 - xi)^2) / (1 - xi)^3 for xi in (0, 1):
/// each side keeps its own level unit, so its reduced temperature scales with its width squared.
ShiftResult shift_finite_t(Statistics stat, std::int64_t N, double t, const PrecisionPolicy& policy = {});

/// Redistribution N+ + N- = 2N with equal zero-temperature forces on both sides.
struct TransferResult {
  double N_plus = 0;
  double N_minus = 0;
  std::int64_t N_plus_rounded = 0;
  std::int64_t N_minus_rounded = 0;
};

TransferResult transfer_zero_t(Statistics stat, std::int64_t N);

}  // namespace pwell
