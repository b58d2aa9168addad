#pragma once

#include "modserre/series.hpp"

namespace modserre {

// How the gluing operator is graded against lambda.
//   graded:  sum_k (k/2) d^2/dp_k^2 + d/dp_{2k}, lambda-exponent preserved.
//            Correct when series are graded by lambda^{2g-2+n}, which every
//            gluing preserves.
//   literal: each k-summand additionally carries lambda^{2k}. This is the
//            form appropriate to a lambda^{2g-2} grading; under the
//            2g-2+n grading it misfiles boundary strata.
enum class DeltaMode { graded, literal };

const char* to_string(DeltaMode mode) noexcept;

// Ordinary exp / log of truncated series.
// ordinary_exp requires a zero constant term; ordinary_log a constant term 1.
SymSeries ordinary_exp(const SymSeries& a);
SymSeries ordinary_log(const SymSeries& g);

// Plethystic exponential exp(sum_{k>=1} psi_k(f) / k).
// Throws PreconditionError when f has a nonzero constant term.
SymSeries exp_pleth(const SymSeries& f);

// Inverse of exp_pleth: sum_{k>=1} mu(k)/k psi_k(log g).
// Throws PreconditionError unless the constant term of g is exactly 1.
SymSeries log_pleth(const SymSeries& g);

SymSeries delta_apply(const SymSeries& f, DeltaMode mode);

// exp(t * Delta) f = sum_m t^m Delta^m f / m!. The sum is finite: every
// application lowers the p-weight by at least 2.
SymSeries exp_delta(const SymSeries& f, DeltaMode mode, const BigRational& t = 1);

} // namespace modserre
