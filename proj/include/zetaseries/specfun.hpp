#pragma once

#include <cstdint>
#include <functional>

#include "zetaseries/constants.hpp"
#include "zetaseries/evaluation.hpp"

namespace zetaseries::specfun {

enum class Branch { upper, lower };

Evaluation zeta_int(int s);
// ζ(s) − 1 without cancellation, s ≥ 2.
Evaluation zeta_minus_one(int s);

Evaluation polylog(int s, double x);
ComplexEvaluation polylog_cut(int s, double x, Branch branch);

Evaluation clausen(int n, double theta);
Evaluation clausen_fourier(int n, double theta, std::int64_t terms);

Evaluation inc_gamma_int(int j, double x);
Evaluation ein(double x);
Evaluation expint_e1(double x);
Evaluation trigamma(double q);

// Cohen–Rodriguez Villegas–Zagier: Σ_{k≥0} (−1)^k a_k from a_0 … a_{n−1},
// a_k ≥ 0 totally monotone. err_bound is 2|a_0|/5.828^n plus rounding.
Evaluation cvz_sum(const std::function<double(int)>& magnitude, int n);

}  // namespace zetaseries::specfun
