#pragma once

#include "zetaseries/oracle.hpp"

namespace zetaseries::oracle::detail {

// ζ(2k) − 1, cached
double zeta_even_minus_one(int k);

double clamp_unit(double x, const char* who);

}  // namespace zetaseries::oracle::detail
