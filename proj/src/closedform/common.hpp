#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "zetaseries/closedform.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::closedform::detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline double sign_pow(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

inline Evaluation scaled(double c, Evaluation e) {
    e.value *= c;
    e.err_bound = std::abs(c) * e.err_bound + kEps * std::abs(e.value);
    return e;
}

inline Evaluation negated(Evaluation e) {
    e.value = -e.value;
    return e;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

// Li_2(q) … Li_{n+1}(q), index j → Li_{j+1}
inline std::vector<Evaluation> polylog_ladder(int n, double q) {
    std::vector<Evaluation> out(n + 1);
    for (int j = 1; j <= n; ++j) out[j] = specfun::polylog(j + 1, q);
    return out;
}

// (n−1)! ζ(n+1)/w^n − (n−1)! Σ_{j=1}^{n} Li_{j+1}(q)/((n−j)! w^j)
Evaluation polylog_block(int n, double w, const std::vector<Evaluation>& li, const ConstantsTable& c);

// 2(2n−1)! Σ_{j=1}^{n} (−1)^j ((2n+1−2j) Cl_{2j+1}(x) + x Cl_{2j}(x)) / ((2n+1−2j)! x^{2j})
Evaluation clausen_block_k(int n, double x);
// (2n−2)! Σ_{j=1}^{n} (−1)^j ((2n+1−2j) Cl_{2j}(x) − x Cl_{2j−1}(x)) / ((2n+1−2j)! x^{2j−1}),
// with the Cl₁ part of j = 1 left out
Evaluation clausen_block_half(int n, double x);

}  // namespace zetaseries::closedform::detail
