#include <cmath>
#include <string>

#include "bernoulli_table.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::specfun {

Evaluation cvz_sum(const std::function<double(int)>& magnitude, int n) {
    if (n < 1) throw DomainError("cvz_sum: need at least one term");
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    CompensatedSum s;
    double a0 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double a = magnitude(k);
        if (k == 0) a0 = std::abs(a);
        c = b - c;
        s.add(c * a);
        b = (static_cast<double>(k + n) * static_cast<double>(k - n) * b) /
            ((k + 0.5) * (k + 1.0));
    }
    const double v = s.value() / d;
    const double err = 2.0 * a0 / std::pow(3.0 + std::sqrt(8.0), n) + 8.0 * kEps * s.abs_sum() / d;
    return {v, err, n};
}

Evaluation zeta_int(int s) {
    if (s < 2) throw DomainError("zeta_int: s = " + std::to_string(s) + " < 2 (pole or outside domain)");
    if (s % 2 == 0 && s <= 30) {
        const double v = detail::zeta_even_from_bernoulli(s / 2);
        return {v, (s + 2) * kEps * v, 0};
    }
    // η(s) = Σ_{k≥0} (−1)^k (k+1)^{−s}
    const Evaluation eta = cvz_sum([s](int k) { return std::pow(k + 1.0, -s); }, 32);
    const double scale = 1.0 / (1.0 - std::ldexp(1.0, 1 - s));
    const double v = eta.value * scale;
    return {v, (eta.err_bound + 2.0 * kEps * std::abs(eta.value)) * scale, eta.terms_used};
}

Evaluation zeta_minus_one(int s) {
    if (s < 2) throw DomainError("zeta_minus_one: s = " + std::to_string(s) + " < 2");
    if (s < 8) {
        const Evaluation z = zeta_int(s);
        return {z.value - 1.0, z.err_bound + kEps, z.terms_used};
    }
    // Σ_{j≥2} j^{−s}; tail after J is ≤ J^{1−s}/(s−1)
    CompensatedSum sum;
    std::int64_t j = 2;
    for (;; ++j) {
        const double t = std::pow(static_cast<double>(j), -s);
        sum.add(t);
        const double tail = std::pow(static_cast<double>(j), 1 - s) / (s - 1);
        if (tail <= 0.25 * kEps * sum.value() || tail == 0.0) {
            return {sum.value(), tail + 4.0 * kEps * sum.value(), j - 1};
        }
    }
}

}  // namespace zetaseries::specfun
