#include <cmath>
#include <string>

#include "zetaseries/specfun.hpp"

namespace zetaseries::specfun {

Evaluation inc_gamma_int(int j, double x) {
    if (j < 1 || j > 170) throw DomainError("inc_gamma_int: order must be in [1, 170]");
    if (!(x >= 0.0)) throw DomainError("inc_gamma_int: x must be >= 0");
    double fact = 1.0;
    for (int i = 2; i < j; ++i) fact *= i;
    CompensatedSum sum;
    if (x < 600.0) {
        double term = 1.0;
        for (int i = 0; i < j; ++i) {
            if (i > 0) term *= x / i;
            sum.add(term);
        }
        const double v = fact * std::exp(-x) * sum.value();
        return {v, 4.0 * (j + 2) * kEps * v, j};
    }
    const double lx = std::log(x);
    for (int i = 0; i < j; ++i) sum.add(std::exp(-x + i * lx - std::lgamma(i + 1.0)));
    const double v = fact * sum.value();
    return {v, 4.0 * (j + 2) * kEps * v + 1e-300, j};
}

Evaluation expint_e1(double x) {
    if (!(x > 0.0)) throw DomainError("expint_e1: x must be > 0");
    if (x <= 1.0) {
        // E1 = −γ − ln x + Ein(x)
        const Evaluation e = ein(x);
        const double v = -constants().euler_gamma - std::log(x) + e.value;
        return {v, e.err_bound + 4.0 * kEps * (constants().euler_gamma + std::abs(std::log(x)) + e.value),
                e.terms_used};
    }
    // modified Lentz on the even continued fraction
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    int i = 1;
    for (; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    const double v = h * std::exp(-x);
    return {v, 16.0 * kEps * v + 1e-300, i};
}

Evaluation ein(double x) {
    if (!(x >= 0.0)) throw DomainError("ein: x must be >= 0");
    if (x == 0.0) return {0.0, 0.0, 0};
    if (x <= 2.0) {
        CompensatedSum sum;
        double a = 1.0;  // x^k / k!
        std::int64_t k = 1;
        for (;; ++k) {
            a *= x / k;
            const double term = a / k;
            sum.add(k % 2 == 1 ? term : -term);
            const double next = a * x / ((k + 1.0) * (k + 1.0));
            if (next <= 0.01 * kEps * std::abs(sum.value())) {
                return {sum.value(), next + 4.0 * kEps * sum.abs_sum(), k};
            }
        }
    }
    const Evaluation e1 = expint_e1(x);
    const double lx = std::log(x);
    const double v = constants().euler_gamma + lx + e1.value;
    return {v, e1.err_bound + 4.0 * kEps * (constants().euler_gamma + lx + e1.value), e1.terms_used};
}

Evaluation trigamma(double q) {
    if (!(q > 0.0)) throw DomainError("trigamma: q must be > 0");
    constexpr int shift = 20;
    CompensatedSum sum;
    for (int n = 0; n < shift; ++n) sum.add(1.0 / ((q + n) * (q + n)));
    const double x = q + shift;
    const double ix = 1.0 / x;
    const double ix2 = ix * ix;
    // 1/x + 1/(2x²) + B₂/x³ + B₄/x⁵ + B₆/x⁷ + B₈/x⁹
    const double tail =
        ix + 0.5 * ix2 +
        ix * ix2 * (1.0 / 6.0 + ix2 * (-1.0 / 30.0 + ix2 * (1.0 / 42.0 + ix2 * (-1.0 / 30.0))));
    sum.add(tail);
    const double remainder = 5.0 / 66.0 * std::pow(ix, 11);
    return {sum.value(), remainder + 4.0 * kEps * sum.abs_sum(), shift + 6};
}

}  // namespace zetaseries::specfun
