#include <cmath>
#include <numbers>
#include <string>

#include "bernoulli_table.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::specfun {

namespace {

constexpr std::int64_t kPolylogBudget = 50'000'000;

// Li_s(e^μ) = Σ_{k≠s−1} ζ(s−k) μ^k/k! + μ^{s−1}/(s−1)! (H_{s−1} − ln(−μ)), μ < 0 small
Evaluation polylog_log_series(int s, double x) {
    const double mu = std::log(x);
    CompensatedSum sum;
    double err = 0.0;
    double pw = 1.0;  // μ^k / k!
    double last = 0.0;
    for (int k = 0; k < s + 40; ++k) {
        if (k > 0) pw *= mu / k;
        const int n = s - k;
        double term = 0.0;
        if (n >= 2) {
            const Evaluation z = zeta_int(n);
            term = z.value * pw;
            err += z.err_bound * std::abs(pw);
        } else if (n == 1) {
            double h = 0.0;
            for (int i = 1; i <= s - 1; ++i) h += 1.0 / i;
            term = pw * (h - std::log(-mu));
        } else if (n == 0) {
            term = -0.5 * pw;
        } else if ((-n) % 2 == 1) {
            const int j = (1 - n) / 2;  // ζ(1−2j) = −B_{2j}/(2j)
            if (j > 15) break;
            const auto& b = detail::kBernoulliEven[j - 1];
            term = -(b.num / b.den) / (2.0 * j) * pw;
        }
        sum.add(term);
        if (term != 0.0) last = std::abs(term);
        if (n < -1 && last <= 0.01 * kEps * std::abs(sum.value())) break;
    }
    return {sum.value(), err + last + 8.0 * kEps * sum.abs_sum(), s + 40};
}

}  // namespace

Evaluation polylog(int s, double x) {
    if (s < 1) throw DomainError("polylog: order must be >= 1");
    if (std::isnan(x)) throw DomainError("polylog: argument is NaN");
    if (x >= 1.0)
        throw DomainError("polylog: x = " + std::to_string(x) + " >= 1 lies on the cut; use polylog_cut");
    if (x < -1.0) throw DomainError("polylog: x < -1 not supported");
    if (x == 0.0) return {0.0, 0.0, 0};
    if (s == 1) {
        const double v = -std::log1p(-x);
        return {v, 2.0 * kEps * std::abs(v), 0};
    }
    if (x == -1.0) {
        const Evaluation eta = cvz_sum([s](int k) { return std::pow(k + 1.0, -s); }, 40);
        return {-eta.value, eta.err_bound, eta.terms_used};
    }
    if (x > 0.9) return polylog_log_series(s, x);
    const double ax = std::abs(x);
    CompensatedSum sum;
    double pw = 1.0;
    double round = 0.0;
    for (std::int64_t k = 1; k <= kPolylogBudget; ++k) {
        pw *= x;
        const double term = pw / std::pow(static_cast<double>(k), s);
        sum.add(term);
        round += (static_cast<double>(k) + 2.0) * kEps * std::abs(term);
        const double tail =
            std::abs(pw) * ax / ((1.0 - ax) * std::pow(static_cast<double>(k + 1), s));
        if (tail <= 0.125 * kEps * std::abs(sum.value()) || tail < 1e-300) {
            return {sum.value(), tail + round + 2.0 * kEps * sum.abs_sum(), k};
        }
    }
    throw BudgetExceeded("polylog: term budget exhausted", 0.0);
}

ComplexEvaluation polylog_cut(int s, double x, Branch branch) {
    if (s != 2 && s != 3) throw DomainError("polylog_cut: only orders 2 and 3 are supported");
    if (!(x > 1.0)) throw DomainError("polylog_cut: x must be > 1");
    constexpr double pi = std::numbers::pi;
    const double L = std::log(x);
    const Evaluation inv = polylog(s, 1.0 / x);
    const double sign = branch == Branch::upper ? 1.0 : -1.0;
    double re = 0.0;
    double im = 0.0;
    double abs_parts = 0.0;
    if (s == 2) {
        re = pi * pi / 3.0 - 0.5 * L * L - inv.value;
        im = sign * pi * L;
        abs_parts = pi * pi / 3.0 + 0.5 * L * L + std::abs(inv.value);
    } else {
        re = inv.value + pi * pi * L / 3.0 - L * L * L / 6.0;
        im = sign * 0.5 * pi * L * L;
        abs_parts = std::abs(inv.value) + pi * pi * L / 3.0 + L * L * L / 6.0;
    }
    return {{re, im}, inv.err_bound + 8.0 * kEps * (abs_parts + std::abs(im)), inv.terms_used};
}

}  // namespace zetaseries::specfun
