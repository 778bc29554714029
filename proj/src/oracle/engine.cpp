#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "engine_detail.hpp"
#include "jet.hpp"
#include "zetaseries/quadrature.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::oracle {

namespace detail {

double zeta_even_minus_one(int k) {
    static const std::vector<double> table = [] {
        std::vector<double> t(2049, 0.0);
        for (int i = 1; i <= 2048; ++i) {
            t[i] = specfun::zeta_minus_one(2 * i).value;
            if (t[i] == 0.0) break;
        }
        return t;
    }();
    if (k < 1) throw DomainError("zeta_even_minus_one: k must be >= 1");
    return k < static_cast<int>(table.size()) ? table[k] : 0.0;
}

double clamp_unit(double x, const char* who) {
    const double ax = std::abs(x);
    if (ax > 1.0 + 1e-14) throw DomainError(std::string(who) + ": |x| > 1, series diverges");
    return std::min(ax, 1.0);
}

}  // namespace detail

namespace {

constexpr double kKummerThreshold = 0.95;
constexpr double kZeta2 = 1.6449340668482264;

double sigma(SignConvention s, std::int64_t k) {
    return (s == SignConvention::alternating && (k % 2 == 1)) ? -1.0 : 1.0;
}

// Σ_{k≥K} f(k) for f(k) = x^{2k} r(k), x ∈ (0, 1], by Euler–Maclaurin with four corrections.
Evaluation euler_maclaurin_tail(double ax, const RationalWeight& r, std::int64_t K) {
    using detail::Jet;
    constexpr int N = 10;
    const double lambda = 2.0 * std::log(ax);
    const double Kd = static_cast<double>(K);
    const double base = std::exp(lambda * Kd) * r(Kd);
    Jet<N> jet = Jet<N>::exp_linear(lambda);
    for (const auto& f : r.factors()) jet = jet * Jet<N>::inverse_power(f.a / (f.a * Kd + f.b), f.power);

    const Evaluation integral = quad::integrate_adaptive(
        [&](double t) {
            const double y = Kd / t;
            return std::exp(lambda * y) * r(y) * Kd / (t * t);
        },
        0.0, 1.0, 1e-18);

    // B_2/2!, B_4/4!, B_6/6!, B_8/8!, B_10/10!
    constexpr double b[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
                            1.0 / 47900160.0};
    CompensatedSum s;
    s.add(integral.value);
    s.add(0.5 * base);
    for (int i = 0; i < 4; ++i) s.add(-b[i] * base * jet.derivative(2 * i + 1));
    const double remainder = 2.0 * std::abs(b[4] * base * jet.derivative(9));
    return {s.value(), integral.err_bound + remainder + 8.0 * kEps * s.abs_sum(),
            integral.terms_used + 5};
}

struct DirectResult {
    double value;
    double rounding;
    double tail;
    std::int64_t terms;
};

}  // namespace

Evaluation power_weighted_sum(SignConvention sign, double x, const RationalWeight& r, double tol,
                              const SumOptions& options) {
    if (!(tol > 0.0)) throw DomainError("power_weighted_sum: tolerance must be > 0");
    const double ax = detail::clamp_unit(x, "power_weighted_sum");
    if (ax == 0.0) return {0.0, 0.0, 0};
    const int deg = r.degree();
    if (ax == 1.0 && sign == SignConvention::alternating && deg < 1)
        throw DomainError("power_weighted_sum: alternating series with non-decaying terms diverges");
    if (ax == 1.0 && sign == SignConvention::positive && deg < 2)
        throw DomainError("power_weighted_sum: positive series with 1/k-type decay diverges at |x| = 1");

    const double x2 = ax * ax;
    const std::int64_t direct_cap = std::min<std::int64_t>(options.term_budget, 20000);
    bool direct = ax < 1.0;
    if (direct) {
        const double k_est = std::log(0.25 * tol * (1.0 - x2)) / std::log(x2);
        direct = k_est < static_cast<double>(direct_cap);
    }
    if (direct) {
        CompensatedSum s;
        double pw = 1.0;
        double rounding = 0.0;
        for (std::int64_t k = 1; k <= options.term_budget; ++k) {
            pw *= x2;
            const double term = sigma(sign, k) * pw * r(static_cast<double>(k));
            s.add(term);
            rounding += (static_cast<double>(k) + 8.0) * kEps * std::abs(term);
            const double tail = pw * x2 * r(static_cast<double>(k + 1)) / (1.0 - x2);
            if (tail <= 0.5 * tol) return {s.value(), tail + rounding + 2.0 * kEps * s.abs_sum(), k};
        }
        throw BudgetExceeded("power_weighted_sum: term budget exhausted", 0.0);
    }

    if (sign == SignConvention::alternating) {
        // Σ_{k≥1} (−1)^k x^{2k} r(k) = −Σ_{j≥0} (−1)^j a_j, a_j = x^{2(j+1)} r(j+1)
        auto a = [&](int j) { return std::pow(x2, j + 1) * r(j + 1.0); };
        const double a0 = a(0);
        int n = static_cast<int>(std::ceil(std::log(8.0 * a0 / tol) / std::log(3.0 + std::sqrt(8.0))));
        n = std::clamp(n, 8, 64);
        const Evaluation e = specfun::cvz_sum(a, n);
        if (e.err_bound > tol) throw BudgetExceeded("power_weighted_sum: CVZ bound above tolerance", e.err_bound);
        return {-e.value, e.err_bound, e.terms_used};
    }

    // positive: direct head, Euler–Maclaurin tail
    double best = INFINITY;
    for (std::int64_t K = 100; K <= options.term_budget; K *= 4) {
        CompensatedSum s;
        double rounding = 0.0;
        for (std::int64_t k = 1; k < K; ++k) {
            const double term = std::pow(x2, static_cast<double>(k)) * r(static_cast<double>(k));
            s.add(term);
            rounding += 8.0 * kEps * term;
        }
        const Evaluation tail = euler_maclaurin_tail(ax, r, K);
        s.add(tail.value);
        const double err = tail.err_bound + rounding + 2.0 * kEps * s.abs_sum();
        best = std::min(best, err);
        if (err <= tol) return {s.value(), err, K - 1 + tail.terms_used};
    }
    throw BudgetExceeded("power_weighted_sum: Euler-Maclaurin tail bound above tolerance", best);
}

Evaluation zeta_weighted_sum(SignConvention sign, double x, const RationalWeight& r, double tol,
                             const SumOptions& options) {
    if (!(tol > 0.0)) throw DomainError("zeta_weighted_sum: tolerance must be > 0");
    const double ax = detail::clamp_unit(x, "zeta_weighted_sum");
    if (ax == 0.0) return {0.0, 0.0, 0};
    const double x2 = ax * ax;

    if (ax < kKummerThreshold) {
        CompensatedSum s;
        double pw = 1.0;
        double rounding = 0.0;
        for (std::int64_t k = 1; k <= options.term_budget; ++k) {
            pw *= x2;
            const double zeta = 1.0 + detail::zeta_even_minus_one(static_cast<int>(std::min<std::int64_t>(k, 4096)));
            const double term = sigma(sign, k) * zeta * pw * r(static_cast<double>(k));
            s.add(term);
            rounding += (static_cast<double>(k) + 8.0) * kEps * std::abs(term);
            const double tail = kZeta2 * r(static_cast<double>(k + 1)) * pw * x2 / (1.0 - x2);
            if (tail <= 0.5 * tol) return {s.value(), tail + rounding + 2.0 * kEps * s.abs_sum(), k};
        }
        throw BudgetExceeded("zeta_weighted_sum: term budget exhausted", 0.0);
    }

    // Kummer split ζ(2k) = 1 + (ζ(2k) − 1)
    const Evaluation one = power_weighted_sum(sign, ax, r, 0.5 * tol, options);
    CompensatedSum s;
    double pw = 1.0;
    double rounding = 0.0;
    const double q = 0.25 * x2;
    for (std::int64_t k = 1; k <= options.term_budget; ++k) {
        pw *= x2;
        const double term = sigma(sign, k) * detail::zeta_even_minus_one(static_cast<int>(std::min<std::int64_t>(k, 4096))) *
                            pw * r(static_cast<double>(k));
        s.add(term);
        rounding += (static_cast<double>(k) + 8.0) * kEps * std::abs(term);
        const double tail = 2.58 * r(static_cast<double>(k + 1)) * std::pow(q, static_cast<double>(k + 1)) / (1.0 - q);
        if (tail <= 0.25 * tol) {
            const double v = s.value() + one.value;
            return {v, one.err_bound + tail + rounding + 2.0 * kEps * (s.abs_sum() + std::abs(one.value)),
                    one.terms_used + k};
        }
    }
    throw BudgetExceeded("zeta_weighted_sum: term budget exhausted", 0.0);
}

Evaluation cvz_accelerate(const std::function<double(int)>& terms, int count) {
    if (count < 1) throw DomainError("cvz_accelerate: count must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        c[k] = terms(k);
        if (k > 0 && c[k] * c[k - 1] > 0.0)
            throw ContractViolation("cvz_accelerate: terms " + std::to_string(k - 1) + " and " +
                                    std::to_string(k) + " have the same sign");
    }
    const double s0 = c[0] < 0.0 ? -1.0 : 1.0;
    Evaluation e = specfun::cvz_sum([&](int k) { return std::abs(c[k]); }, count);
    e.value *= s0;
    return e;
}

}  // namespace zetaseries::oracle
