#include <cmath>
#include <numbers>
#include <string>

#include "zetaseries/quadrature.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ln(sin(u/2)/(u/2)), smooth on [0, π]
double log_sinc_half(double u) {
    if (u < 1e-4) {
        const double v = u * u;
        return -v / 24.0 - v * v / 2880.0;
    }
    return std::log(std::sin(0.5 * u) / (0.5 * u));
}

// ∫_0^t (t−u)^r/r! Cl₁(u) du with Cl₁(u) = −ln u − ln(sin(u/2)/(u/2)), t ∈ (0, π]
Evaluation cauchy_integral(int r, double t) {
    double fact = 1.0;
    double harmonic = 0.0;
    for (int i = 1; i <= r + 1; ++i) {
        fact *= i;
        harmonic += 1.0 / i;
    }
    const double tp = std::pow(t, r + 1);
    const double analytic = -tp / fact * (std::log(t) - harmonic);
    double rfact = 1.0;
    for (int i = 2; i <= r; ++i) rfact *= i;
    const Evaluation smooth = quad::integrate_adaptive(
        [=](double u) { return std::pow(t - u, r) / rfact * log_sinc_half(u); }, 0.0, t, 1e-17);
    const double v = analytic - smooth.value;
    return {v, smooth.err_bound + 4.0 * kEps * (std::abs(analytic) + std::abs(smooth.value)),
            smooth.terms_used};
}

std::int64_t fourier_terms(int n) {
    // tail Σ_{k>K} k^{−n} ≤ 1/((n−1)K^{n−1}) ≤ 1e-17
    return static_cast<std::int64_t>(std::ceil(std::pow(1e17 / (n - 1), 1.0 / (n - 1))));
}

}  // namespace

Evaluation clausen_fourier(int n, double theta, std::int64_t terms) {
    if (n < 2) throw DomainError("clausen_fourier: order must be >= 2");
    if (terms < 1) throw DomainError("clausen_fourier: need at least one term");
    CompensatedSum sum;
    for (std::int64_t k = 1; k <= terms; ++k) {
        const double kd = static_cast<double>(k);
        const double arg = kd * theta;
        const double trig = (n % 2 == 0) ? std::sin(arg) : std::cos(arg);
        sum.add(trig / std::pow(kd, n));
    }
    const double tail = 1.0 / ((n - 1) * std::pow(static_cast<double>(terms), n - 1));
    return {sum.value(), tail + 8.0 * kEps * sum.abs_sum(), terms};
}

Evaluation clausen(int n, double theta) {
    if (n < 1) throw DomainError("clausen: order must be >= 1");
    if (!std::isfinite(theta)) throw DomainError("clausen: non-finite argument");
    const double r = std::remainder(theta, kTwoPi);
    const double t = std::abs(r);
    const double parity = (n % 2 == 0 && r < 0.0) ? -1.0 : 1.0;

    if (n == 1) {
        if (t == 0.0) throw PoleError("clausen: Cl_1 has a pole at multiples of 2*pi");
        const double v = -std::log(2.0 * std::sin(0.5 * t));
        return {v, 4.0 * kEps * (std::abs(v) + 1.0), 0};
    }
    if (n >= 5) {
        Evaluation e = clausen_fourier(n, t, fourier_terms(n));
        e.value *= parity;
        return e;
    }
    if (t == 0.0) {
        if (n == 3) return {constants().zeta(3), 0.0, 0};
        return {0.0, 0.0, 0};
    }
    // Cl₂ = R₀, Cl₃ = ζ(3) − R₁, Cl₄ = ζ(3)t − R₂
    const Evaluation R = cauchy_integral(n - 2, t);
    double v = 0.0;
    double err = R.err_bound;
    if (n == 2) {
        v = R.value;
    } else if (n == 3) {
        v = constants().zeta(3) - R.value;
        err += 2.0 * kEps * std::abs(v);
    } else {
        v = constants().zeta(3) * t - R.value;
        err += 4.0 * kEps * (constants().zeta(3) * t + std::abs(R.value));
    }
    return {parity * v, err, R.terms_used};
}

}  // namespace zetaseries::specfun
