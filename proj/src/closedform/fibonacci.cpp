#include <cmath>

#include "common.hpp"
#include "zetaseries/sequences.hpp"

namespace zetaseries::closedform {

using detail::factorial;
using detail::sign_pow;

namespace {

struct FibPair {
    double fib;
    double lucas;
};

FibPair fib_lucas(int n) {
    double f0 = 0.0, f1 = 1.0, l0 = 2.0, l1 = 1.0;
    for (int i = 0; i < n; ++i) {
        const double f2 = f0 + f1;
        const double l2 = l0 + l1;
        f0 = f1;
        f1 = f2;
        l0 = l1;
        l1 = l2;
    }
    return {f0, l0};
}

Evaluation alternating_p(int n, double z, bool lucas, const ConstantsTable& c) {
    const auto& bc = sequences::binet();
    const double a = bc.alpha, b = bc.beta;
    const double w = 2.0 * c.pi * z;
    const auto la = detail::polylog_ladder(n, std::exp(2.0 * c.pi * b * z));
    const auto lb = detail::polylog_ladder(n, std::exp(-2.0 * c.pi * a * z));
    const double fn1 = factorial(n - 1);
    const double lna = std::log(a);
    Combination out;
    if (!lucas) {
        out.add(c.pi * z / (n + 1.0));
        out.add(-2.0 * lna / n);
        out.add(2.0 * fn1 * std::sinh(n * lna) * c.zeta(n + 1) / std::pow(w, n));
    } else {
        out.add(bc.sqrt5 * c.pi * z / (n + 1.0));
        out.add(-2.0 * std::log(w) / n);
        out.add(-2.0 * fn1 * std::cosh(n * lna) * c.zeta(n + 1) / std::pow(w, n));
        out.add(2.0 / (double(n) * n));
    }
    const double sg = lucas ? 1.0 : -1.0;
    for (int j = 1; j <= n; ++j) {
        const double scale = (lucas ? fn1 : -fn1) / (factorial(n - j) * std::pow(w, j));
        out.add(scale * std::pow(a, j), la[j]);
        out.add(scale * sg * std::pow(-b, j), lb[j]);
    }
    return out.result();
}

Evaluation odd_denominator(double z, bool lucas, const ConstantsTable& c) {
    const auto& bc = sequences::binet();
    const double a = bc.alpha, b = bc.beta;
    const Evaluation ca = specfun::clausen(2, 2.0 * c.pi * a * z);
    const Evaluation cb = specfun::clausen(2, 2.0 * c.pi * b * z);
    Combination out;
    if (!lucas) {
        const double den = 2.0 * bc.sqrt5 * c.pi * z;
        out.add(2.0 * std::log(a) / bc.sqrt5);
        out.add(-b / den, ca);
        out.add(a / den, cb);
    } else {
        const double den = 2.0 * c.pi * z;
        out.add(-2.0);
        out.add(2.0 * std::log(2.0 * c.pi * std::abs(z)));
        out.add(-b / den, ca);
        out.add(-a / den, cb);
    }
    return out.result();
}

Evaluation k_denominator(int n, double z, bool lucas, const ConstantsTable& c) {
    const auto& bc = sequences::binet();
    const double a = bc.alpha, b = bc.beta;
    const double w = 2.0 * c.pi * z;
    const double xa = a * w, xb = b * w;
    const double f = factorial(2 * n - 1);
    const FibPair fl = fib_lucas(2 * n);
    const double s = lucas ? 1.0 : -1.0;
    Combination out;
    if (!lucas) {
        out.add(std::log(a) / n);
        out.add(-sign_pow(n) * bc.sqrt5 * f * fl.fib * c.zeta(2 * n + 1) / std::pow(w, 2 * n));
    } else {
        out.add(-0.5 / (double(n) * n));
        out.add(std::log(w) / n);
        out.add(sign_pow(n) * f * fl.lucas * c.zeta(2 * n + 1) / std::pow(w, 2 * n));
    }
    for (int j = 1; j <= n; ++j) {
        const double odd = -f * sign_pow(j) / (factorial(2 * n - 2 * j) * std::pow(w, 2 * j));
        out.add(odd * std::pow(b, 2 * j), specfun::clausen(2 * j + 1, xa));
        out.add(odd * s * std::pow(a, 2 * j), specfun::clausen(2 * j + 1, xb));
        const double even = f * sign_pow(j) / (factorial(2 * n + 1 - 2 * j) * std::pow(w, 2 * j - 1));
        out.add(even * std::pow(b, 2 * j - 1), specfun::clausen(2 * j, xa));
        out.add(even * s * std::pow(a, 2 * j - 1), specfun::clausen(2 * j, xb));
    }
    return out.result();
}

Evaluation half_denominator(int n, double z, bool lucas, const ConstantsTable& c) {
    const auto& bc = sequences::binet();
    const double w = 2.0 * c.pi * z;
    const double d = 2.0 * n - 1.0;
    Combination out;
    // logarithm merged with the Cl₁ parts of j = 1
    if (!lucas) {
        out.add(2.0 * std::log(bc.alpha) / d);
        out.add(-1.0, detail::clausen_block_half(n, bc.alpha * w));
        out.add(1.0, detail::clausen_block_half(n, bc.beta * w));
    } else {
        out.add(-2.0 / (d * d));
        out.add(2.0 * std::log(w) / d);
        out.add(-1.0, detail::clausen_block_half(n, bc.alpha * w));
        out.add(-1.0, detail::clausen_block_half(n, bc.beta * w));
    }
    return out.result();
}

}  // namespace

Evaluation eval_fibonacci_family(int n, double z, FibSeries which, const ConstantsTable& c) {
    detail::require(n >= 1, "eval_fibonacci_family: n must be >= 1");
    const double lim = (1.0 / sequences::binet().alpha) * (1.0 + 1e-14);
    detail::require(z != 0.0 && std::abs(z) <= lim, "eval_fibonacci_family: requires 0 < |z| <= 1/alpha");
    const double az = std::abs(z);
    switch (which) {
        case FibSeries::fib_alternating:
            return alternating_p(n, az, false, c);
        case FibSeries::lucas_alternating:
            return alternating_p(n, az, true, c);
        case FibSeries::fib_odd:
            return odd_denominator(z, false, c);
        case FibSeries::lucas_odd:
            return odd_denominator(z, true, c);
        case FibSeries::fib_k:
            return k_denominator(n, az, false, c);
        case FibSeries::lucas_k:
            return k_denominator(n, az, true, c);
        case FibSeries::fib_half:
            return half_denominator(n, az, false, c);
        case FibSeries::lucas_half:
            return half_denominator(n, az, true, c);
    }
    throw DomainError("eval_fibonacci_family: unknown series");
}

}  // namespace zetaseries::closedform
