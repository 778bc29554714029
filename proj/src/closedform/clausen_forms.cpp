#include <cmath>

#include "common.hpp"

namespace zetaseries::closedform {

using detail::factorial;
using detail::sign_pow;

namespace detail {

Evaluation clausen_block_k(int n, double x) {
    const double f = 2.0 * factorial(2 * n - 1);
    Combination out;
    for (int j = 1; j <= n; ++j) {
        const int r = 2 * n + 1 - 2 * j;
        const double scale = f * sign_pow(j) / (factorial(r) * std::pow(x, 2 * j));
        out.add(scale * r, specfun::clausen(2 * j + 1, x));
        out.add(scale * x, specfun::clausen(2 * j, x));
    }
    return out.result();
}

Evaluation clausen_block_half(int n, double x) {
    const double f = factorial(2 * n - 2);
    Combination out;
    for (int j = 1; j <= n; ++j) {
        const int r = 2 * n + 1 - 2 * j;
        const double scale = f * sign_pow(j) / (factorial(r) * std::pow(x, 2 * j - 1));
        out.add(scale * r, specfun::clausen(2 * j, x));
        if (j >= 2) out.add(-scale * x, specfun::clausen(2 * j - 1, x));
    }
    return out.result();
}

}  // namespace detail

EvaluationPair eval_even_halfint(int n, double z, const ConstantsTable& c) {
    detail::require(n >= 1, "eval_even_halfint: n must be >= 1");
    detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_even_halfint: requires 0 < |z| <= 1");
    const double w = 2.0 * c.pi * std::abs(z);
    const double lw = std::log(w);

    Combination k;
    k.add(-0.5 / (double(n) * n));
    k.add(lw / n);
    k.add(sign_pow(n) * 2.0 * factorial(2 * n - 1) * c.zeta(2 * n + 1) / std::pow(w, 2 * n));
    k.add(-1.0, detail::clausen_block_k(n, w));

    // ln(πz csc πz) together with the Cl₁ part of j = 1 is ln(2πz)
    const double d = 2.0 * n - 1.0;
    Combination h;
    h.add(-1.0 / (d * d));
    h.add(lw / d);
    h.add(-1.0, detail::clausen_block_half(n, w));
    return {k.result(), h.result()};
}

EvaluationPair eval_unit_grids(int n, UnitGrid which, const ConstantsTable& c) {
    detail::require(n >= 1, "eval_unit_grids: n must be >= 1");
    const double two_pi = 2.0 * c.pi;
    const double d = 2.0 * n - 1.0;
    Combination k, h;
    if (which == UnitGrid::z_eq_1) {
        const double l = std::log(two_pi);
        k.add(-0.5 / (double(n) * n));
        k.add(l / n);
        h.add(-1.0 / (d * d));
        h.add(l / d);
        for (int j = 1; j <= n - 1; ++j) {
            const double zj = sign_pow(j) * c.zeta(2 * j + 1) / std::pow(two_pi, 2 * j);
            k.add(-2.0 * factorial(2 * n - 1) * zj / factorial(2 * n - 2 * j));
            h.add(-factorial(2 * n - 2) * zj / factorial(2 * n - 2 * j - 1));
        }
    } else {
        const double l = std::log(c.pi);
        k.add(l / n);
        k.add(-0.5 / (double(n) * n));
        k.add(sign_pow(n) * factorial(2 * n) * (std::ldexp(1.0, 2 * n + 1) - 1.0) * c.zeta(2 * n + 1) /
              (n * std::pow(two_pi, 2 * n)));
        h.add(l / d);
        h.add(-1.0 / (d * d));
        for (int j = 1; j <= n - 1; ++j) {
            const double zj =
                sign_pow(j) * (std::ldexp(1.0, 2 * j) - 1.0) * c.zeta(2 * j + 1) / std::pow(two_pi, 2 * j);
            k.add(2.0 * factorial(2 * n - 1) * zj / factorial(2 * n - 2 * j));
            h.add(factorial(2 * n - 2) * zj / factorial(2 * n - 1 - 2 * j));
        }
    }
    return {k.result(), h.result()};
}

Evaluation eval_clausen_first_order(double z, ClausenSeries which, const ConstantsTable& c) {
    detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_clausen_first_order: requires 0 < |z| <= 1");
    const double w = 2.0 * c.pi * z;
    const double lw = std::log(2.0 * c.pi * std::abs(z));
    const Evaluation cl2 = specfun::clausen(2, w);
    Combination out;
    if (which == ClausenSeries::odd_denom) {
        out.add(-1.0);
        out.add(lw);
        out.add(1.0 / w, cl2);
        return out.result();
    }
    const double den = 2.0 * c.pi * c.pi * z * z;
    out.add(-0.5);
    out.add(lw);
    out.add(-c.zeta(3) / den);
    out.add(1.0 / den, specfun::clausen(3, w));
    out.add(1.0 / (c.pi * z), cl2);
    return out.result();
}

}  // namespace zetaseries::closedform
