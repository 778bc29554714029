#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "common.hpp"
#include "zetaseries/sequences.hpp"

namespace zetaseries::closedform {

namespace detail {

Evaluation polylog_block(int n, double w, const std::vector<Evaluation>& li, const ConstantsTable& c) {
    const double fn1 = factorial(n - 1);
    Combination out;
    out.add(fn1 * c.zeta(n + 1) / std::pow(w, n));
    for (int j = 1; j <= n; ++j) out.add(-fn1 / (factorial(n - j) * std::pow(w, j)), li[j]);
    return out.result();
}

}  // namespace detail

using detail::factorial;

namespace {

void require_P_args(int n, double z, const char* who) {
    detail::require(n >= 1, std::string(who) + ": n must be >= 1");
    detail::require(z > 0.0 && z <= 1.0, std::string(who) + ": real form requires 0 < z <= 1");
}

// Σ_{k>K} (a + ln k)/k^s by Euler–Maclaurin from K
Evaluation log_power_tail(double a, int s, double K) {
    constexpr std::array<double, 5> kB = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66};
    const double L = a + std::log(K);
    const double sm1 = s - 1.0;
    Combination out;
    out.add(std::pow(K, -sm1) * (L / sm1 + 1.0 / (sm1 * sm1)));
    out.add(-0.5 * std::pow(K, -s) * L);
    // f^{(r)}(x) = x^{−s−r} (c_r L + d_r)
    double cr = 1.0, dr = 0.0, t = s;
    double fact = 1.0;
    double last = 0.0;
    for (int r = 1; r <= 9; ++r) {
        const double cn = -t * cr;
        const double dn = cr - t * dr;
        cr = cn;
        dr = dn;
        t += 1.0;
        if (r % 2 == 1) {
            const int i = (r + 1) / 2;
            fact *= (2.0 * i - 1.0) * (2.0 * i);
            const double term = kB[i - 1] / fact * std::pow(K, -t) * (cr * L + dr);
            if (i <= 4)
                out.add(-term);
            else
                last = std::abs(term);
        }
    }
    return out.add_error(last).result();
}

// upper bound for Σ_{k>K} (E1(wk) + Σ_j Γ(j,wk)/j!)/k^{m+1}
double exponential_remainder(int m, double w, double K) {
    auto g = [m](double x) {
        double s = 1.0 / x;
        double pw = 1.0, partial = 0.0;
        for (int j = 1; j <= m; ++j) {
            partial += pw;
            s += partial / j;
            pw *= x / j;
        }
        return std::exp(-x) * s;
    };
    const double k1 = K + 1.0;
    const double first = g(w * k1) / std::pow(k1, m + 1);
    const double rho = std::exp(-w) * std::pow(1.0 + 1.0 / k1, m);
    if (rho >= 1.0) return std::numeric_limits<double>::infinity();
    return first / (1.0 - rho);
}

// Σ_k (Ein(wk) + Σ_{j=1}^m Γ(j,wk)/j!)/k^{m+1}
Evaluation q_ksum(int m, double w, std::int64_t budget, double tol, const ConstantsTable& c) {
    double K = 30.0;
    double rem = exponential_remainder(m, w, K);
    while (rem > 0.1 * tol && K < static_cast<double>(budget)) {
        K = std::min(static_cast<double>(budget), std::ceil(1.25 * K + 1.0));
        rem = exponential_remainder(m, w, K);
    }
    if (rem > tol) throw BudgetExceeded("Q: k budget too small for the requested tolerance", rem);

    const int s = m + 1;
    CompensatedSum head;
    double err = 0.0;
    std::int64_t terms = 0;
    const auto Kn = static_cast<std::int64_t>(K);
    for (std::int64_t k = 1; k <= Kn; ++k) {
        const double x = w * static_cast<double>(k);
        const Evaluation e = specfun::ein(x);
        double v = e.value;
        err += e.err_bound;
        for (int j = 1; j <= m; ++j) {
            const Evaluation g = specfun::inc_gamma_int(j, x);
            v += g.value / factorial(j);
            err += g.err_bound / factorial(j) + kEps * std::abs(g.value / factorial(j));
        }
        const double scale = std::pow(static_cast<double>(k), -s);
        head.add(v * scale);
        err += 4.0 * kEps * std::abs(v * scale);
        terms += 1;
    }
    const Evaluation tail = log_power_tail(c.euler_gamma + std::log(w), s, K);
    return {head.value() + tail.value, err + tail.err_bound + rem + 4.0 * kEps * head.abs_sum(),
            terms + tail.terms_used};
}

}  // namespace

Evaluation eval_P(int n, double z, const ConstantsTable& c) {
    require_P_args(n, z, "eval_P");
    const double w = 2.0 * c.pi * z;
    const auto li = detail::polylog_ladder(n, std::exp(-w));
    Combination out;
    out.add(-1.0 / (double(n) * n));
    out.add(-c.pi * z / (n + 1.0));
    out.add(std::log(w) / n);
    out.add(1.0, detail::polylog_block(n, w, li, c));
    return out.result();
}

Evaluation eval_Pmn(int m, int n, double z, const ConstantsTable& c) {
    detail::require(m >= 1 && n >= 1, "eval_Pmn: m and n must be >= 1");
    if (m == n) throw DomainError("eval_Pmn: requires m != n (use eval_Q)");
    detail::require(z > 0.0 && z <= 1.0, "eval_Pmn: real form requires 0 < z <= 1");
    const double w = 2.0 * c.pi * z;
    const auto li = detail::polylog_ladder(std::max(m, n), std::exp(-w));
    const double mn = double(m) * n;
    Combination out;
    out.add((m + n) / (mn * mn));
    out.add(c.pi * z / ((m + 1.0) * (n + 1.0)));
    out.add(-std::log(w) / mn);
    out.add(1.0 / (m - n), detail::polylog_block(m, w, li, c));
    out.add(-1.0 / (m - n), detail::polylog_block(n, w, li, c));
    return out.result();
}

Evaluation eval_Q(int m, double z, std::int64_t k_budget, double tol, const ConstantsTable& c) {
    detail::require(m >= 1, "eval_Q: m must be >= 1");
    detail::require(z > 0.0 && z <= 1.0, "eval_Q: requires 0 < z <= 1");
    detail::require(tol > 0.0, "eval_Q: tol must be > 0");
    const double w = 2.0 * c.pi * z;
    const auto li = detail::polylog_ladder(m, std::exp(-w));
    const double fm1 = factorial(m - 1);
    const double wm = std::pow(w, m);
    const double m2 = double(m) * m;
    Combination out;
    out.add(2.0 / (m2 * m));
    out.add(c.pi * z / ((m + 1.0) * (m + 1.0)));
    out.add(-std::log(w) / m2);
    out.add(fm1 * c.zeta(m + 1) * sequences::harmonic(m - 1) / wm);
    for (int j = 1; j <= m; ++j) out.add(factorial(m) / m2 / (factorial(m - j) * std::pow(w, j)), li[j]);
    out.add(-fm1 / wm, q_ksum(m, w, k_budget, 0.5 * tol * wm / fm1, c));
    return out.result();
}

Evaluation eval_S1(double z, const ConstantsTable& c) {
    detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_S1: requires 0 < |z| <= 1");
    const double az = std::abs(z);
    const double w = 2.0 * c.pi * az;
    Combination out;
    out.add(-c.pi * az);
    out.add(std::log(w));
    out.add(-std::log1p(-std::exp(-w)));
    return out.result();
}

Evaluation eval_S2(int n, double z, const ConstantsTable& c) {
    detail::require(n >= 1, "eval_S2: n must be >= 1");
    detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_S2: requires 0 < |z| <= 1");
    Combination out;
    out.add(0.5, eval_S1(z, c));
    out.add(-0.5 * n, eval_P(n, std::abs(z), c));
    return out.result();
}

Evaluation eval_S3(int m, double z, const ConstantsTable& c) {
    detail::require(m >= 1, "eval_S3: m must be >= 1");
    detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_S3: requires 0 < |z| <= 1");
    Combination out;
    out.add(0.5 / m, eval_S1(z, c));
    out.add(-1.0 / m, eval_S2(m, z, c));
    out.add(0.5 * m, eval_Q(m, std::abs(z), 20000, 1e-13, c));
    return out.result();
}

}  // namespace zetaseries::closedform

namespace zetaseries::closedform {

namespace {

// (v−1)! Σ_{j=1}^{⌊v/2⌋} (−1)^j ζ(2j+1)/((v−2j)! (2π)^{2j})
double odd_zeta_sum(int v, const ConstantsTable& c) {
    const double two_pi = 2.0 * c.pi;
    double s = 0.0;
    for (int j = 1; j <= v / 2; ++j)
        s += detail::sign_pow(j) * c.zeta(2 * j + 1) / (factorial(v - 2 * j) * std::pow(two_pi, 2 * j));
    return factorial(v - 1) * s;
}

}  // namespace

Evaluation eval_Pmn_unit(int m, int n, const ConstantsTable& c) {
    detail::require(m >= 1 && n >= 1, "eval_Pmn_unit: m and n must be >= 1");
    if (m == n) throw DomainError("eval_Pmn_unit: requires m != n");
    if (m % 2 == 1 && n % 2 == 0) std::swap(m, n);
    const double two_pi = 2.0 * c.pi;
    const double mn = double(m) * n;
    Combination out;
    out.add(-(m + n) / (mn * mn));
    out.add(std::log(two_pi) / mn);
    if (m % 2 == 0) {
        // i^m = (−1)^{m/2}; for two even indices the n-term enters as well
        out.add(-detail::sign_pow(m / 2) * factorial(m - 1) * c.zeta(m + 1) / ((m - n) * std::pow(two_pi, m)));
        if (n % 2 == 0)
            out.add(detail::sign_pow(n / 2) * factorial(n - 1) * c.zeta(n + 1) / ((m - n) * std::pow(two_pi, n)));
    }
    out.add(odd_zeta_sum(m, c) / (m - n));
    out.add(-odd_zeta_sum(n, c) / (m - n));
    return out.result();
}

}  // namespace zetaseries::closedform
