#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "engine_detail.hpp"
#include "zetaseries/oracle.hpp"
#include "zetaseries/sequences.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyName, 19> kFamilyNames = {{
    {Family::P, "P"},           {Family::Pmn, "Pmn"},       {Family::Q, "Q"},
    {Family::S1, "S1"},         {Family::S2, "S2"},         {Family::S3, "S3"},
    {Family::Ppow, "Ppow"},     {Family::Pmnpow, "Pmnpow"}, {Family::Qpow, "Qpow"},
    {Family::Bern7, "Bern7"},   {Family::Bern8, "Bern8"},   {Family::Bern9, "Bern9"},
    {Family::BernGF, "BernGF"}, {Family::HalfInt, "HalfInt"}, {Family::FibP, "FibP"},
    {Family::LucP, "LucP"},     {Family::FibCl, "FibCl"},   {Family::LucCl, "LucCl"},
    {Family::DilogSum, "DilogSum"},
}};

int need(const std::optional<int>& v, const char* name, const SeriesSpec& s) {
    if (!v) throw DomainError(std::string(to_string(s.family)) + ": parameter " + name + " is required");
    return *v;
}

void need_positive(const std::optional<int>& v, const char* name, const SeriesSpec& s) {
    if (need(v, name, s) < 1)
        throw DomainError(std::string(to_string(s.family)) + ": parameter " + name + " must be >= 1");
}

void need_unit_disc(const SeriesSpec& s) {
    if (!(s.z != 0.0 && std::abs(s.z) <= 1.0))
        throw DomainError(std::string(to_string(s.family)) + ": requires 0 < |z| <= 1");
}

RationalWeight weight_for(const SeriesSpec& s) {
    switch (s.family) {
        case Family::P:
        case Family::FibP:
        case Family::LucP:
        case Family::FibCl:
        case Family::LucCl:
            return {1.0, {{1, 0, 1}, {2, double(*s.n), 1}}};
        case Family::Pmn:
            return {1.0, {{1, 0, 1}, {2, double(*s.m), 1}, {2, double(*s.n), 1}}};
        case Family::Q:
            return {1.0, {{1, 0, 1}, {2, double(*s.m), 2}}};
        case Family::S1:
            return {1.0, {{1, 0, 1}}};
        case Family::S2:
            return {1.0, {{2, double(*s.n), 1}}};
        case Family::S3:
            return {1.0, {{2, double(*s.m), 2}}};
        case Family::Ppow:
            return {1.0, {{1, 0, *s.p}, {2, double(*s.n), 1}}};
        case Family::Pmnpow:
            return {1.0, {{1, 0, *s.p}, {2, double(*s.m), 1}, {2, double(*s.n), 1}}};
        case Family::Qpow:
            return {1.0, {{1, 0, *s.p}, {2, double(*s.m), 2}}};
        case Family::HalfInt:
            if (*s.n == 0) return {1.0, {{2, 1, 1}}};
            return {1.0, {{2, 1, 1}, {1, 1, 1}}};
        default:
            break;
    }
    throw DomainError("weight_for: family has no plain rational weight");
}

Evaluation scaled(double c, const Evaluation& e) {
    return {c * e.value, std::abs(c) * e.err_bound + kEps * std::abs(c * e.value), e.terms_used};
}

// Σ σ_k ζ(2k) w_k z^{2k} r(k) with w_k = F_{2k} or L_{2k}
Evaluation fib_lucas_sum(bool lucas, SignConvention sign, double z, const RationalWeight& r, double tol,
                         const SumOptions& opt) {
    const auto& bc = sequences::binet();
    const double az = std::min(bc.alpha * std::abs(z), 1.0);
    const double z2a = az * az;
    auto weighted = [&](std::int64_t k) {
        const auto fl = sequences::fib_lucas_weighted(static_cast<int>(k), z);
        return lucas ? fl.lucas : fl.fib;
    };
    auto sg = [&](std::int64_t k) { return (sign == SignConvention::alternating && k % 2 == 1) ? -1.0 : 1.0; };

    CompensatedSum s;
    double rounding = 0.0;
    if (az < 0.95) {
        for (std::int64_t k = 1; k <= opt.term_budget; ++k) {
            const double zeta = 1.0 + detail::zeta_even_minus_one(static_cast<int>(std::min<std::int64_t>(k, 4096)));
            const double term = sg(k) * zeta * weighted(k) * r(double(k));
            s.add(term);
            rounding += 16.0 * kEps * std::abs(term);
            const double tail = 2.0 * 1.6449340668482264 * r(double(k + 1)) *
                                std::pow(z2a, double(k + 1)) / (1.0 - z2a);
            if (tail <= 0.5 * tol) return {s.value(), tail + rounding + 2.0 * kEps * s.abs_sum(), k};
        }
        throw BudgetExceeded("fib_lucas_sum: term budget exhausted", 0.0);
    }
    const Evaluation pa = power_weighted_sum(sign, bc.alpha * std::abs(z), r, 0.25 * tol, opt);
    const Evaluation pb = power_weighted_sum(sign, bc.beta * z, r, 0.25 * tol, opt);
    double one = 0.0;
    if (lucas)
        one = pa.value + pb.value;
    else
        one = (pa.value - pb.value) / bc.sqrt5;
    const double one_err = pa.err_bound + pb.err_bound + 4.0 * kEps * (std::abs(pa.value) + std::abs(pb.value));
    const double q = 0.25 * z2a;
    for (std::int64_t k = 1; k <= opt.term_budget; ++k) {
        const double term = sg(k) * detail::zeta_even_minus_one(static_cast<int>(std::min<std::int64_t>(k, 4096))) *
                            weighted(k) * r(double(k));
        s.add(term);
        rounding += 16.0 * kEps * std::abs(term);
        const double tail = 2.0 * 2.58 * r(double(k + 1)) * std::pow(q, double(k + 1)) / (1.0 - q);
        if (tail <= 0.25 * tol) {
            return {s.value() + one, one_err + tail + rounding + 2.0 * kEps * s.abs_sum(),
                    k + pa.terms_used + pb.terms_used};
        }
    }
    throw BudgetExceeded("fib_lucas_sum: term budget exhausted", 0.0);
}

// Σ_t Li_p(−(z/t)²) with the two leading powers of (z/t)² summed in closed form
Evaluation dilog_sum(int p, double z, double tol, const SumOptions& opt) {
    const double z2 = z * z;
    const double two_p = std::ldexp(1.0, p);
    CompensatedSum s;
    double err = 0.0;
    std::int64_t evals = 0;
    for (std::int64_t t = 1; t <= opt.dilog_budget; ++t) {
        const double td = static_cast<double>(t);
        const double u = z2 / (td * td);
        double g = 0.0;
        if (u >= 0.25) {
            const Evaluation li = specfun::polylog(p, -u);
            g = li.value + u - u * u / two_p;
            err += li.err_bound + 4.0 * kEps * (std::abs(li.value) + u);
            evals += li.terms_used;
        } else {
            // Σ_{j≥3} (−u)^j / j^p
            CompensatedSum inner;
            double pw = u * u;
            for (int j = 3;; ++j) {
                pw *= -u;
                const double term = pw / std::pow(double(j), p);
                inner.add(term);
                const double next = std::abs(pw) * u / std::pow(j + 1.0, p);
                if (next <= 0.01 * kEps * std::abs(inner.value()) || next < 1e-300) {
                    err += next + 4.0 * kEps * inner.abs_sum();
                    evals += j;
                    break;
                }
            }
            g = inner.value();
        }
        s.add(g);
        // Σ_{t'>t} |g(t')| ≤ Σ u_{t'}³/3^p ≤ z⁶/(5·3^p·t⁵)
        const double tail = z2 * z2 * z2 / (5.0 * std::pow(3.0, p) * std::pow(td, 5));
        if (tail <= 0.5 * tol) {
            const Evaluation z2v = specfun::zeta_int(2);
            const Evaluation z4v = specfun::zeta_int(4);
            s.add(-z2 * z2v.value);
            s.add(z2 * z2 * z4v.value / two_p);
            const double e = err + tail + z2 * z2v.err_bound + z2 * z2 * z4v.err_bound + 4.0 * kEps * s.abs_sum();
            return {s.value(), e, evals + t};
        }
    }
    throw BudgetExceeded("dilog_sum: t budget exhausted",
                         z2 * z2 * z2 / (5.0 * std::pow(3.0, p) * std::pow(double(opt.dilog_budget), 5)));
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& fn : kFamilyNames)
        if (fn.family == f) return fn.name;
    return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
    for (const auto& fn : kFamilyNames)
        if (fn.name == s) return fn.family;
    return std::nullopt;
}

std::string_view to_string(SignConvention s) {
    return s == SignConvention::alternating ? "alternating" : "positive";
}

void SeriesSpec::validate() const {
    if (!std::isfinite(z)) throw DomainError("z must be finite");
    const std::string fam(to_string(family));
    switch (family) {
        case Family::P:
        case Family::S2:
            need_positive(n, "n", *this);
            need_unit_disc(*this);
            break;
        case Family::Pmn:
            need_positive(m, "m", *this);
            need_positive(n, "n", *this);
            if (*m == *n) throw DomainError("Pmn: requires m != n (use Q for m = n)");
            need_unit_disc(*this);
            break;
        case Family::Q:
            need_positive(m, "m", *this);
            if (!(z > 0.0 && z <= 1.0)) throw DomainError("Q: requires 0 < z <= 1");
            break;
        case Family::S1:
            need_unit_disc(*this);
            break;
        case Family::S3:
            need_positive(m, "m", *this);
            need_unit_disc(*this);
            break;
        case Family::Ppow:
            need_positive(n, "n", *this);
            need_positive(p, "p", *this);
            need_unit_disc(*this);
            break;
        case Family::Pmnpow:
            need_positive(m, "m", *this);
            need_positive(n, "n", *this);
            need_positive(p, "p", *this);
            if (*m == *n) throw DomainError("Pmnpow: requires m != n");
            need_unit_disc(*this);
            break;
        case Family::Qpow:
            need_positive(m, "m", *this);
            need_positive(p, "p", *this);
            need_unit_disc(*this);
            break;
        case Family::HalfInt:
            if (need(n, "n", *this) != 0 && *n != 1) throw DomainError("HalfInt: n must be 0 or 1");
            need_unit_disc(*this);
            break;
        case Family::Bern7: {
            if (!(z > 0.0)) throw DomainError("Bern7: requires z > 0");
            const double L = std::abs(std::log(z));
            if (!(L > 0.0 && L <= kTwoPi)) throw DomainError("Bern7: requires 0 < |ln z| <= 2*pi");
            break;
        }
        case Family::Bern8:
        case Family::Bern9:
            if (!(z != 0.0 && std::abs(z) <= kTwoPi)) throw DomainError(fam + ": requires 0 < |z| <= 2*pi");
            break;
        case Family::BernGF:
            if (!(z != 0.0 && std::abs(z) < kTwoPi)) throw DomainError("BernGF: requires 0 < |z| < 2*pi");
            break;
        case Family::FibP:
        case Family::LucP:
        case Family::FibCl:
        case Family::LucCl:
            need_positive(n, "n", *this);
            if (!(z != 0.0 && std::abs(z) <= (1.0 / sequences::binet().alpha) * (1.0 + 1e-14)))
                throw DomainError(fam + ": requires 0 < |z| <= 1/alpha");
            break;
        case Family::DilogSum:
            need_positive(p, "p", *this);
            need_unit_disc(*this);
            break;
    }
}

std::string SeriesSpec::describe() const {
    std::ostringstream os;
    os << to_string(family);
    if (n) os << " n=" << *n;
    if (m) os << " m=" << *m;
    if (p) os << " p=" << *p;
    os << " z=" << z << " " << to_string(sign);
    return os.str();
}

Evaluation sum_series(const SeriesSpec& spec, double target_tol, const SumOptions& options) {
    spec.validate();
    if (!(target_tol > 0.0)) throw DomainError("sum_series: target_tol must be > 0");
    const double tol = target_tol;
    switch (spec.family) {
        case Family::Bern7: {
            const double L = std::log(spec.z);
            const RationalWeight r(1.0, {{1, 0, 1}, {2, 1, 1}});
            return scaled(-2.0 * L, zeta_weighted_sum(SignConvention::alternating, L / kTwoPi, r,
                                                      tol / (2.0 * std::abs(L)), options));
        }
        case Family::Bern8: {
            const RationalWeight r(1.0, {{1, 0, 1}, {2, 1, 1}});
            return scaled(-2.0 * spec.z, zeta_weighted_sum(SignConvention::alternating, spec.z / kTwoPi, r,
                                                           tol / (2.0 * std::abs(spec.z)), options));
        }
        case Family::Bern9: {
            const RationalWeight r(1.0, {{1, 0, 1}});
            return scaled(-2.0, zeta_weighted_sum(SignConvention::alternating, spec.z / kTwoPi, r, tol / 2.0,
                                                  options));
        }
        case Family::BernGF: {
            const RationalWeight r(1.0, {});
            Evaluation e = scaled(-2.0, zeta_weighted_sum(SignConvention::alternating, spec.z / kTwoPi, r,
                                                          tol / 2.0, options));
            e.value += 1.0;
            e.err_bound += kEps;
            return e;
        }
        case Family::FibP:
        case Family::LucP:
            return fib_lucas_sum(spec.family == Family::LucP, SignConvention::alternating, spec.z,
                                 weight_for(spec), tol, options);
        case Family::FibCl:
        case Family::LucCl:
            return fib_lucas_sum(spec.family == Family::LucCl, SignConvention::positive, spec.z,
                                 weight_for(spec), tol, options);
        case Family::DilogSum:
            return dilog_sum(*spec.p, spec.z, tol, options);
        default:
            return zeta_weighted_sum(spec.sign, spec.z, weight_for(spec), tol, options);
    }
}

}  // namespace zetaseries::oracle
