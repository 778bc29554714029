#include <cmath>

#include "common.hpp"

namespace zetaseries::closedform {

namespace {

// (4z + z²)/2 − 2z ln z − π²/3 + 2Li₂(e^{−z}), z > 0
Evaluation exponential_form(double z, const ConstantsTable& c) {
    Combination out;
    out.add(0.5 * (4.0 * z + z * z));
    out.add(-2.0 * z * std::log(z));
    out.add(-c.pi * c.pi / 3.0);
    out.add(2.0, specfun::polylog(2, std::exp(-z)));
    return out.result();
}

}  // namespace

Evaluation eval_bernoulli_family(double z, BernoulliSeries which, const ConstantsTable& c) {
    const double two_pi = 2.0 * c.pi;
    switch (which) {
        case BernoulliSeries::log_argument: {
            detail::require(z > 0.0, "eval_bernoulli_family: log form requires z > 0");
            const double L = std::log(z);
            detail::require(L != 0.0 && std::abs(L) <= two_pi,
                            "eval_bernoulli_family: log form requires 0 < |ln z| <= 2*pi");
            Combination out;
            out.add(c.pi * c.pi / 3.0);
            out.add(-0.5 * L * L);
            if (L < 0.0) {
                out.add(2.0 * L * (1.0 - std::log(-L)));
                out.add(-2.0, specfun::polylog(2, z));
                return out.result();
            }
            // ln(−L) = ln L + iπ, Li₂ on the lower side of its cut
            const ComplexEvaluation li = specfun::polylog_cut(2, z, specfun::Branch::lower);
            const double residual = std::abs(-2.0 * L * c.pi - 2.0 * li.value.imag());
            if (residual > 1e-8 * (1.0 + std::abs(L * c.pi)))
                throw BranchInconsistency("eval_bernoulli_family: imaginary parts do not cancel", residual);
            out.add(2.0 * L * (1.0 - std::log(L)));
            out.add(-2.0, Evaluation{li.value.real(), li.err_bound, li.terms_used});
            return out.result();
        }
        case BernoulliSeries::exponential: {
            detail::require(z != 0.0 && std::abs(z) <= two_pi,
                            "eval_bernoulli_family: requires 0 < |z| <= 2*pi");
            const Evaluation e = exponential_form(std::abs(z), c);
            return z > 0.0 ? e : detail::negated(e);
        }
        case BernoulliSeries::log_sinh: {
            detail::require(z != 0.0 && std::abs(z) <= two_pi,
                            "eval_bernoulli_family: requires 0 < |z| <= 2*pi");
            const double h = 0.5 * std::abs(z);
            const double v = 2.0 * std::log(std::sinh(h) / h);
            return {v, 8.0 * kEps * (std::abs(v) + 1.0), 0};
        }
        case BernoulliSeries::generating_function: {
            detail::require(z != 0.0 && std::abs(z) < two_pi,
                            "eval_bernoulli_family: generating function requires 0 < |z| < 2*pi");
            Combination out;
            out.add(0.5 * z);
            out.add(z / std::expm1(z));
            return out.result();
        }
    }
    throw DomainError("eval_bernoulli_family: unknown series");
}

}  // namespace zetaseries::closedform
