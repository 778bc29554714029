#include <cmath>

#include "common.hpp"

namespace zetaseries::closedform {

namespace {

struct PolylogAtExp {
    Evaluation re;
    double im = 0.0;
};

// Li_s(e^w): real below the cut, lower side of the cut for w > 0
PolylogAtExp polylog_exp(int s, double w) {
    if (w < 0.0) return {specfun::polylog(s, std::exp(w)), 0.0};
    const ComplexEvaluation li = specfun::polylog_cut(s, std::exp(w), specfun::Branch::lower);
    return {{li.value.real(), li.err_bound, li.terms_used}, li.value.imag()};
}

BranchEvaluation alternating_odd(double z, const ConstantsTable& c) {
    const double w = 2.0 * c.pi * z;
    const PolylogAtExp li2 = polylog_exp(2, w);
    Combination out;
    out.add(-0.5);
    out.add(c.pi * z / 4.0);
    out.add(-c.pi / (24.0 * z));
    double im = 0.0;
    if (z > 0.0) {
        // ln(−2 sinh πz) = ln(2 sinh πz) + iπ
        out.add(0.5 * std::log(2.0 * std::sinh(c.pi * z)));
        im = 0.5 * c.pi;
    } else {
        out.add(0.5 * std::log(-2.0 * std::sinh(c.pi * z)));
    }
    out.add(1.0 / (4.0 * c.pi * z), li2.re);
    im += li2.im / (4.0 * c.pi * z);
    return {out.result(), std::abs(im)};
}

BranchEvaluation alternating_odd_k1(double z, const ConstantsTable& c) {
    const double w = 2.0 * c.pi * z;
    const PolylogAtExp li2 = polylog_exp(2, w);
    const PolylogAtExp li3 = polylog_exp(3, w);
    const double den = 2.0 * c.pi * c.pi * z * z;
    Combination out;
    out.add(-0.5);
    out.add(-c.pi * z / 6.0);
    out.add(-c.pi / (12.0 * z));
    out.add(-c.zeta(3) / den);
    out.add(1.0 / den, li3.re);
    out.add(-1.0 / w, li2.re);
    const double im = li3.im / den - li2.im / w;
    return {out.result(), std::abs(im)};
}

Evaluation positive_odd(double z, const ConstantsTable& c) {
    const double az = std::abs(z);
    const double w = 2.0 * c.pi * az;
    Combination out;
    out.add(0.5);
    out.add(-0.5 * std::log(2.0 * std::sin(c.pi * az)));
    out.add(-1.0 / (2.0 * w), specfun::clausen(2, w));
    return out.result();
}

Evaluation positive_odd_k1(double z, const ConstantsTable& c) {
    const double az = std::abs(z);
    const double w = 2.0 * c.pi * az;
    const double den = 2.0 * c.pi * c.pi * az * az;
    Combination out;
    out.add(0.5);
    out.add(-c.zeta(3) / den);
    out.add(1.0 / den, specfun::clausen(3, w));
    out.add(1.0 / w, specfun::clausen(2, w));
    return out.result();
}

}  // namespace

BranchEvaluation eval_deriv_branch(double z, DerivSeries which, const ConstantsTable& c) {
    switch (which) {
        case DerivSeries::alternating_odd:
            detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_deriv_family: requires 0 < |z| <= 1");
            return alternating_odd(z, c);
        case DerivSeries::alternating_odd_k1:
            detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_deriv_family: requires 0 < |z| <= 1");
            return alternating_odd_k1(z, c);
        case DerivSeries::positive_odd:
            detail::require(z != 0.0 && std::abs(z) < 1.0, "eval_deriv_family: requires 0 < |z| < 1");
            return {positive_odd(z, c), 0.0};
        case DerivSeries::positive_odd_k1:
            detail::require(z != 0.0 && std::abs(z) <= 1.0, "eval_deriv_family: requires 0 < |z| <= 1");
            return {positive_odd_k1(z, c), 0.0};
    }
    throw DomainError("eval_deriv_family: unknown series");
}

Evaluation eval_deriv_family(double z, DerivSeries which, const ConstantsTable& c) {
    const BranchEvaluation b = eval_deriv_branch(z, which, c);
    if (b.residual_im > 1e-8)
        throw BranchInconsistency("eval_deriv_family: imaginary part of the right side does not vanish",
                                  b.residual_im);
    return b.real;
}

}  // namespace zetaseries::closedform
