#include <cmath>
#include <string>

#include "common.hpp"
#include "zetaseries/sequences.hpp"

namespace zetaseries::closedform {

namespace {

using oracle::Family;
using oracle::SeriesSpec;
using oracle::SignConvention;

bool alternating(const SeriesSpec& s) { return s.sign == SignConvention::alternating; }
bool at_abs(const SeriesSpec& s, double v) { return std::abs(s.z) == v; }
bool even(int v) { return v % 2 == 0; }

void expect(bool ok, ClosedFormId id, const SeriesSpec& s) {
    if (!ok)
        throw DomainError("identity " + std::string(to_string(id)) + " does not cover " + s.describe());
}

bool same_parity(const SeriesSpec& s) { return even(*s.m) == even(*s.n); }

}  // namespace

Evaluation eval_identity(ClosedFormId id, const SeriesSpec& s, const ConstantsTable& c) {
    s.validate();
    const double rs5 = 1.0 / sequences::binet().sqrt5;
    auto is = [&](Family f, bool alt) { return s.family == f && alternating(s) == alt; };
    auto fib_cl = [&](bool lucas) { return s.family == (lucas ? Family::LucCl : Family::FibCl); };

    switch (id) {
        case ClosedFormId::P:
            expect(is(Family::P, true), id, s);
            return eval_P(*s.n, std::abs(s.z), c);
        case ClosedFormId::EvenK:
            expect(is(Family::P, false) && even(*s.n), id, s);
            return detail::scaled(0.5, eval_even_halfint(*s.n / 2, s.z, c).first);
        case ClosedFormId::EvenOdd:
            expect(is(Family::P, false) && !even(*s.n), id, s);
            return eval_even_halfint((*s.n + 1) / 2, s.z, c).second;
        case ClosedFormId::UnitK:
            expect(is(Family::P, false) && even(*s.n) && at_abs(s, 1.0), id, s);
            return detail::scaled(0.5, eval_unit_grids(*s.n / 2, UnitGrid::z_eq_1, c).first);
        case ClosedFormId::UnitOdd:
            expect(is(Family::P, false) && !even(*s.n) && at_abs(s, 1.0), id, s);
            return eval_unit_grids((*s.n + 1) / 2, UnitGrid::z_eq_1, c).second;
        case ClosedFormId::HalfK:
            expect(is(Family::P, false) && even(*s.n) && at_abs(s, 0.5), id, s);
            return detail::scaled(0.5, eval_unit_grids(*s.n / 2, UnitGrid::z_eq_half, c).first);
        case ClosedFormId::HalfOdd:
            expect(is(Family::P, false) && !even(*s.n) && at_abs(s, 0.5), id, s);
            return eval_unit_grids((*s.n + 1) / 2, UnitGrid::z_eq_half, c).second;
        case ClosedFormId::ClausenOdd:
            expect(is(Family::P, false) && *s.n == 1, id, s);
            return eval_clausen_first_order(s.z, ClausenSeries::odd_denom, c);
        case ClosedFormId::ClausenKK1:
            expect(is(Family::P, false) && *s.n == 2, id, s);
            return detail::scaled(0.5, eval_clausen_first_order(s.z, ClausenSeries::kk1, c));
        case ClosedFormId::BernLog:
            expect(s.family == Family::Bern7, id, s);
            return eval_bernoulli_family(s.z, BernoulliSeries::log_argument, c);
        case ClosedFormId::BernExp:
            expect(s.family == Family::Bern8, id, s);
            return eval_bernoulli_family(s.z, BernoulliSeries::exponential, c);
        case ClosedFormId::BernLogSinh:
            expect(s.family == Family::Bern9, id, s);
            return eval_bernoulli_family(s.z, BernoulliSeries::log_sinh, c);
        case ClosedFormId::BernGF:
            expect(s.family == Family::BernGF, id, s);
            return eval_bernoulli_family(s.z, BernoulliSeries::generating_function, c);
        case ClosedFormId::HalfIntAlt:
            expect(is(Family::HalfInt, true) && *s.n == 0, id, s);
            return detail::negated(eval_deriv_family(s.z, DerivSeries::alternating_odd, c));
        case ClosedFormId::HalfIntPos:
            expect(is(Family::HalfInt, false) && *s.n == 0, id, s);
            return eval_deriv_family(s.z, DerivSeries::positive_odd, c);
        case ClosedFormId::HalfIntK1Alt:
            expect(is(Family::HalfInt, true) && *s.n == 1, id, s);
            return detail::negated(eval_deriv_family(s.z, DerivSeries::alternating_odd_k1, c));
        case ClosedFormId::HalfIntK1Pos:
            expect(is(Family::HalfInt, false) && *s.n == 1, id, s);
            return eval_deriv_family(s.z, DerivSeries::positive_odd_k1, c);
        case ClosedFormId::FibAltP:
            expect(s.family == Family::FibP, id, s);
            return detail::scaled(-rs5, eval_fibonacci_family(*s.n, s.z, FibSeries::fib_alternating, c));
        case ClosedFormId::LucAltP:
            expect(s.family == Family::LucP, id, s);
            return detail::negated(eval_fibonacci_family(*s.n, s.z, FibSeries::lucas_alternating, c));
        case ClosedFormId::FibOdd:
            expect(fib_cl(false) && *s.n == 1, id, s);
            return eval_fibonacci_family(1, s.z, FibSeries::fib_odd, c);
        case ClosedFormId::LucOdd:
            expect(fib_cl(true) && *s.n == 1, id, s);
            return eval_fibonacci_family(1, s.z, FibSeries::lucas_odd, c);
        case ClosedFormId::FibK:
            expect(fib_cl(false) && even(*s.n), id, s);
            return detail::scaled(rs5, eval_fibonacci_family(*s.n / 2, s.z, FibSeries::fib_k, c));
        case ClosedFormId::LucK:
            expect(fib_cl(true) && even(*s.n), id, s);
            return eval_fibonacci_family(*s.n / 2, s.z, FibSeries::lucas_k, c);
        case ClosedFormId::FibHalf:
            expect(fib_cl(false) && !even(*s.n), id, s);
            return detail::scaled(rs5, eval_fibonacci_family((*s.n + 1) / 2, s.z, FibSeries::fib_half, c));
        case ClosedFormId::LucHalf:
            expect(fib_cl(true) && !even(*s.n), id, s);
            return eval_fibonacci_family((*s.n + 1) / 2, s.z, FibSeries::lucas_half, c);
        case ClosedFormId::Pmn:
            expect(is(Family::Pmn, true), id, s);
            return detail::negated(eval_Pmn(*s.m, *s.n, std::abs(s.z), c));
        case ClosedFormId::Q:
            expect(is(Family::Q, true), id, s);
            return detail::negated(eval_Q(*s.m, s.z, 20000, 1e-12, c));
        case ClosedFormId::PmnUnitSameParity:
            expect(is(Family::Pmn, false) && at_abs(s, 1.0) && same_parity(s), id, s);
            return eval_Pmn_unit(*s.m, *s.n, c);
        case ClosedFormId::PmnUnitMixedParity:
            expect(is(Family::Pmn, false) && at_abs(s, 1.0) && !same_parity(s), id, s);
            return eval_Pmn_unit(*s.m, *s.n, c);
        case ClosedFormId::GenP:
            expect(is(Family::Ppow, true), id, s);
            return eval_general_p(s, c);
        case ClosedFormId::GenPmn:
            expect(is(Family::Pmnpow, true), id, s);
            return eval_general_p(s, c);
        case ClosedFormId::GenQ:
            expect(is(Family::Qpow, true), id, s);
            return eval_general_p(s, c);
    }
    throw DomainError("eval_identity: unknown identity");
}

ClosedFormId closed_form_for(const SeriesSpec& s) {
    s.validate();
    const bool alt = alternating(s);
    auto none = [&]() -> ClosedFormId {
        throw NotAvailable("no closed form for " + s.describe());
    };
    switch (s.family) {
        case Family::P:
            if (alt) return ClosedFormId::P;
            if (*s.n == 1) return ClosedFormId::ClausenOdd;
            if (*s.n == 2) return ClosedFormId::ClausenKK1;
            if (at_abs(s, 1.0)) return even(*s.n) ? ClosedFormId::UnitK : ClosedFormId::UnitOdd;
            if (at_abs(s, 0.5)) return even(*s.n) ? ClosedFormId::HalfK : ClosedFormId::HalfOdd;
            return even(*s.n) ? ClosedFormId::EvenK : ClosedFormId::EvenOdd;
        case Family::Pmn:
            if (alt) return ClosedFormId::Pmn;
            if (at_abs(s, 1.0))
                return same_parity(s) ? ClosedFormId::PmnUnitSameParity : ClosedFormId::PmnUnitMixedParity;
            return none();
        case Family::Q:
            return alt ? ClosedFormId::Q : none();
        case Family::Ppow:
            return alt ? ClosedFormId::GenP : none();
        case Family::Pmnpow:
            return alt ? ClosedFormId::GenPmn : none();
        case Family::Qpow:
            return alt ? ClosedFormId::GenQ : none();
        case Family::Bern7:
            return ClosedFormId::BernLog;
        case Family::Bern8:
            return ClosedFormId::BernExp;
        case Family::Bern9:
            return ClosedFormId::BernLogSinh;
        case Family::BernGF:
            return ClosedFormId::BernGF;
        case Family::HalfInt:
            if (*s.n == 0) return alt ? ClosedFormId::HalfIntAlt : ClosedFormId::HalfIntPos;
            return alt ? ClosedFormId::HalfIntK1Alt : ClosedFormId::HalfIntK1Pos;
        case Family::FibP:
            return ClosedFormId::FibAltP;
        case Family::LucP:
            return ClosedFormId::LucAltP;
        case Family::FibCl:
            if (*s.n == 1) return ClosedFormId::FibOdd;
            return even(*s.n) ? ClosedFormId::FibK : ClosedFormId::FibHalf;
        case Family::LucCl:
            if (*s.n == 1) return ClosedFormId::LucOdd;
            return even(*s.n) ? ClosedFormId::LucK : ClosedFormId::LucHalf;
        default:
            return none();
    }
}

Evaluation eval_family(const SeriesSpec& s, const ConstantsTable& c) {
    s.validate();
    if (alternating(s)) {
        switch (s.family) {
            case Family::S1:
                return eval_S1(s.z, c);
            case Family::S2:
                return eval_S2(*s.n, s.z, c);
            case Family::S3:
                return eval_S3(*s.m, s.z, c);
            case Family::DilogSum:
                if (*s.p == 1) return eval_S1(s.z, c);
                throw NotAvailable("no closed form for " + s.describe());
            default:
                break;
        }
    }
    return eval_identity(closed_form_for(s), s, c);
}

}  // namespace zetaseries::closedform
