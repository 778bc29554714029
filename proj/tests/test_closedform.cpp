#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zetaseries/closedform.hpp"
#include "zetaseries/sequences.hpp"
#include "zetaseries/specfun.hpp"

using namespace zetaseries;
using namespace zetaseries::closedform;
using oracle::Family;
using oracle::SeriesSpec;
using oracle::SignConvention;

namespace {

const double pi = std::numbers::pi;
const double G = constants().catalan;

double z3() { return constants().zeta(3); }
double z5() { return constants().zeta(5); }
double li(int s, double x) { return specfun::polylog(s, x).value; }
double cl(int n, double x) { return specfun::clausen(n, x).value; }

SeriesSpec spec(Family f, double z, std::optional<int> n = {}, std::optional<int> m = {},
                std::optional<int> p = {}, SignConvention sign = SignConvention::alternating) {
    SeriesSpec s;
    s.family = f;
    s.z = z;
    s.n = n;
    s.m = m;
    s.p = p;
    s.sign = sign;
    return s;
}

double oracle_value(const SeriesSpec& s, double tol = 1e-13) { return oracle::sum_series(s, tol).value; }

}  // namespace

TEST_CASE("P at z = 1 and at 1/sqrt2") {
    const double v = eval_P(1, 1.0).value;
    CHECK(v == doctest::Approx(-(1 + 5 * pi / 12 - std::log(2 * pi) + li(2, std::exp(-2 * pi)) / (2 * pi)))
                   .epsilon(1e-15));
    CHECK(std::abs(v - -0.471417224200323468207565) < 1e-14);
    const double r2 = std::sqrt(2.0);
    const double u = eval_P(1, 1 / r2).value;
    CHECK(std::abs(u + (1 + pi / (3 * r2) - std::log(r2 * pi) + li(2, std::exp(-r2 * pi)) / (r2 * pi))) < 1e-14);
}

TEST_CASE("P examples with z = 1/2 and the k(k+1) form") {
    CHECK(std::abs(-eval_P(1, 0.5).value - (1 + pi / 12 - std::log(pi) + li(2, std::exp(-pi)) / pi)) < 1e-14);
    const double q = std::exp(-2 * pi);
    const double rhs = 0.5 + 2 * pi / 3 - std::log(2 * pi) - (z3() - li(3, q) - 2 * pi * li(2, q)) / (2 * pi * pi);
    CHECK(std::abs(-2 * eval_P(2, 1.0).value - rhs) < 1e-14);
}

TEST_CASE("P agrees with the oracle and rejects non-positive z") {
    CHECK(std::abs(eval_P(2, 0.3).value - oracle_value(spec(Family::P, 0.3, 2))) < 1e-10);
    CHECK_THROWS_AS(eval_P(1, -0.5), DomainError);
    CHECK_THROWS_AS(eval_P(0, 0.5), DomainError);
    CHECK_THROWS_AS(eval_P(1, 1.5), DomainError);
}

TEST_CASE("small z: P is close to its first three terms") {
    const double z = 0.05;
    for (int n = 1; n <= 3; ++n) {
        double partial = 0.0;
        for (int k = 1; k <= 3; ++k)
            partial += (k % 2 ? -1.0 : 1.0) * specfun::zeta_int(2 * k).value * std::pow(z, 2 * k) / (k * (2.0 * k + n));
        const double fourth = specfun::zeta_int(8).value * std::pow(z, 8) / (4 * (8.0 + n));
        const double bound = fourth * constants().zeta(2) / (1 - z * z);
        CHECK(std::abs(eval_P(n, z).value - partial) <= bound);
    }
}

TEST_CASE("Clausen pair at n = 1") {
    const double z = 0.3, w = 2 * pi * z;
    const auto [k, h] = eval_even_halfint(1, z);
    // −1/2 + ln(2πz) − (ζ(3) − Cl₃ − 2πz Cl₂)/(2π²z²)
    const double first = -0.5 + std::log(w) - (z3() - cl(3, w) - w * cl(2, w)) / (2 * pi * pi * z * z);
    CHECK(std::abs(k.value - first) < 1e-14);
    CHECK(std::abs(k.value - 0.0755484774412853253145018826813) < 1e-14);
    CHECK(std::abs(h.value - (-1 + std::log(w) + cl(2, w) / w)) < 1e-14);
    CHECK(std::abs(eval_even_halfint(1, 1.0).second.value - (-1 + std::log(2 * pi))) < 1e-14);
}

TEST_CASE("Clausen pair at n = 2, z = 0.7 against the oracle") {
    const auto [k, h] = eval_even_halfint(2, 0.7);
    const auto pos = SignConvention::positive;
    CHECK(std::abs(k.value - 2 * oracle_value(spec(Family::P, 0.7, 4, {}, {}, pos))) < 1e-9);
    CHECK(std::abs(h.value - oracle_value(spec(Family::P, 0.7, 3, {}, {}, pos))) < 1e-9);
}

TEST_CASE("unit grids reproduce the tabulated constants") {
    const double l2p = std::log(2 * pi), lp = std::log(pi), pi2 = pi * pi;
    auto [k1, h1] = eval_unit_grids(1, UnitGrid::z_eq_1);
    CHECK(std::abs(k1.value - (-0.5 + l2p)) < 1e-15);
    CHECK(std::abs(h1.value - (-1 + l2p)) < 1e-15);
    auto [k2, h2] = eval_unit_grids(2, UnitGrid::z_eq_1);
    CHECK(std::abs(k2.value - (-1.0 / 8 + l2p / 2 + 3 * z3() / (2 * pi2))) < 1e-15);
    CHECK(std::abs(h2.value - (-1.0 / 9 + l2p / 3 + z3() / (2 * pi2))) < 1e-15);
    auto [k3, h3] = eval_unit_grids(1, UnitGrid::z_eq_half);
    CHECK(std::abs(k3.value - (-0.5 + lp - 7 * z3() / (2 * pi2))) < 1e-15);
    CHECK(std::abs(h3.value - (lp - 1)) < 1e-15);
    auto [k4, h4] = eval_unit_grids(2, UnitGrid::z_eq_half);
    CHECK(std::abs(k4.value - (-1.0 / 8 + lp / 2 - 9 * z3() / (2 * pi2) + 93 * z5() / (4 * pi2 * pi2))) < 1e-15);
    CHECK(std::abs(h4.value - (-1.0 / 9 + lp / 3 - 3 * z3() / (2 * pi2))) < 1e-15);
}

TEST_CASE("unit grids agree with the general-z Clausen pair") {
    for (int n = 1; n <= 6; ++n) {
        const auto [k1, h1] = eval_unit_grids(n, UnitGrid::z_eq_1);
        const auto [g1, o1] = eval_even_halfint(n, 1.0);
        CHECK(std::abs(k1.value - g1.value) < 1e-12);
        CHECK(std::abs(h1.value - o1.value) < 1e-12);
        const auto [k2, h2] = eval_unit_grids(n, UnitGrid::z_eq_half);
        const auto [g2, o2] = eval_even_halfint(n, 0.5);
        CHECK(std::abs(k2.value - g2.value) < 1e-12);
        CHECK(std::abs(h2.value - o2.value) < 1e-12);
    }
}

TEST_CASE("first-order Clausen forms at rational points") {
    const auto& c = constants();
    const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
    auto odd = [](double z) { return eval_clausen_first_order(z, ClausenSeries::odd_denom).value; };
    CHECK(std::abs(odd(0.25) - (std::log(pi / 2) - 1 + 2 * G / pi)) < 1e-14);
    CHECK(std::abs(odd(0.75) - (std::log(1.5 * pi) - 1 - 2 * G / (3 * pi))) < 1e-14);
    CHECK(std::abs(eval_clausen_first_order(0.25, ClausenSeries::kk1).value -
                   (std::log(pi / 2) - 0.5 - 35 * z3() / (4 * pi * pi) + 4 * G / pi)) < 1e-14);
    CHECK(std::abs(odd(1.0 / 6) - (std::log(pi / 3) - 1 - pi / s3 + s3 / (2 * pi) * c.trigamma_third)) < 1e-13);
    CHECK(std::abs(odd(1.0 / 3) - (std::log(2 * pi / 3) - 1 - s3 * pi / 9 + s3 / (6 * pi) * c.trigamma_third)) <
          1e-13);
    CHECK(std::abs(odd(0.125) - (std::log(pi / 4) - 1 - (s2 + 1) / 4 * pi - (2 * s2 - 1) * G / pi +
                                 s2 / (8 * pi) * c.trigamma_eighth)) < 1e-13);
}

TEST_CASE("first-order Clausen forms are even in z") {
    for (double z : {0.1, 0.3, 0.77}) {
        CHECK(std::abs(eval_clausen_first_order(z, ClausenSeries::odd_denom).value -
                       eval_clausen_first_order(-z, ClausenSeries::odd_denom).value) < 1e-14);
        CHECK(std::abs(eval_clausen_first_order(z, ClausenSeries::kk1).value -
                       eval_clausen_first_order(-z, ClausenSeries::kk1).value) < 1e-14);
    }
}

TEST_CASE("Bernoulli family") {
    const double e8 = eval_bernoulli_family(1.0, BernoulliSeries::exponential).value;
    CHECK(std::abs(e8 - (2.5 - pi * pi / 3 + 2 * li(2, std::exp(-1.0)))) < 1e-15);
    CHECK(std::abs(e8 - oracle_value(spec(Family::Bern8, 1.0))) < 1e-11);
    CHECK(std::abs(eval_bernoulli_family(-1.0, BernoulliSeries::exponential).value + e8) < 1e-15);
    CHECK(std::abs(eval_bernoulli_family(1e-8, BernoulliSeries::generating_function).value - 1.0) < 1e-15);
    CHECK(std::abs(eval_bernoulli_family(2.0, BernoulliSeries::log_sinh).value - 2 * std::log(std::sinh(1.0))) <
          1e-15);
    CHECK(std::abs(eval_bernoulli_family(2.0, BernoulliSeries::log_sinh).value -
                   oracle_value(spec(Family::Bern9, 2.0))) < 1e-11);
    for (double z : {0.5, 1.0, 3.0}) {
        double direct = 0.0;
        for (int k = 0; k <= 80; ++k)
            direct += (k == 0 ? 1.0 : sequences::bernoulli_ratio(k, sequences::BernoulliScale::over_factorial)) *
                      std::pow(z, 2 * k);
        const double v = eval_bernoulli_family(z, BernoulliSeries::generating_function).value;
        CHECK(std::abs(v - direct) < 1e-11);
    }
    CHECK_THROWS_AS(eval_bernoulli_family(2 * pi, BernoulliSeries::generating_function), DomainError);
}

TEST_CASE("Bernoulli log form on both sides of z = 1") {
    for (double z : {std::exp(-1.0), std::exp(-5.0), std::exp(0.5), std::exp(2.0), std::exp(6.0)}) {
        const double v = eval_bernoulli_family(z, BernoulliSeries::log_argument).value;
        CHECK(std::abs(v - oracle_value(spec(Family::Bern7, z))) < 1e-10);
    }
    CHECK_THROWS_AS(eval_bernoulli_family(1.0, BernoulliSeries::log_argument), DomainError);
    CHECK_THROWS_AS(eval_bernoulli_family(std::exp(7.0), BernoulliSeries::log_argument), DomainError);
}

TEST_CASE("half-integer denominators at rational points") {
    auto pos = [](double z) { return eval_deriv_family(z, DerivSeries::positive_odd).value; };
    auto pos1 = [](double z) { return eval_deriv_family(z, DerivSeries::positive_odd_k1).value; };
    const double l2 = std::log(2.0), pi2 = pi * pi;
    CHECK(std::abs(pos(0.5) - (1 - l2) / 2) < 1e-15);
    CHECK(std::abs(pos(0.25) - (0.5 - l2 / 4 - G / pi)) < 1e-15);
    CHECK(std::abs(pos(0.75) - (0.5 - l2 / 4 + G / (3 * pi))) < 1e-15);
    CHECK(std::abs(pos1(1.0) - 0.5) < 1e-15);
    CHECK(std::abs(pos1(0.5) - (0.5 - 7 * z3() / (2 * pi2))) < 1e-15);
    CHECK(std::abs(pos1(0.25) - (0.5 - 35 * z3() / (4 * pi2) + 2 * G / pi)) < 1e-14);
    CHECK(std::abs(pos1(0.75) - (0.5 - 35 * z3() / (36 * pi2) - 2 * G / (3 * pi))) < 1e-14);
    const double s3 = std::sqrt(3.0);
    CHECK(std::abs(pos1(1.0 / 6) -
                   (0.5 - pi / s3 - 12 * z3() / pi2 + s3 / (2 * pi) * constants().trigamma_third)) < 1e-13);
    CHECK_THROWS_AS(pos(1.0), DomainError);
}

TEST_CASE("branch residuals vanish under the lower branch") {
    for (double z : {0.3, 0.5, 0.9}) {
        CHECK(eval_deriv_branch(z, DerivSeries::alternating_odd).residual_im <= 1e-10);
        CHECK(eval_deriv_branch(z, DerivSeries::alternating_odd_k1).residual_im <= 1e-10);
    }
}

TEST_CASE("alternating half-integer forms on both signs of z") {
    for (double z : {0.3, 0.6, 1.0, -0.5, -0.6}) {
        const double a = eval_deriv_family(z, DerivSeries::alternating_odd).value;
        CHECK(std::abs(a + oracle_value(spec(Family::HalfInt, z, 0))) < 1e-10);
        const double b = eval_deriv_family(z, DerivSeries::alternating_odd_k1).value;
        CHECK(std::abs(b + oracle_value(spec(Family::HalfInt, z, 1))) < 1e-10);
    }
}

TEST_CASE("the odd-denominator alternating series is a z-derivative of P(1, z)") {
    const double h = 1e-5;
    for (double z : {0.3, 0.6}) {
        const double d = (eval_P(1, z + h).value - eval_P(1, z - h).value) / (2 * h);
        const double alt_odd = eval_deriv_family(z, DerivSeries::alternating_odd).value;
        CHECK(std::abs(alt_odd + 0.5 * z * d) < 1e-6);
    }
}

TEST_CASE("Fibonacci and Lucas forms") {
    const auto& bc = sequences::binet();
    const double a = bc.alpha, b = bc.beta, s5 = bc.sqrt5;
    const double z = 0.37;
    const double f16 = eval_fibonacci_family(1, z, FibSeries::fib_odd).value;
    const double disp = 2 * std::log(a) / s5 - (b * cl(2, 2 * pi * a * z) - a * cl(2, 2 * pi * b * z)) / (2 * s5 * pi * z);
    CHECK(std::abs(f16 - disp) < 1e-15);
    CHECK(std::abs(f16 - oracle_value(spec(Family::FibCl, z, 1))) < 1e-11);

    const double l16 = eval_fibonacci_family(1, 0.5, FibSeries::lucas_odd).value;
    CHECK(std::abs(l16 - (2 * std::log(pi) - 2 - (b * cl(2, pi * a) + a * cl(2, pi * b)) / pi)) < 1e-14);

    const double f15 = eval_fibonacci_family(1, 0.4, FibSeries::fib_alternating).value;
    CHECK(std::abs(-f15 / s5 - oracle_value(spec(Family::FibP, 0.4, 1))) < 1e-9);

    const double fe = eval_fibonacci_family(1, 0.5, FibSeries::fib_alternating).value;
    const double fe_disp = pi / 4 - 2 * std::log(a) + pi * std::sinh(std::log(a)) / 3 -
                           (a * li(2, std::exp(pi * b)) + b * li(2, std::exp(-pi * a))) / pi;
    CHECK(std::abs(fe - fe_disp) < 1e-14);
    const double le = eval_fibonacci_family(1, 0.5, FibSeries::lucas_alternating).value;
    const double le_disp = (8 + pi * s5) / 4 - 2 * std::log(pi) - pi * std::cosh(std::log(a)) / 3 +
                           (a * li(2, std::exp(pi * b)) - b * li(2, std::exp(-pi * a))) / pi;
    CHECK(std::abs(le - le_disp) < 1e-14);

    CHECK_THROWS_AS(eval_fibonacci_family(1, 0.7, FibSeries::fib_odd), DomainError);
}

TEST_CASE("k(k+n) and k(2k-1+2n) Fibonacci forms against the oracle") {
    const double s5 = sequences::binet().sqrt5;
    const double zmax = 1 / sequences::binet().alpha;
    for (int n = 1; n <= 3; ++n) {
        for (double z : {0.2, 0.5, zmax}) {
            CHECK(std::abs(eval_fibonacci_family(n, z, FibSeries::fib_k).value / s5 -
                           oracle_value(spec(Family::FibCl, z, 2 * n))) < 1e-9);
            CHECK(std::abs(eval_fibonacci_family(n, z, FibSeries::lucas_k).value -
                           oracle_value(spec(Family::LucCl, z, 2 * n))) < 1e-9);
            CHECK(std::abs(eval_fibonacci_family(n, z, FibSeries::fib_half).value / s5 -
                           oracle_value(spec(Family::FibCl, z, 2 * n - 1))) < 1e-9);
            CHECK(std::abs(eval_fibonacci_family(n, z, FibSeries::lucas_half).value -
                           oracle_value(spec(Family::LucCl, z, 2 * n - 1))) < 1e-9);
        }
    }
}

TEST_CASE("P(m, n, z) examples") {
    const double q = std::exp(-2 * pi), h = std::exp(-pi);
    CHECK(std::abs(eval_Pmn(1, 2, 1.0).value -
                   (0.75 + pi / 12 - std::log(2 * pi) / 2 + z3() / (4 * pi * pi) - li(3, q) / (4 * pi * pi))) < 1e-15);
    CHECK(std::abs(eval_Pmn(1, 2, 0.5).value -
                   (0.75 - pi / 12 - std::log(pi) / 2 + z3() / (pi * pi) - li(3, h) / (pi * pi))) < 1e-15);
    CHECK(std::abs(eval_Pmn(1, 3, 0.5).value - (4.0 / 9 - 7 * pi / 720 - std::log(pi) / 3 - li(3, h) / (pi * pi) -
                                                li(4, h) / (pi * pi * pi))) < 1e-15);
    CHECK(std::abs(-eval_Pmn(2, 5, 0.6).value - oracle_value(spec(Family::Pmn, 0.6, 5, 2))) < 1e-9);
    CHECK_THROWS_AS(eval_Pmn(2, 2, 0.5), DomainError);
}

TEST_CASE("P(m, n) at z = 1 for both parity patterns") {
    const double l = std::log(2 * pi), pi2 = pi * pi;
    CHECK(std::abs(eval_Pmn_unit(1, 3).value - (-4.0 / 9 + l / 3 - z3() / (4 * pi2))) < 1e-15);
    CHECK(std::abs(4 * eval_Pmn_unit(2, 4).value - (-3.0 / 8 + l / 2 - 3 * z3() / (2 * pi2))) < 1e-14);
    CHECK(std::abs(eval_Pmn_unit(3, 5).value -
                   (-8.0 / 225 + l / 15 - z3() / (4 * pi2) + 3 * z5() / (4 * pi2 * pi2))) < 1e-15);
    CHECK(std::abs(2 * eval_Pmn_unit(4, 3).value - (-7.0 / 72 + l / 6 - z3() / (2 * pi2))) < 1e-15);
    CHECK(std::abs(2 * eval_Pmn_unit(2, 5).value - (-7.0 / 50 + l / 5 - 2 * z3() / (3 * pi2) + z5() / (pi2 * pi2))) <
          1e-15);
    CHECK(eval_Pmn_unit(3, 4).value == doctest::Approx(eval_Pmn_unit(4, 3).value).epsilon(1e-15));
    const auto pos = SignConvention::positive;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            if (m != n)
                CHECK(std::abs(eval_Pmn_unit(m, n).value - oracle_value(spec(Family::Pmn, 1.0, n, m, {}, pos))) < 1e-11);
}

TEST_CASE("Q(m, z)") {
    CHECK(std::abs(-eval_Q(1, 1.0).value - oracle_value(spec(Family::Q, 1.0, {}, 1))) < 1e-8);
    CHECK(std::abs(-eval_Q(2, 0.5).value - oracle_value(spec(Family::Q, 0.5, {}, 2))) < 1e-8);
    const Evaluation a = eval_Q(3, 0.25, 20000);
    const Evaluation b = eval_Q(3, 0.25, 40000);
    CHECK(std::abs(a.value - b.value) <= a.err_bound);
    CHECK_THROWS_AS(eval_Q(2, -0.5), DomainError);
    CHECK_THROWS_AS(eval_Q(1, 1e-3, 50, 1e-12), BudgetExceeded);
}

TEST_CASE("generalised power denominators") {
    const SeriesSpec p1 = spec(Family::Ppow, 0.5, 3, {}, 1);
    const Evaluation g = eval_general_p(p1);
    const Evaluation e = eval_P(3, 0.5);
    CHECK(std::abs(g.value - e.value) <= g.err_bound + e.err_bound);
    const SeriesSpec p2 = spec(Family::Ppow, 0.5, 2, {}, 2);
    CHECK(std::abs(eval_general_p(p2).value - -0.1001889335779140093223889) < 1e-12);
    for (int p = 2; p <= 3; ++p) {
        for (const SeriesSpec& s : {spec(Family::Ppow, 0.7, 4, {}, p), spec(Family::Pmnpow, 0.7, 1, 3, p),
                                    spec(Family::Qpow, 0.7, {}, 2, p)})
            CHECK(std::abs(eval_general_p(s).value - oracle_value(s)) < 1e-9);
    }
    CHECK_THROWS_AS(eval_general_p(spec(Family::P, 0.5, 1)), DomainError);
}

TEST_CASE("dispatcher routes and reports missing closed forms") {
    CHECK(closed_form_for(spec(Family::P, 0.5, 2)) == ClosedFormId::P);
    CHECK(closed_form_for(spec(Family::P, 0.3, 4, {}, {}, SignConvention::positive)) == ClosedFormId::EvenK);
    CHECK(closed_form_for(spec(Family::Pmn, 1.0, 2, 4, {}, SignConvention::positive)) ==
          ClosedFormId::PmnUnitSameParity);
    CHECK_THROWS_AS(eval_family(spec(Family::Pmn, 0.5, 2, 4, {}, SignConvention::positive)), NotAvailable);
    CHECK_THROWS_AS(eval_family(spec(Family::DilogSum, 0.5, {}, {}, 2)), NotAvailable);
    CHECK_THROWS_AS(eval_identity(ClosedFormId::UnitK, spec(Family::P, 0.3, 4, {}, {}, SignConvention::positive)),
                    DomainError);
    for (double z : {-0.4, 0.4}) {
        const SeriesSpec s = spec(Family::S3, z, {}, 3);
        CHECK(std::abs(eval_family(s).value - oracle_value(s)) < 1e-11);
    }
}

TEST_CASE("every identity name round-trips") {
    CHECK(all_closed_form_ids().size() == 32);
    for (ClosedFormId id : all_closed_form_ids()) CHECK(closed_form_from_string(to_string(id)) == id);
}

TEST_CASE("a corrupted constant table moves the affected closed forms") {
    ConstantsTable bad = constants();
    bad.zeta_odd[0] *= 1.0 + 1e-6;
    CHECK(std::abs(eval_P(2, 0.5, bad).value - eval_P(2, 0.5).value) > 1e-8);
    CHECK(eval_P(1, 0.5, bad).value == eval_P(1, 0.5).value);
}
