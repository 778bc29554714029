#include <cmath>

#include "detail.hpp"
#include "zetaseries/sequences.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::harness {

namespace detail {

std::string spec_params(const oracle::SeriesSpec& s) {
    std::string out;
    auto field = [&](const char* name, const std::string& v) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += v;
    };
    if (s.m) field("m", std::to_string(*s.m));
    if (s.n) field("n", std::to_string(*s.n));
    if (s.p) field("p", std::to_string(*s.p));
    field("z", format_double(s.z));
    return out;
}

Evaluation constant_value(double v) { return {v, 4.0 * kEps * std::abs(v), 0}; }

}  // namespace detail

namespace {

using oracle::Family;
using oracle::SeriesSpec;
using oracle::SignConvention;
using Expr = std::function<Evaluation(const ConstantsTable&)>;

constexpr double kTrigammaFloor = 1e-9;

SeriesSpec spec(Family f, SignConvention sign, double z, std::optional<int> n = {}, std::optional<int> m = {}) {
    SeriesSpec s;
    s.family = f;
    s.sign = sign;
    s.z = z;
    s.n = n;
    s.m = m;
    return s;
}

Evaluation li(int s, double x) { return specfun::polylog(s, x); }
Evaluation cl(int n, double t) { return specfun::clausen(n, t); }

// Σ k^{−n}: head to K−1, Euler–Maclaurin tail from K
Evaluation direct_zeta(int n) {
    constexpr int K = 64;
    CompensatedSum sum;
    for (int k = 1; k < K; ++k) sum.add(std::pow(k, -n));
    const double k = K, d = n;
    sum.add(std::pow(k, 1 - n) / (d - 1.0));
    sum.add(0.5 * std::pow(k, -n));
    sum.add(d / 12.0 * std::pow(k, -n - 1));
    sum.add(-d * (d + 1) * (d + 2) / 720.0 * std::pow(k, -n - 3));
    const double next = d * (d + 1) * (d + 2) * (d + 3) * (d + 4) / 30240.0 * std::pow(k, -n - 5);
    return {sum.value(), 2.0 * next + 16.0 * kEps * sum.abs_sum(), K};
}

// closed: displayed right side; oracle: scale · series
void example(std::vector<Identity>& out, Suite suite, std::string id, std::string ref, const SeriesSpec& s,
             double scale, Expr rhs, double floor = 0.0) {
    Identity e;
    e.id = std::move(id);
    e.paper_ref = std::move(ref);
    e.suite = suite;
    e.oracle_spec = s;
    e.tolerance = floor;
    e.grid.push_back({detail::spec_params(s), std::move(rhs), [s, scale](double tol) {
                          Evaluation o = oracle::sum_series(s, tol / std::abs(scale));
                          return Evaluation{scale * o.value, std::abs(scale) * o.err_bound, o.terms_used};
                      }});
    out.push_back(std::move(e));
}

// closed: tabulated value; oracle: direct special-function evaluation
struct Special {
    std::string params;
    Expr closed;
    std::function<Evaluation()> direct;
};

void special(std::vector<Identity>& out, std::string id, std::string ref, std::vector<Special> points,
             double floor = 0.0) {
    Identity e;
    e.id = std::move(id);
    e.paper_ref = std::move(ref);
    e.suite = Suite::special_values;
    e.tolerance = floor;
    for (auto& p : points)
        e.grid.push_back({std::move(p.params), std::move(p.closed), [f = std::move(p.direct)](double) { return f(); }});
    out.push_back(std::move(e));
}

}  // namespace

void detail::add_examples(std::vector<Identity>& out) {
    const auto A = SignConvention::alternating, Pos = SignConvention::positive;
    const auto E = Suite::examples;
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);

    example(out, E, "ex.alt_k_2k1_z1", "Σ (−1)^{k−1}ζ(2k)/(k(2k+1)) = 1 + 5π/12 − ln(2π) + Li₂(e^{−2π})/(2π)",
            spec(Family::P, A, 1.0, 1), -1.0, [](const ConstantsTable& c) {
                const double pi = c.pi;
                return Combination().add(1.0).add(5.0 * pi / 12.0).add(-std::log(2.0 * pi))
                    .add(1.0 / (2.0 * pi), li(2, std::exp(-2.0 * pi))).result();
            });
    example(out, E, "ex.alt_k_2k1_zrt2",
            "Σ (−1)^{k−1}ζ(2k)/(2^k k(2k+1)) = 1 + π/(3√2) − ln(√2π) + Li₂(e^{−√2π})/(√2π)",
            spec(Family::P, A, 1.0 / r2, 1), -1.0, [r2](const ConstantsTable& c) {
                const double pi = c.pi;
                return Combination().add(1.0).add(pi / (3.0 * r2)).add(-std::log(r2 * pi))
                    .add(1.0 / (r2 * pi), li(2, std::exp(-r2 * pi))).result();
            });
    example(out, E, "ex.alt_k_2k1_zhalf", "Σ (−1)^{k−1}ζ(2k)/(4^k k(2k+1)) = 1 + π/12 − ln π + Li₂(e^{−π})/π",
            spec(Family::P, A, 0.5, 1), -1.0, [](const ConstantsTable& c) {
                const double pi = c.pi;
                return Combination().add(1.0).add(pi / 12.0).add(-std::log(pi))
                    .add(1.0 / pi, li(2, std::exp(-pi))).result();
            });
    example(out, E, "ex.alt_k_k1_z1",
            "Σ (−1)^{k−1}ζ(2k)/(k(k+1)) = 1/2 + 2π/3 − ln(2π) − (ζ(3) − Li₃(e^{−2π}) − 2πLi₂(e^{−2π}))/(2π²)",
            spec(Family::P, A, 1.0, 2), -2.0, [](const ConstantsTable& c) {
                const double pi = c.pi, q = std::exp(-2.0 * pi), d = 2.0 * pi * pi;
                return Combination().add(0.5).add(2.0 * pi / 3.0).add(-std::log(2.0 * pi)).add(-c.zeta(3) / d)
                    .add(1.0 / d, li(3, q)).add(2.0 * pi / d, li(2, q)).result();
            });

    example(out, E, "ex.unit_k_k1", "Σ ζ(2k)/(k(k+1)) = −1/2 + ln(2π)", spec(Family::P, Pos, 1.0, 2), 2.0,
            [](const ConstantsTable& c) { return Combination().add(-0.5).add(std::log(2.0 * c.pi)).result(); });
    example(out, E, "ex.unit_k_k2", "Σ ζ(2k)/(k(k+2)) = −1/8 + ln(2π)/2 + 3ζ(3)/(2π²)",
            spec(Family::P, Pos, 1.0, 4), 2.0, [](const ConstantsTable& c) {
                return Combination().add(-0.125).add(std::log(2.0 * c.pi) / 2.0)
                    .add(3.0 * c.zeta(3) / (2.0 * c.pi * c.pi)).result();
            });
    example(out, E, "ex.unit_k_2k1", "Σ ζ(2k)/(k(2k+1)) = −1 + ln(2π)", spec(Family::P, Pos, 1.0, 1), 1.0,
            [](const ConstantsTable& c) { return Combination().add(-1.0).add(std::log(2.0 * c.pi)).result(); });
    example(out, E, "ex.unit_k_2k3", "Σ ζ(2k)/(k(2k+3)) = −1/9 + ln(2π)/3 + ζ(3)/(2π²)",
            spec(Family::P, Pos, 1.0, 3), 1.0, [](const ConstantsTable& c) {
                return Combination().add(-1.0 / 9.0).add(std::log(2.0 * c.pi) / 3.0)
                    .add(c.zeta(3) / (2.0 * c.pi * c.pi)).result();
            });

    example(out, E, "ex.quarter_k_k1", "Σ ζ(2k)/(4^k k(k+1)) = −1/2 + ln π − 7ζ(3)/(2π²)",
            spec(Family::P, Pos, 0.5, 2), 2.0, [](const ConstantsTable& c) {
                return Combination().add(-0.5).add(std::log(c.pi)).add(-7.0 * c.zeta(3) / (2.0 * c.pi * c.pi))
                    .result();
            });
    example(out, E, "ex.quarter_k_k2", "Σ ζ(2k)/(4^k k(k+2)) = −1/8 + ln π/2 − 9ζ(3)/(2π²) + 93ζ(5)/(4π⁴)",
            spec(Family::P, Pos, 0.5, 4), 2.0, [](const ConstantsTable& c) {
                const double p2 = c.pi * c.pi;
                return Combination().add(-0.125).add(std::log(c.pi) / 2.0).add(-9.0 * c.zeta(3) / (2.0 * p2))
                    .add(93.0 * c.zeta(5) / (4.0 * p2 * p2)).result();
            });
    example(out, E, "ex.quarter_k_2k1", "Σ ζ(2k)/(4^k k(2k+1)) = ln π − 1", spec(Family::P, Pos, 0.5, 1), 1.0,
            [](const ConstantsTable& c) { return Combination().add(std::log(c.pi)).add(-1.0).result(); });
    example(out, E, "ex.quarter_k_2k3", "Σ ζ(2k)/(4^k k(2k+3)) = −1/9 + ln π/3 − 3ζ(3)/(2π²)",
            spec(Family::P, Pos, 0.5, 3), 1.0, [](const ConstantsTable& c) {
                return Combination().add(-1.0 / 9.0).add(std::log(c.pi) / 3.0)
                    .add(-3.0 * c.zeta(3) / (2.0 * c.pi * c.pi)).result();
            });

    example(out, E, "ex.sixteenth_k_2k1", "Σ ζ(2k)/(16^k k(2k+1)) = ln(π/2) − 1 + 2G/π",
            spec(Family::P, Pos, 0.25, 1), 1.0, [](const ConstantsTable& c) {
                return Combination().add(std::log(c.pi / 2.0)).add(-1.0).add(2.0 * c.catalan / c.pi).result();
            });
    example(out, E, "ex.nine_sixteenths_k_2k1", "Σ (9/16)^k ζ(2k)/(k(2k+1)) = ln(3π/2) − 1 − 2G/(3π)",
            spec(Family::P, Pos, 0.75, 1), 1.0, [](const ConstantsTable& c) {
                return Combination().add(std::log(1.5 * c.pi)).add(-1.0).add(-2.0 * c.catalan / (3.0 * c.pi))
                    .result();
            });
    example(out, E, "ex.sixteenth_k_k1", "Σ ζ(2k)/(16^k k(k+1)) = ln(π/2) − 1/2 − 35ζ(3)/(4π²) + 4G/π",
            spec(Family::P, Pos, 0.25, 2), 2.0, [](const ConstantsTable& c) {
                return Combination().add(std::log(c.pi / 2.0)).add(-0.5)
                    .add(-35.0 * c.zeta(3) / (4.0 * c.pi * c.pi)).add(4.0 * c.catalan / c.pi).result();
            });
    example(out, E, "ex.ninth_k_2k1", "Σ ζ(2k)/(9^k k(2k+1)) = ln(2π/3) − 1 − √3π/9 + √3ψ′(1/3)/(6π)",
            spec(Family::P, Pos, 1.0 / 3.0, 1), 1.0, [r3](const ConstantsTable& c) {
                return Combination().add(std::log(2.0 * c.pi / 3.0)).add(-1.0).add(-r3 * c.pi / 9.0)
                    .add(r3 * c.trigamma_third / (6.0 * c.pi)).result();
            }, kTrigammaFloor);
    example(out, E, "ex.thirtysixth_k_2k1", "Σ ζ(2k)/(36^k k(2k+1)) = ln(π/3) − 1 − π/√3 + √3ψ′(1/3)/(2π)",
            spec(Family::P, Pos, 1.0 / 6.0, 1), 1.0, [r3](const ConstantsTable& c) {
                return Combination().add(std::log(c.pi / 3.0)).add(-1.0).add(-c.pi / r3)
                    .add(r3 * c.trigamma_third / (2.0 * c.pi)).result();
            }, kTrigammaFloor);
    example(out, E, "ex.sixtyfourth_k_2k1",
            "Σ ζ(2k)/(64^k k(2k+1)) = ln(π/4) − 1 − (√2+1)π/4 − (2√2−1)G/π + √2ψ′(1/8)/(8π)",
            spec(Family::P, Pos, 0.125, 1), 1.0, [r2](const ConstantsTable& c) {
                return Combination().add(std::log(c.pi / 4.0)).add(-1.0).add(-(r2 + 1.0) * c.pi / 4.0)
                    .add(-(2.0 * r2 - 1.0) * c.catalan / c.pi).add(r2 * c.trigamma_eighth / (8.0 * c.pi)).result();
            }, kTrigammaFloor);

    example(out, E, "ex.odd_quarter", "Σ ζ(2k)/(4^k(2k+1)) = 1/2 − ln2/2", spec(Family::HalfInt, Pos, 0.5, 0), 1.0,
            [](const ConstantsTable& c) { return Combination().add(0.5).add(-c.ln2 / 2.0).result(); });
    example(out, E, "ex.odd_sixteenth", "Σ ζ(2k)/(16^k(2k+1)) = 1/2 − ln2/4 − G/π",
            spec(Family::HalfInt, Pos, 0.25, 0), 1.0, [](const ConstantsTable& c) {
                return Combination().add(0.5).add(-c.ln2 / 4.0).add(-c.catalan / c.pi).result();
            });
    example(out, E, "ex.odd_nine_sixteenths", "Σ (9/16)^k ζ(2k)/(2k+1) = 1/2 − ln2/4 + G/(3π)",
            spec(Family::HalfInt, Pos, 0.75, 0), 1.0, [](const ConstantsTable& c) {
                return Combination().add(0.5).add(-c.ln2 / 4.0).add(c.catalan / (3.0 * c.pi)).result();
            });

    example(out, E, "ex.k1_odd_unit", "Σ ζ(2k)/((k+1)(2k+1)) = 1/2", spec(Family::HalfInt, Pos, 1.0, 1), 1.0,
            [](const ConstantsTable&) { return detail::constant_value(0.5); });
    example(out, E, "ex.k1_odd_quarter", "Σ ζ(2k)/(4^k(k+1)(2k+1)) = 1/2 − 7ζ(3)/(2π²)",
            spec(Family::HalfInt, Pos, 0.5, 1), 1.0, [](const ConstantsTable& c) {
                return Combination().add(0.5).add(-7.0 * c.zeta(3) / (2.0 * c.pi * c.pi)).result();
            });
    example(out, E, "ex.k1_odd_sixteenth", "Σ ζ(2k)/(16^k(k+1)(2k+1)) = 1/2 − 35ζ(3)/(4π²) + 2G/π",
            spec(Family::HalfInt, Pos, 0.25, 1), 1.0, [](const ConstantsTable& c) {
                return Combination().add(0.5).add(-35.0 * c.zeta(3) / (4.0 * c.pi * c.pi))
                    .add(2.0 * c.catalan / c.pi).result();
            });
    example(out, E, "ex.k1_odd_nine_sixteenths", "Σ (9/16)^k ζ(2k)/((k+1)(2k+1)) = 1/2 − 35ζ(3)/(36π²) − 2G/(3π)",
            spec(Family::HalfInt, Pos, 0.75, 1), 1.0, [](const ConstantsTable& c) {
                return Combination().add(0.5).add(-35.0 * c.zeta(3) / (36.0 * c.pi * c.pi))
                    .add(-2.0 * c.catalan / (3.0 * c.pi)).result();
            });
    example(out, E, "ex.k1_odd_thirtysixth",
            "Σ ζ(2k)/(36^k(k+1)(2k+1)) = 1/2 − π/√3 − 12ζ(3)/π² + √3ψ′(1/3)/(2π)",
            spec(Family::HalfInt, Pos, 1.0 / 6.0, 1), 1.0, [r3](const ConstantsTable& c) {
                return Combination().add(0.5).add(-c.pi / r3).add(-12.0 * c.zeta(3) / (c.pi * c.pi))
                    .add(r3 * c.trigamma_third / (2.0 * c.pi)).result();
            }, kTrigammaFloor);

    const auto& bc = sequences::binet();
    const double a = bc.alpha, b = bc.beta, r5 = bc.sqrt5;
    example(out, E, "ex.fib_alt_quarter",
            "√5 Σ (−1)^{k−1}F_{2k}ζ(2k)/(4^k k(2k+1)) = π/4 − 2lnα + π sinh(lnα)/3 − (αLi₂(e^{πβ}) + βLi₂(e^{−πα}))/π",
            spec(Family::FibP, A, 0.5, 1), -r5, [a, b](const ConstantsTable& c) {
                const double pi = c.pi, la = std::log(a);
                return Combination().add(pi / 4.0).add(-2.0 * la).add(pi * std::sinh(la) / 3.0)
                    .add(-a / pi, li(2, std::exp(pi * b))).add(-b / pi, li(2, std::exp(-pi * a))).result();
            });
    example(out, E, "ex.luc_alt_quarter",
            "Σ (−1)^{k−1}L_{2k}ζ(2k)/(4^k k(2k+1)) = (8+π√5)/4 − 2ln π − π cosh(lnα)/3 + (αLi₂(e^{πβ}) − βLi₂(e^{−πα}))/π",
            spec(Family::LucP, A, 0.5, 1), -1.0, [a, b, r5](const ConstantsTable& c) {
                const double pi = c.pi, la = std::log(a);
                return Combination().add(2.0).add(pi * r5 / 4.0).add(-2.0 * std::log(pi))
                    .add(-pi * std::cosh(la) / 3.0).add(a / pi, li(2, std::exp(pi * b)))
                    .add(-b / pi, li(2, std::exp(-pi * a))).result();
            });
    example(out, E, "ex.fib_quarter",
            "Σ F_{2k}ζ(2k)/(4^k k(2k+1)) = 2lnα/√5 − (βCl₂(πα) − αCl₂(πβ))/(√5π)",
            spec(Family::FibCl, Pos, 0.5, 1), 1.0, [a, b, r5](const ConstantsTable& c) {
                const double pi = c.pi;
                return Combination().add(2.0 * std::log(a) / r5).add(-b / (r5 * pi), cl(2, pi * a))
                    .add(a / (r5 * pi), cl(2, pi * b)).result();
            });
    example(out, E, "ex.luc_quarter", "Σ L_{2k}ζ(2k)/(4^k k(2k+1)) = 2ln π − 2 − (βCl₂(πα) + αCl₂(πβ))/π",
            spec(Family::LucCl, Pos, 0.5, 1), 1.0, [a, b](const ConstantsTable& c) {
                const double pi = c.pi;
                return Combination().add(2.0 * std::log(pi)).add(-2.0).add(-b / pi, cl(2, pi * a))
                    .add(-a / pi, cl(2, pi * b)).result();
            });

    example(out, E, "ex.alt_pmn_12_unit",
            "Σ (−1)^{k−1}ζ(2k)/(k(2k+1)(2k+2)) = 3/4 + π/12 − ln(2π)/2 + ζ(3)/(2π)² − Li₃(e^{−2π})/(2π)²",
            spec(Family::Pmn, A, 1.0, 2, 1), -1.0, [](const ConstantsTable& c) {
                const double pi = c.pi, w2 = 4.0 * pi * pi;
                return Combination().add(0.75).add(pi / 12.0).add(-std::log(2.0 * pi) / 2.0).add(c.zeta(3) / w2)
                    .add(-1.0 / w2, li(3, std::exp(-2.0 * pi))).result();
            });
    example(out, E, "ex.alt_pmn_12_quarter",
            "Σ (−1)^{k−1}ζ(2k)/(4^k k(2k+1)(2k+2)) = 3/4 − π/12 − ln π/2 + ζ(3)/π² − Li₃(e^{−π})/π²",
            spec(Family::Pmn, A, 0.5, 2, 1), -1.0, [](const ConstantsTable& c) {
                const double pi = c.pi, p2 = pi * pi;
                return Combination().add(0.75).add(-pi / 12.0).add(-std::log(pi) / 2.0).add(c.zeta(3) / p2)
                    .add(-1.0 / p2, li(3, std::exp(-pi))).result();
            });
    example(out, E, "ex.alt_pmn_13_quarter",
            "Σ (−1)^{k−1}ζ(2k)/(4^k k(2k+1)(2k+3)) = 4/9 − 7π/720 − ln π/3 − Li₃(e^{−π})/π² − Li₄(e^{−π})/π³",
            spec(Family::Pmn, A, 0.5, 3, 1), -1.0, [](const ConstantsTable& c) {
                const double pi = c.pi, q = std::exp(-pi);
                return Combination().add(4.0 / 9.0).add(-7.0 * pi / 720.0).add(-std::log(pi) / 3.0)
                    .add(-1.0 / (pi * pi), li(3, q)).add(-1.0 / (pi * pi * pi), li(4, q)).result();
            });

    example(out, E, "ex.pmn_13_unit", "Σ ζ(2k)/(k(2k+1)(2k+3)) = −4/9 + ln(2π)/3 − ζ(3)/(4π²)",
            spec(Family::Pmn, Pos, 1.0, 3, 1), 1.0, [](const ConstantsTable& c) {
                return Combination().add(-4.0 / 9.0).add(std::log(2.0 * c.pi) / 3.0)
                    .add(-c.zeta(3) / (4.0 * c.pi * c.pi)).result();
            });
    example(out, E, "ex.pmn_k1_k2_unit", "Σ ζ(2k)/(k(k+1)(k+2)) = −3/8 + ln(2π)/2 − 3ζ(3)/(2π²)",
            spec(Family::Pmn, Pos, 1.0, 4, 2), 4.0, [](const ConstantsTable& c) {
                return Combination().add(-0.375).add(std::log(2.0 * c.pi) / 2.0)
                    .add(-3.0 * c.zeta(3) / (2.0 * c.pi * c.pi)).result();
            });
    example(out, E, "ex.pmn_35_unit", "Σ ζ(2k)/(k(2k+3)(2k+5)) = −8/225 + ln(2π)/15 − ζ(3)/(4π²) + 3ζ(5)/(4π⁴)",
            spec(Family::Pmn, Pos, 1.0, 5, 3), 1.0, [](const ConstantsTable& c) {
                const double p2 = c.pi * c.pi;
                return Combination().add(-8.0 / 225.0).add(std::log(2.0 * c.pi) / 15.0)
                    .add(-c.zeta(3) / (4.0 * p2)).add(3.0 * c.zeta(5) / (4.0 * p2 * p2)).result();
            });
    example(out, E, "ex.pmn_k2_2k3_unit", "Σ ζ(2k)/(k(k+2)(2k+3)) = −7/72 + ln(2π)/6 − ζ(3)/(2π²)",
            spec(Family::Pmn, Pos, 1.0, 4, 3), 2.0, [](const ConstantsTable& c) {
                return Combination().add(-7.0 / 72.0).add(std::log(2.0 * c.pi) / 6.0)
                    .add(-c.zeta(3) / (2.0 * c.pi * c.pi)).result();
            });
    example(out, E, "ex.pmn_k1_2k5_unit", "Σ ζ(2k)/(k(k+1)(2k+5)) = −7/50 + ln(2π)/5 − 2ζ(3)/(3π²) + ζ(5)/π⁴",
            spec(Family::Pmn, Pos, 1.0, 5, 2), 2.0, [](const ConstantsTable& c) {
                const double p2 = c.pi * c.pi;
                return Combination().add(-0.14).add(std::log(2.0 * c.pi) / 5.0)
                    .add(-2.0 * c.zeta(3) / (3.0 * p2)).add(c.zeta(5) / (p2 * p2)).result();
            });

    example(out, Suite::bernoulli, "bern.unit_value", "Σ B_{2k}/(k(2k+1)!) = 5/2 − π²/3 + 2Li₂(e^{−1})",
            spec(Family::Bern8, A, 1.0), 1.0, [](const ConstantsTable& c) {
                return Combination().add(2.5).add(-c.pi * c.pi / 3.0).add(2.0, li(2, std::exp(-1.0))).result();
            });
}

void detail::add_special_values(std::vector<Identity>& out) {
    auto odd = [](const std::string& id, const std::string& ref, double theta_over_pi,
                  std::function<double(int)> factor) {
        std::vector<Special> pts;
        for (int n = 1; n <= 3; ++n)
            pts.push_back({"n=" + std::to_string(n),
                           [n, factor](const ConstantsTable& c) {
                               return detail::constant_value(factor(n) * c.zeta(2 * n + 1));
                           },
                           [n, theta_over_pi] { return cl(2 * n + 1, theta_over_pi * constants().pi); }});
        return std::make_tuple(id, ref, std::move(pts));
    };
    auto add = [&](std::tuple<std::string, std::string, std::vector<Special>> t) {
        special(out, std::get<0>(t), std::get<1>(t), std::move(std::get<2>(t)));
    };
    const double pi = constants().pi;

    std::vector<Special> multiples;
    for (int n = 1; n <= 3; ++n)
        multiples.push_back({"n=" + std::to_string(n), [](const ConstantsTable&) { return detail::constant_value(0.0); },
                             [n, pi] { return cl(2, n * pi); }});
    special(out, "sv.cl2_multiple_pi", "Cl₂(nπ) = 0", std::move(multiples));
    special(out, "sv.cl2_half_pi", "Cl₂(π/2) = G",
            {{"theta=pi/2", [](const ConstantsTable& c) { return detail::constant_value(c.catalan); },
              [pi] { return cl(2, pi / 2.0); }}});
    special(out, "sv.cl2_three_half_pi", "Cl₂(3π/2) = −G",
            {{"theta=3pi/2", [](const ConstantsTable& c) { return detail::constant_value(-c.catalan); },
              [pi] { return cl(2, 1.5 * pi); }}});
    special(out, "sv.cl2_third_pi", "Cl₂(π/3) = (3/2)Cl₂(2π/3)",
            {{"theta=pi/3", [pi](const ConstantsTable&) { return Combination().add(1.5, cl(2, 2.0 * pi / 3.0)).result(); },
              [pi] { return cl(2, pi / 3.0); }}});
    special(out, "sv.cl2_sixth_pair", "Cl₂(π/6) + Cl₂(5π/6) = 4G/3",
            {{"theta=pi/6", [](const ConstantsTable& c) { return detail::constant_value(4.0 * c.catalan / 3.0); },
              [pi] { return Combination().add(1.0, cl(2, pi / 6.0)).add(1.0, cl(2, 5.0 * pi / 6.0)).result(); }}});

    auto p4 = [](int n) { return std::pow(2.0, -2 * n) - 1.0; };
    auto p9 = [](int n) { return std::pow(3.0, -2 * n) - 1.0; };
    add(odd("sv.cl_odd_pi", "Cl_{2n+1}(π) = (2^{−2n} − 1)ζ(2n+1)", 1.0, p4));
    add(odd("sv.cl_odd_two_pi", "Cl_{2n+1}(2π) = ζ(2n+1)", 2.0, [](int) { return 1.0; }));
    add(odd("sv.cl_odd_half_pi", "Cl_{2n+1}(π/2) = 2^{−(2n+1)}(2^{−2n} − 1)ζ(2n+1)", 0.5,
            [p4](int n) { return std::pow(2.0, -(2 * n + 1)) * p4(n); }));
    add(odd("sv.cl_odd_third_pi", "Cl_{2n+1}(π/3) = (2^{−2n} − 1)(3^{−2n} − 1)ζ(2n+1)/2", 1.0 / 3.0,
            [p4, p9](int n) { return 0.5 * p4(n) * p9(n); }));
    add(odd("sv.cl_odd_two_third_pi", "Cl_{2n+1}(2π/3) = (3^{−2n} − 1)ζ(2n+1)/2", 2.0 / 3.0,
            [p9](int n) { return 0.5 * p9(n); }));

    std::vector<Special> li_one, li_minus;
    for (int n = 2; n <= 6; ++n) {
        li_one.push_back({"n=" + std::to_string(n),
                          [n](const ConstantsTable& c) { return detail::constant_value(c.zeta(n)); },
                          [n] { return direct_zeta(n); }});
        li_minus.push_back({"n=" + std::to_string(n),
                            [n](const ConstantsTable& c) {
                                return detail::constant_value((std::pow(2.0, 1 - n) - 1.0) * c.zeta(n));
                            },
                            [n] { return li(n, -1.0); }});
    }
    special(out, "sv.li_one", "Li_n(1) = ζ(n)", std::move(li_one));
    special(out, "sv.li_minus_one", "Li_n(−1) = (2^{1−n} − 1)ζ(n)", std::move(li_minus));

    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    special(out, "sv.cl2_two_third_pi_trigamma", "Cl₂(2π/3) = √3(ψ′(1/3) − 2π²/3)/9",
            {{"theta=2pi/3", [r3](const ConstantsTable& c) {
                  return Combination().add(r3 * c.trigamma_third / 9.0).add(-r3 * 2.0 * c.pi * c.pi / 27.0).result();
              },
              [pi] { return cl(2, 2.0 * pi / 3.0); }}});
    special(out, "sv.cl2_third_pi_trigamma", "Cl₂(π/3) = √3(ψ′(1/3) − 2π²/3)/6",
            {{"theta=pi/3", [r3](const ConstantsTable& c) {
                  return Combination().add(r3 * c.trigamma_third / 6.0).add(-r3 * c.pi * c.pi / 9.0).result();
              },
              [pi] { return cl(2, pi / 3.0); }}});
    special(out, "sv.cl2_quarter_pi_trigamma", "Cl₂(π/4) = (√2ψ′(1/8) − 2(√2+1)π² − 8(2√2−1)G)/32",
            {{"theta=pi/4", [r2](const ConstantsTable& c) {
                  return Combination().add(r2 * c.trigamma_eighth / 32.0)
                      .add(-2.0 * (r2 + 1.0) * c.pi * c.pi / 32.0)
                      .add(-8.0 * (2.0 * r2 - 1.0) * c.catalan / 32.0).result();
              },
              [pi] { return cl(2, pi / 4.0); }}});
}

}  // namespace zetaseries::harness
