#include <array>
#include <cmath>
#include <deque>
#include <iterator>
#include <set>

#include "detail.hpp"
#include "zetaseries/sequences.hpp"

namespace zetaseries::harness {

namespace {

using closedform::ClosedFormId;
using oracle::Family;
using oracle::SeriesSpec;
using oracle::SignConvention;

constexpr double kQFloor = 1e-8;

std::vector<double> z_grid() {
    return {0.1, 0.25, 0.5, 1.0 / sequences::binet().alpha, 0.95, 1.0};
}

SeriesSpec make(Family f, SignConvention sign, double z, std::optional<int> n = {}, std::optional<int> m = {},
                std::optional<int> p = {}) {
    SeriesSpec s;
    s.family = f;
    s.sign = sign;
    s.z = z;
    s.n = n;
    s.m = m;
    s.p = p;
    return s;
}

bool valid(const SeriesSpec& s) {
    try {
        s.validate();
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

GridPoint spec_point(ClosedFormId id, const SeriesSpec& s) {
    return {detail::spec_params(s),
            [id, s](const ConstantsTable& c) { return closedform::eval_identity(id, s, c); },
            [s](double tol) { return oracle::sum_series(s, tol); }};
}

class Builder {
public:
    explicit Builder(std::deque<Identity>& out) : out_(out) {}

    Identity& open(ClosedFormId id, Suite suite, std::string ref, double floor = 0.0) {
        Identity e;
        e.id = std::string(closedform::to_string(id));
        e.paper_ref = std::move(ref);
        e.suite = suite;
        e.closed = id;
        e.tolerance = floor;
        out_.push_back(std::move(e));
        return out_.back();
    }

    void point(Identity& e, const SeriesSpec& s) {
        if (!valid(s)) return;
        if (!e.oracle_spec) e.oracle_spec = s;
        e.grid.push_back(spec_point(*e.closed, s));
    }

private:
    std::deque<Identity>& out_;
};

void add_core(Builder& b) {
    const auto A = SignConvention::alternating, Pos = SignConvention::positive;
    const auto zs = z_grid();

    auto& p = b.open(ClosedFormId::P, Suite::core,
                     "Σ(−1)^k ζ(2k)z^{2k}/(k(2k+n)) = −1/n² − πz/(n+1) + ln(2πz)/n + Li_j(e^{−2πz}) terms");
    for (int n = 1; n <= 6; ++n)
        for (double z : zs) b.point(p, make(Family::P, A, z, n));

    auto& ek = b.open(ClosedFormId::EvenK, Suite::core, "Σ ζ(2k)z^{2k}/(k(k+n)) through Cl_j(2πz)");
    auto& eo = b.open(ClosedFormId::EvenOdd, Suite::core, "Σ ζ(2k)z^{2k}/(k(2k−1+2n)) through Cl_j(2πz)");
    for (int n = 1; n <= 6; ++n)
        for (double z : zs) b.point(n % 2 == 0 ? ek : eo, make(Family::P, Pos, z, n));

    auto& uk = b.open(ClosedFormId::UnitK, Suite::core, "Σ ζ(2k)/(k(k+n)) in ζ(odd) and ln(2π)");
    auto& uo = b.open(ClosedFormId::UnitOdd, Suite::core, "Σ ζ(2k)/(k(2k−1+2n)) in ζ(odd) and ln(2π)");
    auto& hk = b.open(ClosedFormId::HalfK, Suite::core, "Σ ζ(2k)/(4^k k(k+n)) in ζ(odd) and ln π");
    auto& ho = b.open(ClosedFormId::HalfOdd, Suite::core, "Σ ζ(2k)/(4^k k(2k−1+2n)) in ζ(odd) and ln π");
    for (int n = 1; n <= 6; ++n) {
        b.point(n % 2 == 0 ? uk : uo, make(Family::P, Pos, 1.0, n));
        b.point(n % 2 == 0 ? hk : ho, make(Family::P, Pos, 0.5, n));
    }

    auto& c1 = b.open(ClosedFormId::ClausenOdd, Suite::core,
                      "Σ ζ(2k)z^{2k}/(k(2k+1)) = −1 + ln(2π|z|) − Cl₂(2πz)/(2πz)");
    auto& c2 = b.open(ClosedFormId::ClausenKK1, Suite::core,
                      "Σ ζ(2k)z^{2k}/(k(k+1)) through Cl₂(2πz), Cl₃(2πz)");
    for (double z : zs) {
        b.point(c1, make(Family::P, Pos, z, 1));
        b.point(c2, make(Family::P, Pos, z, 2));
    }
    for (double z : {-0.25, -0.5}) {
        b.point(c1, make(Family::P, Pos, z, 1));
        b.point(c2, make(Family::P, Pos, z, 2));
    }

    const std::array<std::pair<ClosedFormId, const char*>, 4> half = {{
        {ClosedFormId::HalfIntAlt, "Σ (−1)^{k−1}ζ(2k)z^{2k}/(2k+1) through Li₂(e^{2πz}), lower branch"},
        {ClosedFormId::HalfIntPos, "Σ ζ(2k)z^{2k}/(2k+1) = 1/2 − ln(2 sin πz)/2 − Cl₂(2πz)/(4πz)"},
        {ClosedFormId::HalfIntK1Alt, "Σ (−1)^{k−1}ζ(2k)z^{2k}/((k+1)(2k+1)) through Li₂, Li₃ at e^{2πz}"},
        {ClosedFormId::HalfIntK1Pos, "Σ ζ(2k)z^{2k}/((k+1)(2k+1)) through Cl₂(2πz), Cl₃(2πz)"},
    }};
    for (const auto& [id, ref] : half) {
        auto& e = b.open(id, Suite::core, ref);
        const bool alt = id == ClosedFormId::HalfIntAlt || id == ClosedFormId::HalfIntK1Alt;
        const int n = (id == ClosedFormId::HalfIntAlt || id == ClosedFormId::HalfIntPos) ? 0 : 1;
        for (double z : zs) {
            if (id == ClosedFormId::HalfIntPos && z == 1.0) continue;
            b.point(e, make(Family::HalfInt, alt ? A : Pos, z, n));
        }
        b.point(e, make(Family::HalfInt, alt ? A : Pos, -0.5, n));
    }

    auto& pmn = b.open(ClosedFormId::Pmn, Suite::core,
                       "Σ (−1)^k ζ(2k)z^{2k}/(k(2k+m)(2k+n)) by partial fractions in P(m,z), P(n,z)");
    auto& same = b.open(ClosedFormId::PmnUnitSameParity, Suite::core,
                        "Σ ζ(2k)/(k(2k+m)(2k+n)), m ≡ n mod 2, in ζ(odd) and ln(2π)");
    auto& mixed = b.open(ClosedFormId::PmnUnitMixedParity, Suite::core,
                         "Σ ζ(2k)/(k(2k+m)(2k+n)), m ≢ n mod 2, in ζ(odd) and ln(2π)");
    for (int m = 1; m <= 6; ++m)
        for (int n = m + 1; n <= 6; ++n) {
            for (double z : zs) b.point(pmn, make(Family::Pmn, A, z, n, m));
            b.point((m - n) % 2 == 0 ? same : mixed, make(Family::Pmn, Pos, 1.0, n, m));
        }

    auto& q = b.open(ClosedFormId::Q, Suite::core,
                     "Σ (−1)^k ζ(2k)z^{2k}/(k(2k+m)²) through Ein and Γ(j, 2πkz) sums", kQFloor);
    for (int m = 1; m <= 6; ++m)
        for (double z : zs) b.point(q, make(Family::Q, A, z, {}, m));
}

void add_fibonacci(Builder& b) {
    const auto A = SignConvention::alternating, Pos = SignConvention::positive;
    const auto zs = z_grid();
    auto& fp = b.open(ClosedFormId::FibAltP, Suite::fibonacci,
                      "√5 Σ (−1)^{k−1}F_{2k}ζ(2k)z^{2k}/(k(2k+n)) through Li_j(e^{2πβz}), Li_j(e^{−2παz})");
    auto& lp = b.open(ClosedFormId::LucAltP, Suite::fibonacci,
                      "Σ (−1)^{k−1}L_{2k}ζ(2k)z^{2k}/(k(2k+n)) through Li_j(e^{2πβz}), Li_j(e^{−2παz})");
    auto& fo = b.open(ClosedFormId::FibOdd, Suite::fibonacci,
                      "Σ F_{2k}ζ(2k)z^{2k}/(k(2k+1)) through Cl₂(2παz), Cl₂(2πβz)");
    auto& lo = b.open(ClosedFormId::LucOdd, Suite::fibonacci,
                      "Σ L_{2k}ζ(2k)z^{2k}/(k(2k+1)) through Cl₂(2παz), Cl₂(2πβz)");
    auto& fk = b.open(ClosedFormId::FibK, Suite::fibonacci, "Σ F_{2k}ζ(2k)z^{2k}/(k(k+n)) through Cl_j");
    auto& lk = b.open(ClosedFormId::LucK, Suite::fibonacci, "Σ L_{2k}ζ(2k)z^{2k}/(k(k+n)) through Cl_j");
    auto& fh = b.open(ClosedFormId::FibHalf, Suite::fibonacci,
                      "Σ F_{2k}ζ(2k)z^{2k}/(k(2k−1+2n)) through Cl_j");
    auto& lh = b.open(ClosedFormId::LucHalf, Suite::fibonacci,
                      "Σ L_{2k}ζ(2k)z^{2k}/(k(2k−1+2n)) through Cl_j");
    for (int n = 1; n <= 6; ++n)
        for (double z : zs) {
            b.point(fp, make(Family::FibP, A, z, n));
            b.point(lp, make(Family::LucP, A, z, n));
            const bool ev = n % 2 == 0;
            b.point(n == 1 ? fo : ev ? fk : fh, make(Family::FibCl, Pos, z, n));
            b.point(n == 1 ? lo : ev ? lk : lh, make(Family::LucCl, Pos, z, n));
        }
    // the n = 1 half-integer form is the same series as FibOdd / LucOdd
    for (double z : zs) {
        b.point(fh, make(Family::FibCl, Pos, z, 1));
        b.point(lh, make(Family::LucCl, Pos, z, 1));
    }
}

void add_bernoulli(Builder& b) {
    const auto A = SignConvention::alternating;
    auto& l = b.open(ClosedFormId::BernLog, Suite::bernoulli,
                     "Σ (ln z)^{2k+1}B_{2k}/(k(2k+1)!) = π²/3 − ln²z/2 + 2 ln z(1 − ln(−ln z)) − 2Li₂(z)");
    for (double lz : {-3.0, -1.0, -0.5, 0.5, 1.0, 3.0}) b.point(l, make(Family::Bern7, A, std::exp(lz)));
    auto& e = b.open(ClosedFormId::BernExp, Suite::bernoulli,
                     "Σ B_{2k}z^{2k+1}/(k(2k+1)!) = (4z+z²)/2 − 2z ln z − π²/3 + 2Li₂(e^{−z})");
    auto& s = b.open(ClosedFormId::BernLogSinh, Suite::bernoulli,
                     "Σ B_{2k}z^{2k}/(k(2k)!) = 2 ln((2/z) sinh(z/2))");
    auto& g = b.open(ClosedFormId::BernGF, Suite::bernoulli, "Σ_{k≥0} B_{2k}z^{2k}/(2k)! = z/2 + z/(e^z − 1)");
    for (double z : {0.5, 1.0, 3.0, -1.0, 5.0}) {
        b.point(e, make(Family::Bern8, A, z));
        b.point(s, make(Family::Bern9, A, z));
        b.point(g, make(Family::BernGF, A, z));
    }
}

void add_general(Builder& b) {
    const auto A = SignConvention::alternating;
    const auto zs = z_grid();
    auto& gp = b.open(ClosedFormId::GenP, Suite::general,
                      "Σ (−1)^k ζ(2k)z^{2k}/(k^p(2k+n)) by the recursion in p over Σ_t Li_q(−(z/t)²)");
    auto& gm = b.open(ClosedFormId::GenPmn, Suite::general,
                      "Σ (−1)^k ζ(2k)z^{2k}/(k^p(2k+m)(2k+n)) by the recursion in p");
    auto& gq = b.open(ClosedFormId::GenQ, Suite::general,
                      "Σ (−1)^k ζ(2k)z^{2k}/(k^p(2k+m)²) by the recursion in p", kQFloor);
    for (int p = 1; p <= 3; ++p)
        for (double z : zs) {
            for (int n = 1; n <= 6; ++n) {
                b.point(gp, make(Family::Ppow, A, z, n, {}, p));
                b.point(gq, make(Family::Qpow, A, z, {}, n, p));
            }
            for (int m = 1; m <= 6; ++m)
                for (int n = m + 1; n <= 6; ++n) b.point(gm, make(Family::Pmnpow, A, z, n, m, p));
        }
}

std::vector<Identity> build() {
    std::deque<Identity> forms;
    Builder b(forms);
    add_core(b);
    add_fibonacci(b);
    add_bernoulli(b);
    add_general(b);
    std::vector<Identity> out(std::make_move_iterator(forms.begin()), std::make_move_iterator(forms.end()));
    detail::add_examples(out);
    detail::add_special_values(out);

    std::set<ClosedFormId> seen;
    std::set<std::string> ids;
    for (const auto& e : out) {
        if (e.grid.empty()) throw ContractViolation("registry: identity " + e.id + " has an empty grid");
        if (!ids.insert(e.id).second) throw ContractViolation("registry: duplicate identity " + e.id);
        if (e.closed) seen.insert(*e.closed);
    }
    for (ClosedFormId id : closedform::all_closed_form_ids())
        if (!seen.count(id))
            throw ContractViolation("registry: no identity for " + std::string(closedform::to_string(id)));
    return out;
}

}  // namespace

const std::vector<Identity>& registry() {
    static const std::vector<Identity> r = build();
    return r;
}

std::vector<const Identity*> identities(Suite s) {
    std::vector<const Identity*> out;
    for (const auto& e : registry())
        if (s == Suite::all || e.suite == s) out.push_back(&e);
    return out;
}

}  // namespace zetaseries::harness
