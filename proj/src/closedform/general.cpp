#include <cmath>
#include <map>

#include "common.hpp"

namespace zetaseries::closedform {

namespace {

using oracle::Family;

constexpr double kDilogTol = 1e-13;

// D_q = Σ (−1)^k ζ(2k) z^{2k}/k^q; D₁ in closed form, D_q (q ≥ 2) by t-summation
class PowerSums {
public:
    PowerSums(double z, const ConstantsTable& c) : z_(z), c_(c) {}

    const Evaluation& operator()(int q) {
        auto it = cache_.find(q);
        if (it != cache_.end()) return it->second;
        Evaluation e;
        if (q == 1) {
            e = eval_S1(z_, c_);
        } else {
            oracle::SeriesSpec s;
            s.family = Family::DilogSum;
            s.p = q;
            s.z = z_;
            e = oracle::sum_series(s, kDilogTol);
        }
        return cache_.emplace(q, e).first->second;
    }

private:
    double z_;
    const ConstantsTable& c_;
    std::map<int, Evaluation> cache_;
};

// P(n,z,p) = Σ_{j<p} (−2)^j/n^{j+1} D_{p−j} + (−2/n)^p S₂,ₙ; P(n,z,0) = S₂,ₙ
Evaluation p_general(int n, int p, double z, PowerSums& D, const ConstantsTable& c) {
    Combination out;
    for (int j = 0; j < p; ++j) out.add(std::pow(-2.0, j) / std::pow(double(n), j + 1), D(p - j));
    out.add(std::pow(-2.0 / n, p), eval_S2(n, z, c));
    return out.result();
}

Evaluation pmn_general(int m, int n, int p, double z, PowerSums& D, const ConstantsTable& c) {
    auto side = [&](int v) {
        Combination s;
        for (int j = 0; j <= p - 2; ++j) s.add(std::pow(-2.0, j) / std::pow(double(v), j + 1), D(p - 1 - j));
        s.add(std::pow(-2.0 / v, p - 1), eval_S2(v, z, c));
        return s.result();
    };
    Combination out;
    out.add(1.0 / (double(m) * n), D(p));
    out.add(2.0 / (double(m) * (m - n)), side(m));
    out.add(-2.0 / (double(n) * (m - n)), side(n));
    return out.result();
}

Evaluation q_general(int m, int p, double z, PowerSums& D, const ConstantsTable& c) {
    Combination out;
    for (int j = 0; j < p; ++j) {
        const double coef = std::pow(-2.0, j) / std::pow(double(m), j + 2);
        out.add(coef, D(p - j));
        out.add(-2.0 * coef, p_general(m, p - 1 - j, z, D, c));
    }
    out.add(std::pow(-2.0 / m, p), eval_S3(m, z, c));
    return out.result();
}

}  // namespace

Evaluation eval_general_p(const oracle::SeriesSpec& spec, const ConstantsTable& c) {
    spec.validate();
    if (spec.sign != oracle::SignConvention::alternating)
        throw NotAvailable("eval_general_p: only the alternating series have closed forms");
    const double z = std::abs(spec.z);
    PowerSums D(z, c);
    switch (spec.family) {
        case Family::Ppow:
            return p_general(*spec.n, *spec.p, z, D, c);
        case Family::Pmnpow:
            return pmn_general(*spec.m, *spec.n, *spec.p, z, D, c);
        case Family::Qpow:
            return q_general(*spec.m, *spec.p, z, D, c);
        default:
            break;
    }
    throw DomainError("eval_general_p: family must be Ppow, Pmnpow or Qpow");
}

}  // namespace zetaseries::closedform
