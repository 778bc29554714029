#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetaseries/evaluation.hpp"

namespace zetaseries::oracle {

enum class Family {
    P,        // 1/(k(2k+n))
    Pmn,      // 1/(k(2k+m)(2k+n))
    Q,        // 1/(k(2k+m)²)
    S1,       // 1/k
    S2,       // 1/(2k+n)
    S3,       // 1/(2k+m)²
    Ppow,     // 1/(k^p(2k+n))
    Pmnpow,   // 1/(k^p(2k+m)(2k+n))
    Qpow,     // 1/(k^p(2k+m)²)
    Bern7,    // Σ (ln z)^{2k+1} B_{2k}/(k(2k+1)!)
    Bern8,    // Σ B_{2k} z^{2k+1}/(k(2k+1)!)
    Bern9,    // Σ B_{2k} z^{2k}/(k(2k)!)
    BernGF,   // Σ_{k≥0} B_{2k} z^{2k}/(2k)!
    HalfInt,  // 1/((2k+1)(k+1)^n), n ∈ {0, 1}
    FibP,     // F_{2k} weight, 1/(k(2k+n))
    LucP,     // L_{2k} weight, 1/(k(2k+n))
    FibCl,    // F_{2k} weight, 1/(k(2k+n)), positive sign
    LucCl,    // L_{2k} weight, 1/(k(2k+n)), positive sign
    DilogSum, // Σ_t Li_p(−(z/t)²)
};

enum class SignConvention { alternating, positive };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);
std::string_view to_string(SignConvention s);

// One series instance. For ζ-weighted families the value is
// Σ_{k≥1} σ_k ζ(2k) z^{2k} r(k) with σ_k = (−1)^k (alternating) or 1 (positive).
struct SeriesSpec {
    Family family = Family::P;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> p;
    double z = 0.0;
    SignConvention sign = SignConvention::alternating;

    // Throws DomainError naming the violated condition.
    void validate() const;
    std::string describe() const;
};

struct SumOptions {
    std::int64_t term_budget = 1'000'000;
    std::int64_t dilog_budget = 100'000;
};

Evaluation sum_series(const SeriesSpec& spec, double target_tol, const SumOptions& options = {});

// Σ_{k≥0} c_k with c_k = terms(k), k < count; the c_k must alternate in sign.
Evaluation cvz_accelerate(const std::function<double(int)>& terms, int count);

// r(k) = coef / Π (a_i k + b_i)^{e_i}
struct LinearFactor {
    double a;
    double b;
    int power;
};

class RationalWeight {
public:
    RationalWeight() = default;
    RationalWeight(double coef, std::vector<LinearFactor> factors);
    double operator()(double k) const;
    int degree() const;
    const std::vector<LinearFactor>& factors() const { return factors_; }
    double coef() const { return coef_; }

private:
    double coef_ = 1.0;
    std::vector<LinearFactor> factors_;
};

// Σ_{k≥1} σ_k ζ(2k) x^{2k} r(k), |x| ≤ 1
Evaluation zeta_weighted_sum(SignConvention sign, double x, const RationalWeight& r, double tol,
                             const SumOptions& options = {});
// Σ_{k≥1} σ_k x^{2k} r(k), |x| ≤ 1
Evaluation power_weighted_sum(SignConvention sign, double x, const RationalWeight& r, double tol,
                              const SumOptions& options = {});

}  // namespace zetaseries::oracle
