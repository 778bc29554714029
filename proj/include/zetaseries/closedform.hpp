#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "zetaseries/constants.hpp"
#include "zetaseries/evaluation.hpp"
#include "zetaseries/oracle.hpp"

namespace zetaseries::closedform {

enum class ClosedFormId {
    P,
    EvenK,
    EvenOdd,
    UnitK,
    UnitOdd,
    HalfK,
    HalfOdd,
    ClausenOdd,
    ClausenKK1,
    BernLog,
    BernExp,
    BernLogSinh,
    BernGF,
    HalfIntAlt,
    HalfIntPos,
    HalfIntK1Alt,
    HalfIntK1Pos,
    FibAltP,
    LucAltP,
    FibOdd,
    LucOdd,
    FibK,
    LucK,
    FibHalf,
    LucHalf,
    Pmn,
    Q,
    PmnUnitSameParity,
    PmnUnitMixedParity,
    GenP,
    GenPmn,
    GenQ,
};

std::span<const ClosedFormId> all_closed_form_ids();
std::string_view to_string(ClosedFormId id);
std::optional<ClosedFormId> closed_form_from_string(std::string_view s);

using EvaluationPair = std::pair<Evaluation, Evaluation>;

// Σ (−1)^k ζ(2k) z^{2k} / (k(2k+n)), z > 0
Evaluation eval_P(int n, double z, const ConstantsTable& c = constants());

// (Σ ζ(2k) z^{2k}/(k(k+n)), Σ ζ(2k) z^{2k}/(k(2k−1+2n)))
EvaluationPair eval_even_halfint(int n, double z, const ConstantsTable& c = constants());

enum class UnitGrid { z_eq_1, z_eq_half };
// same pair at z = 1 or z = 1/2
EvaluationPair eval_unit_grids(int n, UnitGrid which, const ConstantsTable& c = constants());

enum class ClausenSeries {
    odd_denom,  // Σ ζ(2k) z^{2k}/(k(2k+1))
    kk1,        // Σ ζ(2k) z^{2k}/(k(k+1))
};
Evaluation eval_clausen_first_order(double z, ClausenSeries which, const ConstantsTable& c = constants());

enum class BernoulliSeries {
    log_argument,         // Σ (ln z)^{2k+1} B_{2k}/(k(2k+1)!)
    exponential,          // Σ B_{2k} z^{2k+1}/(k(2k+1)!)
    log_sinh,             // Σ B_{2k} z^{2k}/(k(2k)!)
    generating_function,  // Σ_{k≥0} B_{2k} z^{2k}/(2k)!
};
Evaluation eval_bernoulli_family(double z, BernoulliSeries which, const ConstantsTable& c = constants());

enum class DerivSeries {
    alternating_odd,     // Σ (−1)^{k−1} ζ(2k) z^{2k}/(2k+1)
    positive_odd,        // Σ ζ(2k) z^{2k}/(2k+1)
    alternating_odd_k1,  // Σ (−1)^{k−1} ζ(2k) z^{2k}/((2k+1)(k+1))
    positive_odd_k1,     // Σ ζ(2k) z^{2k}/((k+1)(2k+1))
};

struct BranchEvaluation {
    Evaluation real;
    double residual_im = 0.0;
};

Evaluation eval_deriv_family(double z, DerivSeries which, const ConstantsTable& c = constants());
// Complex-branch forms with their imaginary residual; no residual check.
BranchEvaluation eval_deriv_branch(double z, DerivSeries which, const ConstantsTable& c = constants());

enum class FibSeries {
    fib_alternating,    // √5 Σ (−1)^{k−1} F_{2k} ζ(2k) z^{2k}/(k(2k+n))
    lucas_alternating,  // Σ (−1)^{k−1} L_{2k} ζ(2k) z^{2k}/(k(2k+n))
    fib_odd,            // Σ F_{2k} ζ(2k) z^{2k}/(k(2k+1))
    lucas_odd,          // Σ L_{2k} ζ(2k) z^{2k}/(k(2k+1))
    fib_k,              // (√5/2) Σ F_{2k} ζ(2k) z^{2k}/(k(k+n))
    lucas_k,            // (1/2) Σ L_{2k} ζ(2k) z^{2k}/(k(k+n))
    fib_half,           // √5 Σ F_{2k} ζ(2k) z^{2k}/(k(2k−1+2n))
    lucas_half,         // Σ L_{2k} ζ(2k) z^{2k}/(k(2k−1+2n))
};
Evaluation eval_fibonacci_family(int n, double z, FibSeries which, const ConstantsTable& c = constants());

// Σ (−1)^{k−1} ζ(2k) z^{2k}/(k(2k+m)(2k+n)), z > 0
Evaluation eval_Pmn(int m, int n, double z, const ConstantsTable& c = constants());
// Σ ζ(2k)/(k(2k+m)(2k+n))
Evaluation eval_Pmn_unit(int m, int n, const ConstantsTable& c = constants());
// Σ (−1)^{k−1} ζ(2k) z^{2k}/(k(2k+m)²), 0 < z ≤ 1
Evaluation eval_Q(int m, double z, std::int64_t k_budget = 20000, double tol = 1e-10,
                  const ConstantsTable& c = constants());
// Ppow / Pmnpow / Qpow through the partial-fraction recursions
Evaluation eval_general_p(const oracle::SeriesSpec& spec, const ConstantsTable& c = constants());

// Σ (−1)^k ζ(2k) z^{2k} / k, Σ (−1)^k ζ(2k) z^{2k}/(2k+n), Σ (−1)^k ζ(2k) z^{2k}/(2k+m)²
Evaluation eval_S1(double z, const ConstantsTable& c = constants());
Evaluation eval_S2(int n, double z, const ConstantsTable& c = constants());
Evaluation eval_S3(int m, double z, const ConstantsTable& c = constants());

// Value of the oracle series `spec` computed through identity `id`.
// Throws DomainError when `spec` is not an instance of `id`.
Evaluation eval_identity(ClosedFormId id, const oracle::SeriesSpec& spec, const ConstantsTable& c = constants());

// Identity used by eval_family for `spec`; throws NotAvailable.
ClosedFormId closed_form_for(const oracle::SeriesSpec& spec);

// Value of the oracle series `spec` computed from closed forms.
// Throws NotAvailable when no closed form covers the instance.
Evaluation eval_family(const oracle::SeriesSpec& spec, const ConstantsTable& c = constants());

}  // namespace zetaseries::closedform
