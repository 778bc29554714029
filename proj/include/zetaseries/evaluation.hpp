#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace zetaseries {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
    double value = 0.0;
    double err_bound = 0.0;
    std::int64_t terms_used = 0;
};

struct ComplexEvaluation {
    std::complex<double> value;
    double err_bound = 0.0;
    std::int64_t terms_used = 0;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// A closed form exists only for some sign conventions or parameter ranges.
class NotAvailable : public DomainError {
public:
    using DomainError::DomainError;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double best_bound)
        : std::runtime_error(what), best_bound_(best_bound) {}
    double best_bound() const noexcept { return best_bound_; }

private:
    double best_bound_;
};

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class BranchInconsistency : public std::runtime_error {
public:
    BranchInconsistency(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Neumaier's variant of Kahan summation. Also tracks Σ|x| for rounding bounds.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::abs(x);
    }
    double value() const noexcept { return sum_ + comp_; }
    double abs_sum() const noexcept { return abs_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
};

// Linear combination of evaluated pieces with propagated error.
// Every added term is assumed to carry a few ulps of its own rounding.
class Combination {
public:
    Combination& add(double exact_term) {
        sum_.add(exact_term);
        return *this;
    }
    Combination& add(double coef, const Evaluation& e) {
        sum_.add(coef * e.value);
        err_ += std::abs(coef) * e.err_bound;
        terms_ += e.terms_used;
        return *this;
    }
    Combination& add_error(double err) {
        err_ += err;
        return *this;
    }
    Evaluation result() const {
        return {sum_.value(), err_ + 16.0 * kEps * sum_.abs_sum(), terms_};
    }

private:
    CompensatedSum sum_;
    double err_ = 0.0;
    std::int64_t terms_ = 0;
};

}  // namespace zetaseries
