#include "zetaseries/sequences.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zetaseries/evaluation.hpp"
#include "zetaseries/specfun.hpp"

namespace zetaseries::sequences {

const BinetConstants& binet() {
    static const BinetConstants c{std::numbers::phi, 1.0 - std::numbers::phi, std::sqrt(5.0)};
    return c;
}

double bernoulli_ratio(int k, BernoulliScale scale) {
    if (k < 1) throw DomainError("bernoulli_ratio: k must be >= 1");
    if (scale == BernoulliScale::raw && k > 15)
        throw DomainError("bernoulli_ratio: raw B_2k refused for k > 15 (overflow); use a ratio");
    const double zeta = k <= 15 ? specfun::zeta_int(2 * k).value
                                : 1.0 + specfun::zeta_minus_one(2 * k).value;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    // 2 ζ(2k) / (2π)^{2k}, built as a product so nothing overflows
    double ratio = 2.0 * zeta;
    const double inv = 1.0 / (2.0 * std::numbers::pi);
    for (int i = 0; i < 2 * k; ++i) ratio *= inv;
    ratio *= sign;
    switch (scale) {
        case BernoulliScale::over_factorial:
            return ratio;
        case BernoulliScale::over_next_factorial:
            return ratio / (2.0 * k + 1.0);
        case BernoulliScale::raw: {
            for (int i = 2; i <= 2 * k; ++i) ratio *= i;
            return ratio;
        }
    }
    return ratio;
}

FibLucas fib_lucas_weighted(int k, double z) {
    if (k < 1) throw DomainError("fib_lucas_weighted: k must be >= 1");
    const auto& b = binet();
    if (std::abs(z) > (1.0 / b.alpha) * (1.0 + 1e-14))
        throw DomainError("fib_lucas_weighted: |z| > 1/alpha, series diverges");
    const double a = std::pow(b.alpha * z, 2 * k);
    const double c = std::pow(b.beta * z, 2 * k);
    return {(a - c) / b.sqrt5, a + c};
}

HarmonicCache::HarmonicCache(int max_n) : values_(static_cast<std::size_t>(max_n) + 1, 0.0) {
    if (max_n < 0) throw DomainError("HarmonicCache: negative size");
    for (int n = 1; n <= max_n; ++n) values_[n] = values_[n - 1] + 1.0 / n;
}

double HarmonicCache::operator[](int n) const {
    if (n < 0 || n > max()) throw DomainError("HarmonicCache: index " + std::to_string(n) + " out of range");
    return values_[n];
}

double harmonic(int n) {
    static const HarmonicCache cache(4096);
    if (n <= cache.max()) return cache[n];
    double h = cache[cache.max()];
    for (int i = cache.max() + 1; i <= n; ++i) h += 1.0 / i;
    return h;
}

}  // namespace zetaseries::sequences
