#pragma once

#include <vector>

namespace zetaseries::sequences {

struct BinetConstants {
    double alpha;
    double beta;
    double sqrt5;
};

const BinetConstants& binet();

enum class BernoulliScale {
    raw,                  // B_{2k}, k ≤ 15
    over_factorial,       // B_{2k} / (2k)!
    over_next_factorial,  // B_{2k} / (2k+1)!
};

double bernoulli_ratio(int k, BernoulliScale scale);

struct FibLucas {
    double fib;    // F_{2k} z^{2k}
    double lucas;  // L_{2k} z^{2k}
};

FibLucas fib_lucas_weighted(int k, double z);

class HarmonicCache {
public:
    explicit HarmonicCache(int max_n);
    double operator[](int n) const;
    int max() const { return static_cast<int>(values_.size()) - 1; }

private:
    std::vector<double> values_;
};

double harmonic(int n);

}  // namespace zetaseries::sequences
