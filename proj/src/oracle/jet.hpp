#pragma once

#include <array>
#include <cmath>

namespace zetaseries::oracle::detail {

// Truncated Taylor coefficients c_0 … c_{N−1} of a function of ε.
template <int N>
struct Jet {
    std::array<double, N> c{};

    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }

    // exp(λ ε)
    static Jet exp_linear(double lambda) {
        Jet j;
        double t = 1.0;
        for (int i = 0; i < N; ++i) {
            j.c[i] = t;
            t *= lambda / (i + 1);
        }
        return j;
    }

    // (1 + u ε)^{−e}
    static Jet inverse_power(double u, int e) {
        Jet j;
        double t = 1.0;
        for (int i = 0; i < N; ++i) {
            j.c[i] = t;
            t *= -(e + i) * u / (i + 1);
        }
        return j;
    }

    Jet operator*(const Jet& o) const {
        Jet r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; i + k < N; ++k) r.c[i + k] += c[i] * o.c[k];
        return r;
    }

    // d^i/dε^i at 0
    double derivative(int i) const {
        double f = 1.0;
        for (int k = 2; k <= i; ++k) f *= k;
        return c[i] * f;
    }
};

}  // namespace zetaseries::oracle::detail
