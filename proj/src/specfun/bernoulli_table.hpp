#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace zetaseries::detail {

struct Rational {
    double num;
    double den;
};

// B_2 … B_30
inline constexpr std::array<Rational, 15> kBernoulliEven = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

// ζ(2k) = (−1)^{k+1} (2π)^{2k} B_{2k} / (2 (2k)!), 1 ≤ k ≤ 15
inline double zeta_even_from_bernoulli(int k) {
    const auto& b = kBernoulliEven[k - 1];
    double v = 0.5 * std::abs(b.num) / b.den;
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 1; i <= 2 * k; ++i) v *= two_pi / i;
    return v;
}

}  // namespace zetaseries::detail
