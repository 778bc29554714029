#pragma once

#include <functional>
#include <vector>

#include "zetaseries/evaluation.hpp"

namespace zetaseries::quad {

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss–Legendre rule with n nodes, cached per n.
const Rule& gauss_legendre(int n);

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n);

// Adaptive bisection comparing 20- and 40-point rules on each panel.
Evaluation integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol = 1e-16, int max_depth = 16);

}  // namespace zetaseries::quad
