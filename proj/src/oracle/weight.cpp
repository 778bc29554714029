#include <cmath>

#include "zetaseries/oracle.hpp"

namespace zetaseries::oracle {

RationalWeight::RationalWeight(double coef, std::vector<LinearFactor> factors)
    : coef_(coef), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (!(f.a > 0.0) || f.b < 0.0 || f.power < 1)
            throw DomainError("RationalWeight: factors must be a*k + b with a > 0, b >= 0, power >= 1");
    }
}

double RationalWeight::operator()(double k) const {
    double v = coef_;
    for (const auto& f : factors_) v /= std::pow(f.a * k + f.b, f.power);
    return v;
}

int RationalWeight::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.power;
    return d;
}

}  // namespace zetaseries::oracle
