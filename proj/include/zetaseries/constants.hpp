#pragma once

#include <array>

namespace zetaseries {

struct ConstantsTable {
    double pi;
    double euler_gamma;
    double catalan;
    double ln2;
    // zeta_odd[i] = ζ(2i + 3), i.e. ζ(3) … ζ(31)
    std::array<double, 15> zeta_odd;
    // zeta_even[i] = ζ(2i + 2), i.e. ζ(2) … ζ(30)
    std::array<double, 15> zeta_even;
    double trigamma_third;
    double trigamma_eighth;

    // ζ(s) for 2 ≤ s ≤ 31; throws DomainError otherwise.
    double zeta(int s) const;
};

const ConstantsTable& constants();

}  // namespace zetaseries
