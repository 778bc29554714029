#include "zetaseries/constants.hpp"

#include <cmath>
#include <string>

#include "zetaseries/evaluation.hpp"
#include "bernoulli_table.hpp"

namespace zetaseries {

namespace {

ConstantsTable build() {
    ConstantsTable t{};
    t.pi = 3.141592653589793238462643;
    t.euler_gamma = 0.5772156649015328606065121;
    t.catalan = 0.9159655941772190150546035;
    t.ln2 = 0.6931471805599453094172321;
    t.zeta_odd = {1.202056903159594285399738, 1.036927755143369926331365,
                  1.008349277381922826839798, 1.002008392826082214417853,
                  1.000494188604119464558702, 1.000122713347578489146752,
                  1.000030588236307020493552, 1.000007637197637899762274,
                  1.000001908212716553938926, 1.000000476932986787806463,
                  1.000000119219925965311073, 1.000000029803503514652280,
                  1.000000007450711789835429, 1.000000001862659723513049,
                  1.000000000465662906503378};
    for (int k = 1; k <= 15; ++k) t.zeta_even[k - 1] = detail::zeta_even_from_bernoulli(k);
    t.trigamma_third = 10.095597125427094081792;
    t.trigamma_eighth = 65.388133444988034473143;
    return t;
}

}  // namespace

double ConstantsTable::zeta(int s) const {
    if (s >= 2 && s <= 30 && s % 2 == 0) return zeta_even[s / 2 - 1];
    if (s >= 3 && s <= 31 && s % 2 == 1) return zeta_odd[(s - 3) / 2];
    throw DomainError("ConstantsTable::zeta: s = " + std::to_string(s) + " outside [2, 31]");
}

const ConstantsTable& constants() {
    static const ConstantsTable table = build();
    return table;
}

}  // namespace zetaseries
