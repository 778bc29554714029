#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetaseries/harness.hpp"

namespace zetaseries::harness::detail {

std::string spec_params(const oracle::SeriesSpec& s);

// Closed value of an expression over the constants table; err covers its rounding.
Evaluation constant_value(double v);

void add_examples(std::vector<Identity>& out);
void add_special_values(std::vector<Identity>& out);

}  // namespace zetaseries::harness::detail
