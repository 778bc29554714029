#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zetaseries/closedform.hpp"
#include "zetaseries/constants.hpp"
#include "zetaseries/evaluation.hpp"
#include "zetaseries/oracle.hpp"

namespace zetaseries::harness {

enum class Suite { core, examples, fibonacci, bernoulli, general, special_values, all };

std::string_view to_string(Suite s);
std::optional<Suite> suite_from_string(std::string_view s);

// Closed route sees the constants table under test; the oracle route never does.
struct GridPoint {
    std::string params;
    std::function<Evaluation(const ConstantsTable&)> closed;
    std::function<Evaluation(double oracle_tol)> oracle;
};

struct Identity {
    std::string id;
    std::string paper_ref;
    Suite suite = Suite::core;
    std::optional<closedform::ClosedFormId> closed;
    std::optional<oracle::SeriesSpec> oracle_spec;
    std::vector<GridPoint> grid;
    double tolerance = 0.0;  // floor applied on top of the run tolerance
};

// Built once; throws ContractViolation if a ClosedFormId has no entry
// or an identity has an empty grid.
const std::vector<Identity>& registry();
std::vector<const Identity*> identities(Suite s);

struct CheckResult {
    std::string identity_id;
    std::string params;
    std::string paper_ref;
    Suite suite = Suite::core;
    double closed_value = 0.0;
    double oracle_value = 0.0;
    double abs_diff = 0.0;
    double combined_bound = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string diagnostic;
    std::chrono::nanoseconds wall_time{0};
};

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kOracleTol = 1e-13;

// max(tol, floor, 1e-12·|closed|)
double effective_tolerance(double tol, double floor, double closed_value);

CheckResult run_check(const Identity& identity, const GridPoint& point, double tol,
                      const ConstantsTable& c = constants());

// Sorted by identity_id, then params.
std::vector<CheckResult> run_suite(Suite s, double tol, int parallelism, const ConstantsTable& c = constants());
std::vector<CheckResult> run_identities(std::span<const Identity* const> ids, double tol, int parallelism,
                                        const ConstantsTable& c = constants());

enum class ReportFormat { json, csv, markdown };
std::optional<ReportFormat> format_from_string(std::string_view s);

// Shortest round-trip decimal form.
std::string format_double(double v);

// Throws std::ios_base::failure if the sink goes bad.
void emit_report(std::span<const CheckResult> results, ReportFormat format, std::ostream& out);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetaseries::harness
