#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "zetaseries/harness.hpp"

namespace zetaseries::harness {

namespace {

struct SuiteName {
    Suite suite;
    std::string_view name;
};

constexpr SuiteName kSuites[] = {
    {Suite::core, "core"},
    {Suite::examples, "examples"},
    {Suite::fibonacci, "fibonacci"},
    {Suite::bernoulli, "bernoulli"},
    {Suite::general, "general"},
    {Suite::special_values, "special_values"},
    {Suite::all, "all"},
};

}  // namespace

std::string_view to_string(Suite s) {
    for (const auto& e : kSuites)
        if (e.suite == s) return e.name;
    return "unknown";
}

std::optional<Suite> suite_from_string(std::string_view s) {
    for (const auto& e : kSuites)
        if (e.name == s) return e.suite;
    return std::nullopt;
}

double effective_tolerance(double tol, double floor, double closed_value) {
    const double rel = std::isfinite(closed_value) ? 1e-12 * std::abs(closed_value) : 0.0;
    return std::max({tol, floor, rel});
}

CheckResult run_check(const Identity& identity, const GridPoint& point, double tol, const ConstantsTable& c) {
    CheckResult r;
    r.identity_id = identity.id;
    r.params = point.params;
    r.paper_ref = identity.paper_ref;
    r.suite = identity.suite;
    r.closed_value = std::nan("");
    r.oracle_value = std::nan("");
    r.abs_diff = std::nan("");
    r.tolerance = effective_tolerance(tol, identity.tolerance, 0.0);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Evaluation closed = point.closed(c);
        r.closed_value = closed.value;
        r.tolerance = effective_tolerance(tol, identity.tolerance, closed.value);
        const Evaluation oracle = point.oracle(kOracleTol);
        r.oracle_value = oracle.value;
        r.abs_diff = std::abs(closed.value - oracle.value);
        r.combined_bound = closed.err_bound + oracle.err_bound;
        r.passed = r.abs_diff <= std::max(r.tolerance, r.combined_bound);
        if (!r.passed) r.diagnostic = "difference exceeds tolerance";
    } catch (const std::exception& e) {
        r.passed = false;
        r.diagnostic = e.what();
    }
    r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
    return r;
}

std::vector<CheckResult> run_identities(std::span<const Identity* const> ids, double tol, int parallelism,
                                        const ConstantsTable& c) {
    if (!(tol > 0.0)) throw DomainError("run_suite: tol must be > 0");
    std::vector<std::pair<const Identity*, const GridPoint*>> tasks;
    for (const Identity* e : ids)
        for (const auto& p : e->grid) tasks.emplace_back(e, &p);

    std::vector<CheckResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            results[i] = run_check(*tasks[i].first, *tasks[i].second, tol, c);
    };
    const int jobs = std::clamp(parallelism, 1, 256);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
        return a.params < b.params;
    });
    return results;
}

std::vector<CheckResult> run_suite(Suite s, double tol, int parallelism, const ConstantsTable& c) {
    const auto ids = identities(s);
    return run_identities(ids, tol, parallelism, c);
}

}  // namespace zetaseries::harness
