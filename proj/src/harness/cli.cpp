#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetaseries/harness.hpp"

namespace zetaseries::harness {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ordered_json to_json(const Evaluation& e) {
    return {{"value", std::isfinite(e.value) ? ordered_json(e.value) : ordered_json(nullptr)},
            {"err_bound", e.err_bound},
            {"terms_used", e.terms_used}};
}

double env_tol() {
    const char* s = std::getenv("ZETASERIES_TOL");
    if (!s || !*s) return kDefaultTol;
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (*end != '\0' || !(v > 0.0) || !std::isfinite(v)) throw UsageError("ZETASERIES_TOL must be a positive real");
    return v;
}

int env_jobs() {
    const char* s = std::getenv("ZETASERIES_JOBS");
    if (!s || !*s) return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError("ZETASERIES_JOBS must be a positive integer");
    return static_cast<int>(v);
}

struct EvalArgs {
    std::string family;
    std::optional<int> n, m, p;
    double z = 0.0;
    std::string method = "both";
    std::optional<double> tol;
    std::string sign = "alternating";
};

struct VerifyArgs {
    std::string suite;
    std::optional<double> tol;
    std::string format = "csv";
    std::string out;
    std::optional<int> jobs;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
    const auto family = oracle::family_from_string(a.family);
    if (!family) throw UsageError("unknown family '" + a.family + "'");
    oracle::SeriesSpec s;
    s.family = *family;
    s.n = a.n;
    s.m = a.m;
    s.p = a.p;
    s.z = a.z;
    s.sign = a.sign == "positive" ? oracle::SignConvention::positive : oracle::SignConvention::alternating;
    s.validate();
    const double tol = a.tol ? *a.tol : env_tol();

    ordered_json doc;
    doc["family"] = a.family;
    doc["params"] = s.describe();
    std::optional<Evaluation> closed, orc;
    if (a.method != "oracle") {
        closed = closedform::eval_family(s);
        doc["closed"] = to_json(*closed);
    }
    if (a.method != "closed") {
        orc = oracle::sum_series(s, std::min(tol, kOracleTol));
        doc["oracle"] = to_json(*orc);
    }
    if (closed && orc) {
        const double diff = std::abs(closed->value - orc->value);
        const double bound = closed->err_bound + orc->err_bound;
        doc["diff"] = diff;
        doc["tolerance"] = effective_tolerance(tol, 0.0, closed->value);
        doc["passed"] = diff <= std::max(effective_tolerance(tol, 0.0, closed->value), bound);
        out << doc.dump(2) << '\n';
        return doc["passed"].get<bool>() ? kOk : kFailed;
    }
    out << doc.dump(2) << '\n';
    return kOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const auto suite = suite_from_string(a.suite);
    const auto format = format_from_string(a.format);
    if (!suite) throw UsageError("unknown suite '" + a.suite + "'");
    if (!format) throw UsageError("unknown format '" + a.format + "'");
    const double tol = a.tol ? *a.tol : env_tol();
    const int jobs = a.jobs ? *a.jobs : env_jobs();

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + a.out + "' for writing");
    }
    const auto results = run_suite(*suite, tol, jobs);
    emit_report(results, *format, a.out.empty() ? out : file);
    const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    return ok ? kOk : kFailed;
}

int run_constants(std::ostream& out) {
    const ConstantsTable& c = constants();
    ordered_json doc;
    doc["pi"] = c.pi;
    doc["euler_gamma"] = c.euler_gamma;
    doc["catalan"] = c.catalan;
    doc["ln2"] = c.ln2;
    for (int s = 2; s <= 31; ++s) doc["zeta"][std::to_string(s)] = c.zeta(s);
    doc["trigamma_1_3"] = c.trigamma_third;
    doc["trigamma_1_8"] = c.trigamma_eighth;
    out << doc.dump(2) << '\n';
    return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational zeta series: closed forms checked against direct summation", "zetaseries"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate one series");
    eval->add_option("family", ea.family, "P, Pmn, Q, S1, S2, S3, Ppow, Pmnpow, Qpow, Bern7, Bern8, Bern9, "
                                          "BernGF, HalfInt, FibP, LucP, FibCl, LucCl, DilogSum")
        ->required();
    eval->add_option("--n", ea.n);
    eval->add_option("--m", ea.m);
    eval->add_option("--p", ea.p);
    eval->add_option("--z", ea.z)->required();
    eval->add_option("--method", ea.method)->check(CLI::IsMember({"closed", "oracle", "both"}));
    eval->add_option("--tol", ea.tol)->check(CLI::PositiveNumber);
    eval->add_option("--sign", ea.sign)->check(CLI::IsMember({"alternating", "positive"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and emit a report");
    verify->add_option("--suite", va.suite)
        ->required()
        ->check(CLI::IsMember({"core", "examples", "fibonacci", "bernoulli", "general", "special_values", "all"}));
    verify->add_option("--tol", va.tol)->check(CLI::PositiveNumber);
    verify->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
    verify->add_option("--out", va.out);
    verify->add_option("--jobs", va.jobs)->check(CLI::PositiveNumber);

    app.add_subcommand("constants", "Print the constants table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kUsage;
    }

    try {
        if (*eval) return run_eval(ea, out);
        if (*verify) return run_verify(va, out);
        return run_constants(out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    } catch (const NotAvailable& e) {
        err << "not available: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::ios_base::failure& e) {
        err << "io error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace zetaseries::harness
