#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

#include "zetaseries/harness.hpp"

namespace zetaseries::harness {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

nlohmann::ordered_json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

constexpr Suite kOrder[] = {Suite::core,    Suite::examples, Suite::fibonacci,
                            Suite::bernoulli, Suite::general, Suite::special_values};

}  // namespace

std::optional<ReportFormat> format_from_string(std::string_view s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    if (s == "markdown" || s == "md") return ReportFormat::markdown;
    return std::nullopt;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void emit_report(std::span<const CheckResult> results, ReportFormat format, std::ostream& out) {
    if (results.empty()) throw ContractViolation("emit_report: no results");
    switch (format) {
        case ReportFormat::csv:
            out << "identity_id,params,closed_value,oracle_value,abs_diff,tolerance,passed,paper_ref\r\n";
            for (const auto& r : results)
                out << csv_field(r.identity_id) << ',' << csv_field(r.params) << ','
                    << format_double(r.closed_value) << ',' << format_double(r.oracle_value) << ','
                    << format_double(r.abs_diff) << ',' << format_double(r.tolerance) << ','
                    << (r.passed ? "true" : "false") << ',' << csv_field(r.paper_ref) << "\r\n";
            break;
        case ReportFormat::json: {
            auto doc = nlohmann::ordered_json::array();
            for (const auto& r : results)
                doc.push_back({{"identity_id", r.identity_id},
                               {"params", r.params},
                               {"closed_value", number(r.closed_value)},
                               {"oracle_value", number(r.oracle_value)},
                               {"abs_diff", number(r.abs_diff)},
                               {"tolerance", number(r.tolerance)},
                               {"passed", r.passed},
                               {"paper_ref", r.paper_ref}});
            out << doc.dump(2) << '\n';
            break;
        }
        case ReportFormat::markdown: {
            std::size_t passed_all = 0;
            for (Suite s : kOrder) {
                std::size_t total = 0, passed = 0;
                for (const auto& r : results)
                    if (r.suite == s) {
                        ++total;
                        passed += r.passed;
                    }
                if (total == 0) continue;
                out << "## " << to_string(s) << "\n\n"
                    << "| identity_id | params | closed_value | oracle_value | abs_diff | tolerance | passed | paper_ref |\n"
                    << "|---|---|---|---|---|---|---|---|\n";
                for (const auto& r : results) {
                    if (r.suite != s) continue;
                    out << "| " << md_cell(r.identity_id) << " | " << md_cell(r.params) << " | "
                        << format_double(r.closed_value) << " | " << format_double(r.oracle_value) << " | "
                        << format_double(r.abs_diff) << " | " << format_double(r.tolerance) << " | "
                        << (r.passed ? "true" : "false") << " | " << md_cell(r.paper_ref) << " |\n";
                }
                out << "\n" << passed << " passed / " << total << " total\n\n";
                passed_all += passed;
            }
            out << "**" << passed_all << " passed / " << results.size() << " total**\n";
            break;
        }
    }
    out.flush();
    if (!out) throw std::ios_base::failure("emit_report: write failed; output may be partial");
}

}  // namespace zetaseries::harness
