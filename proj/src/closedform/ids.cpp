#include <array>

#include "zetaseries/closedform.hpp"

namespace zetaseries::closedform {

namespace {

struct IdName {
    ClosedFormId id;
    std::string_view name;
};

constexpr std::array<IdName, 32> kIds = {{
    {ClosedFormId::P, "P"},
    {ClosedFormId::EvenK, "EvenK"},
    {ClosedFormId::EvenOdd, "EvenOdd"},
    {ClosedFormId::UnitK, "UnitK"},
    {ClosedFormId::UnitOdd, "UnitOdd"},
    {ClosedFormId::HalfK, "HalfK"},
    {ClosedFormId::HalfOdd, "HalfOdd"},
    {ClosedFormId::ClausenOdd, "ClausenOdd"},
    {ClosedFormId::ClausenKK1, "ClausenKK1"},
    {ClosedFormId::BernLog, "BernLog"},
    {ClosedFormId::BernExp, "BernExp"},
    {ClosedFormId::BernLogSinh, "BernLogSinh"},
    {ClosedFormId::BernGF, "BernGF"},
    {ClosedFormId::HalfIntAlt, "HalfIntAlt"},
    {ClosedFormId::HalfIntPos, "HalfIntPos"},
    {ClosedFormId::HalfIntK1Alt, "HalfIntK1Alt"},
    {ClosedFormId::HalfIntK1Pos, "HalfIntK1Pos"},
    {ClosedFormId::FibAltP, "FibAltP"},
    {ClosedFormId::LucAltP, "LucAltP"},
    {ClosedFormId::FibOdd, "FibOdd"},
    {ClosedFormId::LucOdd, "LucOdd"},
    {ClosedFormId::FibK, "FibK"},
    {ClosedFormId::LucK, "LucK"},
    {ClosedFormId::FibHalf, "FibHalf"},
    {ClosedFormId::LucHalf, "LucHalf"},
    {ClosedFormId::Pmn, "Pmn"},
    {ClosedFormId::Q, "Q"},
    {ClosedFormId::PmnUnitSameParity, "PmnUnitSameParity"},
    {ClosedFormId::PmnUnitMixedParity, "PmnUnitMixedParity"},
    {ClosedFormId::GenP, "GenP"},
    {ClosedFormId::GenPmn, "GenPmn"},
    {ClosedFormId::GenQ, "GenQ"},
}};

constexpr auto kIdList = [] {
    std::array<ClosedFormId, kIds.size()> out{};
    for (std::size_t i = 0; i < kIds.size(); ++i) out[i] = kIds[i].id;
    return out;
}();

}  // namespace

std::span<const ClosedFormId> all_closed_form_ids() { return kIdList; }

std::string_view to_string(ClosedFormId id) {
    for (const auto& e : kIds)
        if (e.id == id) return e.name;
    return "?";
}

std::optional<ClosedFormId> closed_form_from_string(std::string_view s) {
    for (const auto& e : kIds)
        if (e.name == s) return e.id;
    return std::nullopt;
}

}  // namespace zetaseries::closedform
