#ifndef HARMSUM_CATALOGUE_HPP
#define HARMSUM_CATALOGUE_HPP

// The standard example table: power sums, the F and G families and the
// offset families at s = n and s = 2n.

#include "harmsum/harmonic_expr.hpp"
#include "harmsum/identities.hpp"
#include "harmsum/polynomial.hpp"
#include "harmsum/render.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace harmsum {

enum class EntryKind { power_sum, f, g, offset_f, offset_g };

inline std::string to_string(EntryKind k) {
    switch (k) {
        case EntryKind::power_sum: return "faulhaber";
        case EntryKind::f: return "F";
        case EntryKind::g: return "G";
        case EntryKind::offset_f: return "offsetF";
        case EntryKind::offset_g: return "offsetG";
    }
    return "?";
}

struct CatalogueEntry {
    EntryKind kind = EntryKind::f;
    std::int64_t p = 0;
    std::int64_t m = 1;
    LinearArg s{0, 0};

    ClosedForm closed_form() const {
        switch (kind) {
            case EntryKind::power_sum: return RationalFunction(faulhaber_poly(p));
            case EntryKind::f: return sum_f(p, m);
            case EntryKind::g: return sum_g(p, m);
            case EntryKind::offset_f: return offset_sum_f(p, m, OffsetSpec(s));
            case EntryKind::offset_g: return offset_sum_g(p, m, OffsetSpec(s));
        }
        return {};
    }
};

/// 6 power sums, F for p <= 5 and m <= 4, G for p <= 5 and m <= 3, offset F
/// at s = n (m <= 2) and s = 2n (m = 1), offset G at s = n (m = 1).
inline std::vector<CatalogueEntry> standard_catalogue() {
    std::vector<CatalogueEntry> out;
    for (std::int64_t p = 0; p <= 5; ++p) out.push_back({EntryKind::power_sum, p, -p, {0, 0}});
    for (std::int64_t m = 1; m <= 4; ++m)
        for (std::int64_t p = 0; p <= 5; ++p) out.push_back({EntryKind::f, p, m, {0, 0}});
    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t p = 0; p <= 5; ++p) out.push_back({EntryKind::g, p, m, {0, 0}});
    for (std::int64_t m = 1; m <= 2; ++m)
        for (std::int64_t p = 0; p <= 5; ++p) out.push_back({EntryKind::offset_f, p, m, {1, 0}});
    for (std::int64_t p = 0; p <= 5; ++p) out.push_back({EntryKind::offset_f, p, 1, {2, 0}});
    for (std::int64_t p = 0; p <= 5; ++p) out.push_back({EntryKind::offset_g, p, 1, {1, 0}});
    return out;
}

namespace detail {

// "2n+1+k", "n-k", "k" ...
inline std::string summand_arg(const LinearArg& base, const char* k_sign) {
    std::string s = base.a == 0 && base.b == 0 ? "" : arg_string(base);
    if (s.empty()) return std::string(k_sign[0] == '-' ? "-" : "") + "k";
    return s + k_sign + "k";
}

}  // namespace detail

/// Left-hand side in the given math format (text or latex).
inline std::string render_lhs(const CatalogueEntry& e, Format fmt) {
    const bool tex = fmt == Format::latex;
    auto order_suffix = [&](std::int64_t m) -> std::string {
        if (m == 1) return "";
        return tex ? "^{(" + std::to_string(m) + ")}" : "^(" + std::to_string(m) + ")";
    };
    if (e.kind == EntryKind::power_sum) return detail::symbol_string(LinearArg(1, 0), -e.p, fmt);

    std::string arg;
    switch (e.kind) {
        case EntryKind::f: arg = "k"; break;
        case EntryKind::g: arg = "n-k"; break;
        case EntryKind::offset_f: arg = detail::summand_arg(e.s, "+"); break;
        case EntryKind::offset_g: arg = detail::summand_arg(LinearArg(e.s.a + 1, e.s.b), "-"); break;
        default: break;
    }
    std::string weight;
    if (e.p == 1) weight = "k ";
    else if (e.p > 1) weight = tex ? "k^{" + std::to_string(e.p) + "} " : "k^" + std::to_string(e.p) + " ";
    const std::string h = arg.size() == 1 ? "H_" + arg : "H_{" + arg + "}";
    return std::string(tex ? "\\sum_{k=0}^n " : "sum_{k=0}^n ") + weight + h + order_suffix(e.m);
}

/// One catalogue line: "lhs = rhs" (text/latex) or a JSON object.
inline std::string render_entry(const CatalogueEntry& e, Format fmt) {
    const ClosedForm cf = e.closed_form();
    if (fmt == Format::json) {
        nlohmann::json j = {{"kind", to_string(e.kind)},
                            {"p", e.p},
                            {"m", e.m},
                            {"s", {{"a", e.s.a}, {"b", e.s.b}}},
                            {"lhs", render_lhs(e, Format::latex)},
                            {"closed_form", to_json(cf)}};
        return j.dump();
    }
    std::string line = render_lhs(e, fmt) + " = " + render(cf, fmt);
    return fmt == Format::latex ? "\\begin{equation}\n " + line + "\n\\end{equation}" : line;
}

inline std::string render_catalogue(Format fmt) {
    std::string out;
    const auto entries = standard_catalogue();
    if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : entries) arr.push_back(nlohmann::json::parse(render_entry(e, fmt)));
        return arr.dump(1) + "\n";
    }
    for (const auto& e : entries) out += render_entry(e, fmt) + "\n";
    return out;
}

}  // namespace harmsum

#endif
