// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "harmsum/harmsum.hpp"

#include "golden.hpp"
#include "random_forms.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using namespace harmsum;
using oracle::Family;

constexpr double kFaulhaberBudgetMs = 1.0;
constexpr double kFCatalogueBudgetMs = 1000.0;
constexpr double kGridBudgetMs = 60000.0;
constexpr int kPropertyInstances = 200;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!ok) ++failures;
}

void run(int id, const char* name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, name, ok, detail);
}

std::string ms(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f ms", v);
    return buf;
}

bool faulhaber_catalogue(std::string& detail) {
    std::vector<ClosedForm> expected;
    for (const auto& row : golden::power_sums()) expected.push_back(golden::parse(row));
    const auto start = Clock::now();
    std::vector<Polynomial> got;
    for (std::int64_t p = 0; p <= 5; ++p) got.push_back(faulhaber_poly(p));
    const double t = elapsed_ms(start);
    int mismatches = 0;
    for (std::size_t p = 0; p < got.size(); ++p)
        if (ClosedForm(RationalFunction(got[p])) != expected[p]) ++mismatches;
    detail = "6 polynomials, " + std::to_string(mismatches) + " mismatches, " + ms(t) + " (limit " + ms(kFaulhaberBudgetMs) + ")";
    return mismatches == 0 && t < kFaulhaberBudgetMs;
}

bool f_catalogue(std::string& detail) {
    const auto& table = golden::f_table();
    int checked = 0, mismatches = 0;
    double t = 0;
    for (std::size_t m = 0; m < table.size(); ++m)
        for (std::size_t p = 0; p < table[m].size(); ++p) {
            const ClosedForm expected = golden::parse(table[m][p]);
            const auto start = Clock::now();
            const ClosedForm got = sum_f(static_cast<std::int64_t>(p), static_cast<std::int64_t>(m + 1));
            t += elapsed_ms(start);
            ++checked;
            if (got != expected) ++mismatches;
        }
    detail = std::to_string(checked) + " entries, " + std::to_string(mismatches) + " mismatches, " + ms(t) + " (limit " +
             ms(kFCatalogueBudgetMs) + ")";
    return checked == 24 && mismatches == 0 && t < kFCatalogueBudgetMs;
}

bool g_catalogue(std::string& detail) {
    const auto& table = golden::g_table();
    int checked = 0, mismatches = 0;
    for (std::size_t m = 0; m < table.size(); ++m)
        for (std::size_t p = 0; p < table[m].size(); ++p, ++checked)
            if (sum_g(static_cast<std::int64_t>(p), static_cast<std::int64_t>(m + 1)) != golden::parse(table[m][p])) ++mismatches;
    detail = std::to_string(checked) + " entries, " + std::to_string(mismatches) + " mismatches";
    return checked == 18 && mismatches == 0;
}

bool offset_f_catalogue(std::string& detail) {
    int checked = 0, mismatches = 0;
    const auto& at_n = golden::offset_f_n_table();
    for (std::size_t m = 0; m < at_n.size(); ++m)
        for (std::size_t p = 0; p < at_n[m].size(); ++p, ++checked)
            if (offset_sum_f(static_cast<std::int64_t>(p), static_cast<std::int64_t>(m + 1), OffsetSpec(1, 0)) !=
                golden::parse(at_n[m][p]))
                ++mismatches;
    const auto& at_2n = golden::offset_f_2n_table();
    for (std::size_t p = 0; p < at_2n.size(); ++p, ++checked)
        if (offset_sum_f(static_cast<std::int64_t>(p), 1, OffsetSpec(2, 0)) != golden::parse(at_2n[p])) ++mismatches;
    detail = std::to_string(checked) + " entries, " + std::to_string(mismatches) + " mismatches";
    return checked == 18 && mismatches == 0;
}

bool offset_g_catalogue(std::string& detail) {
    int checked = 0, mismatches = 0;
    const auto& at_n = golden::offset_g_n_table();
    for (std::size_t p = 0; p < at_n.size(); ++p, ++checked)
        if (offset_sum_g(static_cast<std::int64_t>(p), 1, OffsetSpec(1, 0)) != golden::parse(at_n[p])) ++mismatches;
    detail = std::to_string(checked) + " entries, " + std::to_string(mismatches) + " mismatches";
    return checked == 6 && mismatches == 0;
}

bool oracle_grid(std::string& detail) {
    oracle::GridSpec spec;
    spec.p_range = {0, 6};
    spec.m_range = {1, 5};
    spec.offsets = oracle::GridSpec::small_offsets();
    spec.n_range = {0, 40};
    auto provider = [](Family f, std::int64_t p, std::int64_t m, const LinearArg& s) {
        return f == Family::f ? offset_sum_f(p, m, OffsetSpec(s)) : offset_sum_g(p, m, OffsetSpec(s));
    };
    const auto start = Clock::now();
    oracle::VerificationReport total;
    for (Family f : {Family::f, Family::g}) {
        spec.family = f;
        total.append(oracle::verify_grid(spec, provider, 1));
    }
    const double t = elapsed_ms(start);
    detail = std::to_string(total.total) + " cells, " + std::to_string(total.failed) + " failed, " + ms(t) + " (limit " +
             ms(kGridBudgetMs) + ")";
    return total.total == 25830 && total.all_pass() && t < kGridBudgetMs;
}

bool negative_order(std::string& detail) {
    int checked = 0, bad = 0;
    for (std::int64_t p = 0; p <= 3; ++p)
        for (std::int64_t q = 0; q <= 3; ++q) {
            const ClosedForm cf = sum_f(p, -q);
            if (!cf.is_constant() || !cf.constant().is_polynomial()) ++bad;
            for (std::int64_t n = 0; n <= 30; ++n, ++checked)
                if (evaluate(cf, n) != oracle::lhs_direct(Family::f, p, -q, LinearArg{0, 0}, n)) ++bad;
        }
    detail = std::to_string(checked) + " values, " + std::to_string(bad) + " failures";
    return bad == 0;
}

bool sbp(std::string& detail) {
    int checked = 0, bad = 0;
    for (std::int64_t m = -2; m <= 3; ++m)
        for (std::int64_t w = -3; w <= 3; ++w)
            for (std::int64_t n = 0; n <= 30; ++n, ++checked)
                if (!sbp_check(m, w, n).all_pass()) ++bad;
    detail = std::to_string(checked) + " identities, " + std::to_string(bad) + " failures";
    return checked == 6 * 7 * 31 && bad == 0;
}

bool corollaries(std::string& detail) {
    int checked = 0, bad = 0;
    for (std::int64_t n = 1; n <= 100; ++n) {
        for (Corollary c : {Corollary::inv_k, Corollary::inv_k_plus_1}) {
            ++checked;
            if (!corollary_check(c, n).all_pass()) ++bad;
        }
    }
    const auto spot = corollary_check(Corollary::inv_k, 3).checks.at(0);
    const bool spot_ok = spot.lhs == make_rational(85, 36) && spot.rhs == make_rational(85, 36);
    detail = std::to_string(checked) + " identities, " + std::to_string(bad) + " failures, inv_k(3) = " + to_string(spot.rhs);
    return bad == 0 && spot_ok;
}

bool zero_offset(std::string& detail) {
    int checked = 0, bad = 0;
    for (std::int64_t p = 0; p <= 6; ++p)
        for (std::int64_t m = -3; m <= 5; ++m, ++checked) {
            if (offset_sum_f(p, m, OffsetSpec(0, 0)) != sum_f(p, m)) ++bad;
            if (offset_sum_g(p, m, OffsetSpec(0, 0)) != sum_g(p, m)) ++bad;
        }
    detail = std::to_string(checked) + " (p, m) pairs, " + std::to_string(bad) + " differences";
    return bad == 0;
}

bool properties(std::string& detail) {
    gen::Gen g(20261015);
    int shift = 0, subst = 0, canon = 0, offset = 0;
    for (int i = 0; i < kPropertyInstances; ++i) {
        const ClosedForm cf = g.closed_form();

        BasisRule rule;
        for (std::int64_t a = 1; a <= 3; ++a)
            if (g.integer(0, 1)) rule.target_offset[a] = g.integer(0, 3);
        const ClosedForm shifted = shift_basis(cf, rule);
        bool ok = true;
        for (std::int64_t n = 0; n <= 8; ++n) ok = ok && evaluate(shifted, n) == evaluate(cf, n);
        shift += ok;

        const LinearArg t(g.integer(0, 2), g.integer(0, 3));
        const ClosedForm sub = substitute_n(cf, t);
        ok = true;
        for (std::int64_t n = 0; n <= 8; ++n) ok = ok && evaluate(sub, n) == evaluate(cf, t.at(n));
        subst += ok;

        canon += closed_form_from_json(to_json(cf)) == cf && shift_basis(shifted, rule) == shifted &&
                 RationalFunction(cf.constant().num(), cf.constant().den()) == cf.constant();

        const std::int64_t c = g.integer(0, 40), n = g.integer(0, 40), m = g.integer(-3, 5);
        offset += oracle::harmonic_direct(c, n, m) == harmonic_number(c + n, m) - harmonic_number(c, m);
    }
    const int need = kPropertyInstances;
    detail = "shift " + std::to_string(shift) + "/" + std::to_string(need) + ", substitution " + std::to_string(subst) + "/" +
             std::to_string(need) + ", canonical " + std::to_string(canon) + "/" + std::to_string(need) + ", offset " +
             std::to_string(offset) + "/" + std::to_string(need);
    return shift == need && subst == need && canon == need && offset == need;
}

}  // namespace

int main() {
    run(1, "faulhaber catalogue", faulhaber_catalogue);
    run(2, "F catalogue", f_catalogue);
    run(3, "G catalogue", g_catalogue);
    run(4, "offset F catalogue", offset_f_catalogue);
    run(5, "offset G catalogue", offset_g_catalogue);
    run(6, "oracle grid", oracle_grid);
    run(7, "negative order collapse", negative_order);
    run(8, "summation by parts", sbp);
    run(9, "corollaries", corollaries);
    run(10, "zero offset", zero_offset);
    run(11, "property suites", properties);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
