#ifndef HARMSUM_ORACLE_HPP
#define HARMSUM_ORACLE_HPP

// Brute-force ground truth. Everything here sums the defining series term by
// term and never touches Bernoulli numbers, Faulhaber polynomials or the
// identity constructors; closed forms to be checked are supplied by the
// caller.

#include "harmsum/exact.hpp"
#include "harmsum/harmonic_expr.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace harmsum::oracle {

/// sum_{k=1}^{n} (c+k)^{-m}, literally.
inline BigRational harmonic_direct(std::int64_t c, std::int64_t n, std::int64_t m) {
    if (c < 0 || n < 0) throw DomainError("harmonic_direct: c and n must be nonnegative");
    BigRational total = 0;
    for (std::int64_t k = 1; k <= n; ++k) total += int_pow(make_rational(c + k), -m);
    return total;
}

/// Per-run memo of H_N^{(m)} built by the same literal summation, one term
/// at a time. Not thread-safe; use one per worker.
class HarmonicTable {
  public:
    BigRational get(std::int64_t n, std::int64_t m) {
        if (n < 0) throw DomainError("harmonic number at negative argument " + std::to_string(n));
        auto& row = rows_[m];
        if (row.empty()) row.emplace_back(0);
        while (static_cast<std::int64_t>(row.size()) <= n) {
            const auto k = static_cast<std::int64_t>(row.size());
            row.push_back(row.back() + int_pow(make_rational(k), -m));
        }
        return row[static_cast<std::size_t>(n)];
    }

  private:
    std::map<std::int64_t, std::vector<BigRational>> rows_;
};

enum class Family { f, g };

inline std::string to_string(Family f) { return f == Family::f ? "F" : "G"; }

/// Left side by direct double summation:
///   F: sum_{k=0}^{n} k^p H_{s(n)+k}^{(m)}
///   G: sum_{k=0}^{n} k^p H_{s(n)+n-k}^{(m)}
inline BigRational lhs_direct(Family family, std::int64_t p, std::int64_t m, const LinearArg& s, std::int64_t n,
                              HarmonicTable& table) {
    if (p < 0 || n < 0) throw DomainError("lhs_direct: p and n must be nonnegative");
    const std::int64_t base = s.at(n);
    BigRational total = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        const BigRational weight = int_pow(make_rational(k), p);
        if (weight == 0) continue;
        const std::int64_t arg = family == Family::f ? base + k : base + n - k;
        total += weight * table.get(arg, m);
    }
    return total;
}

inline BigRational lhs_direct(Family family, std::int64_t p, std::int64_t m, const LinearArg& s, std::int64_t n) {
    HarmonicTable table;
    return lhs_direct(family, p, m, s, n, table);
}

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool empty() const { return hi < lo; }
};

struct GridSpec {
    Family family = Family::f;
    IntRange p_range{0, 6};
    IntRange m_range{1, 5};
    std::vector<LinearArg> offsets;
    IntRange n_range{0, 40};

    static constexpr std::int64_t max_n = 10000;

    void validate() const {
        if (p_range.empty() || m_range.empty() || n_range.empty() || offsets.empty())
            throw std::invalid_argument("grid ranges must be nonempty");
        if (p_range.lo < 0) throw std::invalid_argument("grid p must be nonnegative");
        if (n_range.lo < 0 || n_range.hi > max_n) throw std::invalid_argument("grid n outside [0, 10000]");
    }

    /// All offsets a*n+b with a, b in [0, 2].
    static std::vector<LinearArg> small_offsets() {
        std::vector<LinearArg> out;
        for (std::int64_t a = 0; a <= 2; ++a)
            for (std::int64_t b = 0; b <= 2; ++b) out.emplace_back(a, b);
        return out;
    }
};

struct Cell {
    Family family = Family::f;
    std::int64_t p = 0;
    std::int64_t m = 0;
    LinearArg s;
    std::int64_t n = 0;
    BigRational lhs;
    BigRational rhs;
    bool pass = false;
    std::string error;  // set when the closed form could not be evaluated
};

struct VerificationReport {
    std::vector<Cell> cells;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool all_pass() const { return failed == 0; }

    void append(const VerificationReport& other) {
        cells.insert(cells.end(), other.cells.begin(), other.cells.end());
        total += other.total;
        passed += other.passed;
        failed += other.failed;
    }

    std::vector<const Cell*> failures() const {
        std::vector<const Cell*> out;
        for (const auto& c : cells)
            if (!c.pass) out.push_back(&c);
        return out;
    }
};

/// Supplies the closed form under test for (family, p, m, s).
using ClosedFormProvider = std::function<ClosedForm(Family, std::int64_t p, std::int64_t m, const LinearArg& s)>;

/// Compares every cell of the grid exactly. Failures are recorded, not
/// thrown. With threads > 1 the (p, m, s) blocks are split across workers;
/// the report order is the same either way.
inline VerificationReport verify_grid(const GridSpec& spec, const ClosedFormProvider& provider, unsigned threads = 1) {
    spec.validate();
    struct Block {
        std::int64_t p, m;
        LinearArg s;
    };
    std::vector<Block> blocks;
    for (std::int64_t p = spec.p_range.lo; p <= spec.p_range.hi; ++p)
        for (std::int64_t m = spec.m_range.lo; m <= spec.m_range.hi; ++m)
            for (const auto& s : spec.offsets) blocks.push_back({p, m, s});

    const auto per_block = static_cast<std::size_t>(spec.n_range.hi - spec.n_range.lo + 1);
    std::vector<Cell> cells(blocks.size() * per_block);

    auto run = [&](std::size_t first, std::size_t stride) {
        HarmonicTable table;
        for (std::size_t bi = first; bi < blocks.size(); bi += stride) {
            const Block& blk = blocks[bi];
            std::string build_error;
            ClosedForm cf;
            try {
                cf = provider(spec.family, blk.p, blk.m, blk.s);
            } catch (const std::exception& e) {
                build_error = e.what();
            }
            for (std::int64_t n = spec.n_range.lo; n <= spec.n_range.hi; ++n) {
                Cell& c = cells[bi * per_block + static_cast<std::size_t>(n - spec.n_range.lo)];
                c.family = spec.family;
                c.p = blk.p;
                c.m = blk.m;
                c.s = blk.s;
                c.n = n;
                c.lhs = lhs_direct(spec.family, blk.p, blk.m, blk.s, n, table);
                c.error = build_error;
                if (build_error.empty()) {
                    try {
                        c.rhs = evaluate(cf, n);
                    } catch (const std::exception& e) {
                        c.error = e.what();
                    }
                }
                c.pass = c.error.empty() && c.lhs == c.rhs;
            }
        }
    };

    if (threads <= 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
        for (auto& th : pool) th.join();
    }

    VerificationReport report;
    report.total = cells.size();
    for (const auto& c : cells) (c.pass ? report.passed : report.failed)++;
    report.cells = std::move(cells);
    return report;
}

inline nlohmann::json to_json(const Cell& c) {
    nlohmann::json j = {{"family", to_string(c.family)},
                        {"p", c.p},
                        {"m", c.m},
                        {"s", {{"a", c.s.a}, {"b", c.s.b}}},
                        {"n", c.n},
                        {"lhs", harmsum::to_string(c.lhs)},
                        {"rhs", harmsum::to_string(c.rhs)},
                        {"pass", c.pass}};
    if (!c.error.empty()) j["error"] = c.error;
    return j;
}

/// Summary plus either every cell or only the failing ones.
inline nlohmann::json to_json(const VerificationReport& r, bool failures_only = true) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells)
        if (!failures_only || !c.pass) cells.push_back(to_json(c));
    return {{"summary", {{"total", r.total}, {"passed", r.passed}, {"failed", r.failed}}}, {"cells", cells}};
}

}  // namespace harmsum::oracle

#endif
