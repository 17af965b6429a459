#ifndef HARMSUM_IDENTITIES_HPP
#define HARMSUM_IDENTITIES_HPP

// Closed-form constructors for weighted sums of harmonic numbers and exact
// numeric checkers for the summation-by-parts identity and two classical
// corollaries.
//
//   sum_f(p, m)          = sum_{k=0}^{n} k^p H_k^{(m)}
//   sum_g(p, m)          = sum_{k=0}^{n} k^p H_{n-k}^{(m)}
//   offset_sum_f(p,m,s)  = sum_{k=0}^{n} k^p H_{s+k}^{(m)}
//   offset_sum_g(p,m,s)  = sum_{k=0}^{n} k^p H_{s+n-k}^{(m)}
//
// Each constructor works over H_n exactly as the reduction is written and
// shifts to the display basis once at the end.

#include "harmsum/exact.hpp"
#include "harmsum/harmonic_expr.hpp"
#include "harmsum/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace harmsum {

/// Nonnegative offset s = a n + b (a, b >= 0).
class OffsetSpec {
  public:
    OffsetSpec() : s_(0, 0) {}

    OffsetSpec(std::int64_t a, std::int64_t b) : s_(a, b) {
        if (a < 0 || b < 0) throw DomainError("offset a*n+b requires a >= 0 and b >= 0");
    }

    explicit OffsetSpec(const LinearArg& s) : OffsetSpec(s.a, s.b) {}

    const LinearArg& arg() const { return s_; }
    bool is_zero() const { return s_.a == 0 && s_.b == 0; }

  private:
    LinearArg s_;
};

/// Which sum an offset constructor returns.
enum class OffsetVariant {
    shifted,   ///< sum k^p H_{s+k}^{(m)} (or H_{s+n-k}^{(m)})
    harmonic,  ///< sum k^p H_{s,k}^{(m)} (or H_{s,n-k}^{(m)}), offset harmonic numbers
};

namespace detail {

inline const LinearArg& arg_n() {
    static const LinearArg n(1, 0);
    return n;
}

inline RationalFunction rq(const BigRational& c) { return RationalFunction(c); }

inline RationalFunction power_sum(std::int64_t p) { return RationalFunction(faulhaber_poly(p)); }

// F(n,p,m) over H_n:
//   H_n^{(-p)} H_n^{(m)} + H_n^{(m-p)} - 1/(p+1) sum_{k=1}^{p+1} C(p+1,k) B+_{p-k+1} H_n^{(m-k)}
inline ClosedForm raw_sum_f(std::int64_t p, std::int64_t m) {
    const LinearArg& n = arg_n();
    ClosedForm out = symbol_or_expand(n, m).scaled(power_sum(p));
    out += symbol_or_expand(n, m - p);
    const BigRational inv = make_rational(1, p + 1);
    for (std::int64_t k = 1; k <= p + 1; ++k) {
        const BigRational c = inv * BigRational(binomial(p + 1, k)) * bernoulli_plus(p - k + 1);
        if (c == 0) continue;
        out -= symbol_or_expand(n, m - k).scaled(rq(c));
    }
    return out;
}

// G(n,p,m) over H_n:
//   H_n^{(-p)} H_n^{(m)} + [p=0] H_n^{(m)}
//   + 1/(p+1) sum_{k=1}^{p+1} (-1)^k C(p+1,k) [B+_{p-k+1} + (p-k+1) H_n^{(k-p)}] H_n^{(m-k)}
inline ClosedForm raw_sum_g(std::int64_t p, std::int64_t m) {
    const LinearArg& n = arg_n();
    ClosedForm out = symbol_or_expand(n, m).scaled(power_sum(p));
    if (p == 0) out += symbol_or_expand(n, m);
    const BigRational inv = make_rational(1, p + 1);
    for (std::int64_t k = 1; k <= p + 1; ++k) {
        // k <= p here makes H_n^{(k-p)} a power sum; at k = p+1 its weight is 0.
        RationalFunction bracket = rq(bernoulli_plus(p - k + 1));
        if (k <= p) bracket += RationalFunction(faulhaber_poly(p - k).scaled(make_rational(p - k + 1)));
        const BigRational c = inv * BigRational(binomial(p + 1, k)) * (k % 2 ? -1 : 1);
        out += symbol_or_expand(n, m - k).scaled(bracket * rq(c));
    }
    return out;
}

// F or G at n -> s - 1; identically zero when s is the constant 0.
inline ClosedForm at_s_minus_one(const ClosedForm& raw, const LinearArg& s) {
    if (s.a == 0 && s.b == 0) return {};
    return substitute_n(raw, LinearArg(s.a, s.b - 1));
}

// -H_s^{(m)} (H_n^{(-p)} + [p=0])
inline ClosedForm offset_correction(std::int64_t p, std::int64_t m, const LinearArg& s) {
    RationalFunction weight = power_sum(p);
    if (p == 0) weight += rq(1);
    return -symbol_or_expand(s, m).scaled(weight);
}

}  // namespace detail

/// sum_{k=0}^{n} k^p H_k^{(m)} over the H_{n+1} basis.
inline ClosedForm sum_f(std::int64_t p, std::int64_t m) {
    if (p < 0) throw DomainError("sum_f: p must be nonnegative");
    return shift_basis(detail::raw_sum_f(p, m), BasisRule::standard());
}

/// sum_{k=0}^{n} k^p H_{n-k}^{(m)} over the H_{n+1} basis.
inline ClosedForm sum_g(std::int64_t p, std::int64_t m) {
    if (p < 0) throw DomainError("sum_g: p must be nonnegative");
    return shift_basis(detail::raw_sum_g(p, m), BasisRule::standard());
}

/// sum_{k=0}^{n} k^p H_{s+k}^{(m)}, by expanding (k-s)^p binomially:
///   sum_{j=0}^{p} (-1)^j C(p,j) s^j [F(n+s, p-j, m) - F(s-1, p-j, m)]
/// The harmonic variant subtracts H_s^{(m)} (H_n^{(-p)} + [p=0]).
inline ClosedForm offset_sum_f(std::int64_t p, std::int64_t m, const OffsetSpec& offset,
                               OffsetVariant variant = OffsetVariant::shifted) {
    if (p < 0) throw DomainError("offset_sum_f: p must be nonnegative");
    const LinearArg& s = offset.arg();
    const Polynomial s_poly = Polynomial::linear(make_rational(s.a), make_rational(s.b));
    const LinearArg upper(s.a + 1, s.b);
    ClosedForm out;
    for (std::int64_t j = 0; j <= p; ++j) {
        const ClosedForm raw = detail::raw_sum_f(p - j, m);
        ClosedForm diff = substitute_n(raw, upper) - detail::at_s_minus_one(raw, s);
        // Polynomial::pow(0) is 1 even for s = 0.
        const Polynomial weight = s_poly.pow(j).scaled(BigRational(binomial(p, j)) * (j % 2 ? -1 : 1));
        out += diff.scaled(RationalFunction(weight));
    }
    if (variant == OffsetVariant::harmonic) out += detail::offset_correction(p, m, s);
    return shift_basis(out, BasisRule::for_offset(s));
}

/// sum_{k=0}^{n} k^p H_{s+n-k}^{(m)}:
///   G(n+s, p, m) - sum_{j=0}^{p} C(p,j) (n+1)^{p-j} G(s-1, j, m)
/// The harmonic variant subtracts H_s^{(m)} (H_n^{(-p)} + [p=0]).
inline ClosedForm offset_sum_g(std::int64_t p, std::int64_t m, const OffsetSpec& offset,
                               OffsetVariant variant = OffsetVariant::shifted) {
    if (p < 0) throw DomainError("offset_sum_g: p must be nonnegative");
    const LinearArg& s = offset.arg();
    ClosedForm out = substitute_n(detail::raw_sum_g(p, m), LinearArg(s.a + 1, s.b));
    const Polynomial n_plus_one = Polynomial::linear(1, 1);
    for (std::int64_t j = 0; j <= p; ++j) {
        const ClosedForm lower = detail::at_s_minus_one(detail::raw_sum_g(j, m), s);
        if (lower.is_zero()) continue;
        const Polynomial weight = n_plus_one.pow(p - j).scaled(BigRational(binomial(p, j)));
        out -= lower.scaled(RationalFunction(weight));
    }
    if (variant == OffsetVariant::harmonic) out += detail::offset_correction(p, m, s);
    return shift_basis(out, BasisRule::for_offset(s));
}

enum class IdentityFamily { f, g, offset_f, offset_g, sbp, corollary };

inline std::string to_string(IdentityFamily f) {
    switch (f) {
        case IdentityFamily::f: return "F";
        case IdentityFamily::g: return "G";
        case IdentityFamily::offset_f: return "offsetF";
        case IdentityFamily::offset_g: return "offsetG";
        case IdentityFamily::sbp: return "sbp";
        case IdentityFamily::corollary: return "corollary";
    }
    return "?";
}

struct IdentityParams {
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> m;
    std::optional<LinearArg> s;
    std::optional<std::int64_t> w;
    std::string variant;  // corollary name when family == corollary
};

struct IdentityCheck {
    std::int64_t n = 0;
    BigRational lhs;
    BigRational rhs;

    bool pass() const { return lhs == rhs; }
};

struct IdentityReport {
    IdentityFamily family = IdentityFamily::sbp;
    IdentityParams params;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

/// Both sides of
///   sum_{k=0}^{n} [(k+1)^w - k^w] H_k^{(m)} = (n+1)^w H_n^{(m)} - H_n^{(m-w)}
/// at one n. The k = 0 term carries H_0 = 0 and is skipped, so 0^w never
/// has to be formed for negative w.
inline IdentityReport sbp_check(std::int64_t m, std::int64_t w, std::int64_t n) {
    if (n < 0) throw DomainError("sbp_check: n must be nonnegative");
    // Summation by parts with x_k = (k+1)^w - k^w, y_k = H_k^{(m)}, whose
    // partial sums s_k = (k+1)^w telescope.
    BigRational lhs = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const BigRational x = int_pow(make_rational(k + 1), w) - int_pow(make_rational(k), w);
        lhs += x * harmonic_number(k, m);
    }
    const BigRational rhs = int_pow(make_rational(n + 1), w) * harmonic_number(n, m) - harmonic_number(n, m - w);
    IdentityReport report;
    report.family = IdentityFamily::sbp;
    report.params.m = m;
    report.params.w = w;
    report.checks.push_back({n, lhs, rhs});
    return report;
}

enum class Corollary {
    inv_k,         ///< sum_{k=1}^{n} H_k / k = (H_n^2 + H_n^{(2)}) / 2
    inv_k_plus_1,  ///< sum_{k=0}^{n} H_k / (k+1) = (H_{n+1}^2 - H_{n+1}^{(2)}) / 2
};

inline std::string to_string(Corollary c) { return c == Corollary::inv_k ? "inv_k" : "inv_k_plus_1"; }

inline std::optional<Corollary> parse_corollary(const std::string& s) {
    if (s == "inv_k") return Corollary::inv_k;
    if (s == "inv_k_plus_1") return Corollary::inv_k_plus_1;
    return std::nullopt;
}

inline IdentityReport corollary_check(Corollary which, std::int64_t n) {
    IdentityReport report;
    report.family = IdentityFamily::corollary;
    report.params.variant = to_string(which);
    BigRational lhs = 0, rhs;
    if (which == Corollary::inv_k) {
        if (n < 1) throw DomainError("corollary inv_k requires n >= 1");
        for (std::int64_t k = 1; k <= n; ++k) lhs += harmonic_number(k, 1) / make_rational(k);
        const BigRational h = harmonic_number(n, 1);
        rhs = (h * h + harmonic_number(n, 2)) / 2;
    } else {
        if (n < 0) throw DomainError("corollary inv_k_plus_1 requires n >= 0");
        for (std::int64_t k = 0; k <= n; ++k) lhs += harmonic_number(k, 1) / make_rational(k + 1);
        const BigRational h = harmonic_number(n + 1, 1);
        rhs = (h * h - harmonic_number(n + 1, 2)) / 2;
    }
    report.checks.push_back({n, lhs, rhs});
    return report;
}

}  // namespace harmsum

#endif
