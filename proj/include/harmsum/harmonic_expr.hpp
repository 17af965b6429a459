#ifndef HARMSUM_HARMONIC_EXPR_HPP
#define HARMSUM_HARMONIC_EXPR_HPP

// Closed forms: a rational-function constant plus a finite linear
// combination of harmonic symbols H_{a n + b}^{(m)}, m >= 1, a >= 1.

#include "harmsum/exact.hpp"
#include "harmsum/polynomial.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace harmsum {

/// a*n + b with a >= 0; a constant argument (a == 0) must be nonnegative.
struct LinearArg {
    std::int64_t a = 1;
    std::int64_t b = 0;

    LinearArg() = default;

    LinearArg(std::int64_t slope, std::int64_t offset) : a(slope), b(offset) {
        if (a < 0) throw DomainError("linear argument with negative slope");
        if (a == 0 && b < 0) throw DomainError("negative constant argument " + std::to_string(b));
    }

    static LinearArg constant(std::int64_t value) { return {0, value}; }

    bool is_constant() const { return a == 0; }

    std::int64_t at(std::int64_t n) const { return a * n + b; }

    /// This argument after n -> t.
    LinearArg compose(const LinearArg& t) const { return {a * t.a, a * t.b + b}; }

    auto operator<=>(const LinearArg&) const = default;
};

struct HarmonicSymbol {
    LinearArg arg;
    std::int64_t order = 1;

    auto operator<=>(const HarmonicSymbol&) const = default;
};

namespace detail {

// Prefix sums H_N^{(m)} by order, grown on demand.
class HarmonicMemo {
  public:
    BigRational get(std::int64_t n, std::int64_t order) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& row = rows_[order];
        if (row.empty()) row.emplace_back(0);
        while (static_cast<std::int64_t>(row.size()) <= n) {
            const auto k = static_cast<std::int64_t>(row.size());
            row.push_back(row.back() + int_pow(make_rational(k), -order));
        }
        return row[static_cast<std::size_t>(n)];
    }

  private:
    std::mutex mutex_;
    std::map<std::int64_t, std::vector<BigRational>> rows_;
};

inline HarmonicMemo& harmonic_memo() {
    static HarmonicMemo memo;
    return memo;
}

}  // namespace detail

/// H_n^{(order)} = sum_{k=1}^{n} k^{-order} for any integer order.
inline BigRational harmonic_number(std::int64_t n, std::int64_t order) {
    if (n < 0) throw DomainError("harmonic number with negative argument " + std::to_string(n));
    return detail::harmonic_memo().get(n, order);
}

class ClosedForm {
  public:
    using TermMap = std::map<HarmonicSymbol, RationalFunction>;

    ClosedForm() = default;

    ClosedForm(RationalFunction constant) : constant_(std::move(constant)) {}  // NOLINT

    /// The bare symbol. Requires order >= 1 and a non-constant argument.
    static ClosedForm symbol(const HarmonicSymbol& sym) {
        if (sym.order < 1) throw DomainError("harmonic symbol order must be >= 1");
        if (sym.arg.is_constant()) throw DomainError("harmonic symbol argument must depend on n");
        ClosedForm cf;
        cf.terms_.emplace(sym, RationalFunction(BigRational(1)));
        return cf;
    }

    const RationalFunction& constant() const { return constant_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return constant_.is_zero() && terms_.empty(); }
    bool is_constant() const { return terms_.empty(); }

    /// Coefficient of sym, zero when absent.
    RationalFunction coefficient(const HarmonicSymbol& sym) const {
        auto it = terms_.find(sym);
        return it == terms_.end() ? RationalFunction{} : it->second;
    }

    /// Adds coeff * sym; the symbol must satisfy the symbol invariants.
    void add_term(const HarmonicSymbol& sym, const RationalFunction& coeff) {
        if (sym.order < 1 || sym.arg.is_constant()) throw DomainError("add_term: symbol violates invariants");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(sym, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_constant(const RationalFunction& c) { constant_ += c; }

    ClosedForm& operator+=(const ClosedForm& o) {
        constant_ += o.constant_;
        for (const auto& [sym, coeff] : o.terms_) add_term(sym, coeff);
        return *this;
    }

    ClosedForm& operator-=(const ClosedForm& o) { return *this += o.scaled(RationalFunction(BigRational(-1))); }

    friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
    friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }

    ClosedForm operator-() const { return scaled(RationalFunction(BigRational(-1))); }

    ClosedForm scaled(const RationalFunction& rf) const {
        ClosedForm out;
        if (rf.is_zero()) return out;
        out.constant_ = constant_ * rf;
        for (const auto& [sym, coeff] : terms_) out.terms_.emplace(sym, coeff * rf);
        return out;
    }

    friend ClosedForm operator*(const RationalFunction& rf, const ClosedForm& cf) { return cf.scaled(rf); }

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  private:
    RationalFunction constant_;
    TermMap terms_;
};

/// H_{arg}^{(order)} as a closed form: a symbol when order >= 1 and arg
/// depends on n, the composed Faulhaber polynomial when order <= 0, and an
/// exact rational when arg is constant.
inline ClosedForm symbol_or_expand(const LinearArg& arg, std::int64_t order) {
    if (arg.is_constant()) return RationalFunction(harmonic_number(arg.b, order));
    if (order <= 0) return RationalFunction(compose_linear(faulhaber_poly(-order), arg.a, arg.b));
    return ClosedForm::symbol({arg, order});
}

/// Replace n by t.a*n + t.b everywhere. Symbols whose argument becomes
/// constant fold to rationals.
inline ClosedForm substitute_n(const ClosedForm& cf, const LinearArg& t) {
    ClosedForm out(cf.constant().compose_linear(t.a, t.b));
    for (const auto& [sym, coeff] : cf.terms()) {
        const std::int64_t a = sym.arg.a * t.a;
        const std::int64_t b = sym.arg.a * t.b + sym.arg.b;
        if (a == 0 && b < 0) throw DomainError("substitution yields harmonic number at negative argument " + std::to_string(b));
        const RationalFunction c = coeff.compose_linear(t.a, t.b);
        if (a == 0) {
            out.add_constant(c * RationalFunction(harmonic_number(b, sym.order)));
        } else {
            out.add_term({LinearArg(a, b), sym.order}, c);
        }
    }
    return out;
}

/// Maps an argument slope to the offset every symbol of that slope is
/// rewritten onto. Slopes not listed are left alone.
struct BasisRule {
    std::map<std::int64_t, std::int64_t> target_offset;

    /// Everything over H_{n+1}.
    static BasisRule standard() { return {{{1, 1}}}; }

    /// Sums with offset s = a n + b: H_{(a+1)n+b+1} and H_{a n+b}.
    static BasisRule for_offset(const LinearArg& s) {
        BasisRule rule;
        rule.target_offset[s.a + 1] = s.b + 1;
        if (s.a > 0) rule.target_offset[s.a] = s.b;
        return rule;
    }
};

/// Rewrite symbols onto the rule's target arguments using
/// H_{c}^{(m)} = H_{c+1}^{(m)} - 1/(c+1)^m, repeated as needed.
inline ClosedForm shift_basis(const ClosedForm& cf, const BasisRule& rule) {
    ClosedForm out(cf.constant());
    for (const auto& [sym, coeff] : cf.terms()) {
        auto it = rule.target_offset.find(sym.arg.a);
        if (it == rule.target_offset.end() || it->second == sym.arg.b) {
            out.add_term(sym, coeff);
            continue;
        }
        const std::int64_t a = sym.arg.a;
        const std::int64_t from = sym.arg.b;
        const std::int64_t to = it->second;
        // H_{an+from} - H_{an+to} = sign * sum over j in (lo, hi] of 1/(an+j)^m
        const std::int64_t lo = std::min(from, to);
        const std::int64_t hi = std::max(from, to);
        RationalFunction diff;
        for (std::int64_t j = lo + 1; j <= hi; ++j) {
            Polynomial base = Polynomial::linear(make_rational(a), make_rational(j)).pow(sym.order);
            diff += RationalFunction(Polynomial::constant(1), std::move(base));
        }
        if (from < to) diff = -diff;
        out.add_term({LinearArg(a, to), sym.order}, coeff);
        out.add_constant(coeff * diff);
    }
    return out;
}

/// Exact value at a nonnegative integer n.
inline BigRational evaluate(const ClosedForm& cf, std::int64_t n) {
    const BigRational x = make_rational(n);
    BigRational total = cf.constant().evaluate(x);
    for (const auto& [sym, coeff] : cf.terms()) {
        const std::int64_t arg = sym.arg.at(n);
        if (arg < 0)
            throw DomainError("harmonic symbol at negative argument " + std::to_string(arg) + " for n=" + std::to_string(n));
        total += coeff.evaluate(x) * harmonic_number(arg, sym.order);
    }
    return total;
}

}  // namespace harmsum

#endif
