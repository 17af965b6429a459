#ifndef HARMSUM_POLYNOMIAL_HPP
#define HARMSUM_POLYNOMIAL_HPP

// Dense univariate polynomials and reduced rational functions in n over the
// rationals, plus the Faulhaber power-sum polynomial.

#include "harmsum/exact.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace harmsum {

class Polynomial {
  public:
    Polynomial() = default;

    /// Coefficients in ascending degree; trailing zeros are dropped.
    explicit Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

    Polynomial(std::initializer_list<BigRational> coefficients) : coeffs_(coefficients) { trim(); }

    static Polynomial constant(const BigRational& c) { return Polynomial(std::vector<BigRational>{c}); }

    static Polynomial monomial(const BigRational& c, std::size_t degree) {
        std::vector<BigRational> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// The polynomial n.
    static Polynomial variable() { return monomial(1, 1); }

    /// a*n + b.
    static Polynomial linear(const BigRational& a, const BigRational& b) { return Polynomial({b, a}); }

    bool is_zero() const { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    std::span<const BigRational> coefficients() const { return coeffs_; }

    BigRational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

    BigRational leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

    bool is_constant() const { return coeffs_.size() <= 1; }

    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Horner evaluation.
    BigRational evaluate(const BigRational& x) const {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const BigRational& c) const {
        if (c == 0) return {};
        Polynomial r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    friend Polynomial operator*(const BigRational& c, const Polynomial& p) { return p.scaled(c); }

    Polynomial pow(std::int64_t e) const {
        if (e < 0) throw DomainError("Polynomial::pow: negative exponent");
        Polynomial result = constant(1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Same polynomial divided by its leading coefficient.
    Polynomial monic() const {
        if (is_zero()) return {};
        return scaled(BigRational(1) / leading());
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder).
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<BigRational> rem(num.coefficients().begin(), num.coefficients().end());
    const auto dd = static_cast<std::size_t>(den.degree());
    if (rem.size() <= dd) return {Polynomial{}, num};
    std::vector<BigRational> quot(rem.size() - dd);
    const BigRational lead_inv = BigRational(1) / den.leading();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        BigRational q = rem[i] * lead_inv;
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coefficient(j);
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// p(a*n + b), expanded.
inline Polynomial compose_linear(const Polynomial& p, std::int64_t a, std::int64_t b) {
    const Polynomial inner = Polynomial::linear(make_rational(a), make_rational(b));
    Polynomial acc;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

/// The polynomial q of degree p+1 with q(n) = sum_{k=1}^{n} k^p, from the
/// B+ form (1/(p+1)) sum_{k=1}^{p+1} C(p+1,k) B+_{p-k+1} n^k.
inline Polynomial faulhaber_poly(std::int64_t p) {
    if (p < 0) throw DomainError("faulhaber_poly: negative power");
    std::vector<BigRational> coeffs(static_cast<std::size_t>(p + 2));
    const BigRational scale = make_rational(1, p + 1);
    for (std::int64_t k = 1; k <= p + 1; ++k)
        coeffs[static_cast<std::size_t>(k)] = scale * BigRational(binomial(p + 1, k)) * bernoulli_plus(p - k + 1);
    return Polynomial(std::move(coeffs));
}

class RationalFunction {
  public:
    RationalFunction() : den_(Polynomial::constant(1)) {}

    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}  // NOLINT

    RationalFunction(const BigRational& c) : RationalFunction(Polynomial::constant(c)) {}  // NOLINT

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        canonicalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    BigRational evaluate(const BigRational& x) const {
        BigRational d = den_.evaluate(x);
        if (d == 0) throw DomainError("rational function evaluated at a pole");
        return num_.evaluate(x) / d;
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DomainError("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// Substitute n -> a*n + b in numerator and denominator.
    RationalFunction compose_linear(std::int64_t a, std::int64_t b) const {
        Polynomial d = harmsum::compose_linear(den_, a, b);
        if (d.is_zero()) throw DomainError("substitution lands on a pole");
        return {harmsum::compose_linear(num_, a, b), std::move(d)};
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  private:
    // Cancel the polynomial gcd and make the denominator monic.
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        if (!den_.is_constant()) {
            Polynomial g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        const BigRational lead = den_.leading();
        if (lead != 1) {
            const BigRational inv = BigRational(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace harmsum

#endif
