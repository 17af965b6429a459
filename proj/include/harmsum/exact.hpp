#ifndef HARMSUM_EXACT_HPP
#define HARMSUM_EXACT_HPP

// Exact scalar layer: GMP-backed integers and rationals, binomials, integer
// powers with the 0^0 = 1 convention, and the B+ Bernoulli numbers.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmsum {

using BigInt = mpz_class;
// mpq_class keeps every value in lowest terms with a positive denominator.
using BigRational = mpq_class;

class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

inline BigRational parse_rational(const std::string& text) {
    BigRational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0) throw DomainError("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigRational& r) { return r.get_str(10); }
inline std::string to_string(const BigInt& z) { return z.get_str(10); }

/// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw DomainError("binomial: negative n");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// base^exp with 0^0 = 1. A negative exponent on zero is a domain error.
inline BigRational int_pow(const BigRational& base, std::int64_t exp) {
    if (exp == 0) return 1;
    if (base == 0) {
        if (exp < 0) throw DomainError("int_pow: zero raised to a negative power");
        return 0;
    }
    const auto e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    return exp < 0 ? make_rational(den, num) : make_rational(num, den);
}

namespace detail {

// Append-only table of B+_k. Readers always observe a consistent prefix.
class BernoulliCache {
  public:
    BigRational get(std::size_t k) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (values_.size() <= k) extend();
        return values_[k];
    }

    std::size_t size() {
        std::lock_guard<std::mutex> lock(mutex_);
        return values_.size();
    }

  private:
    // Classical recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0 on the ordinary
    // numbers (B_1 = -1/2); stored values carry the (-1)^k sign.
    void extend() {
        const std::size_t k = values_.size();
        if (k == 0) {
            ordinary_.emplace_back(1);
            values_.emplace_back(1);
            return;
        }
        BigRational acc = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (ordinary_[j] == 0) continue;
            acc += BigRational(binomial(static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(j))) *
                   ordinary_[j];
        }
        BigRational bk = -acc / BigRational(static_cast<long>(k + 1));
        ordinary_.push_back(bk);
        values_.push_back(k % 2 == 1 ? BigRational(-bk) : bk);
    }

    std::mutex mutex_;
    std::vector<BigRational> ordinary_;
    std::vector<BigRational> values_;
};

inline BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

}  // namespace detail

/// B+_k = (-1)^k B_k, i.e. the Bernoulli numbers with B+_1 = 1/2.
inline BigRational bernoulli_plus(std::int64_t k) {
    if (k < 0) throw DomainError("bernoulli_plus: negative index");
    return detail::bernoulli_cache().get(static_cast<std::size_t>(k));
}

}  // namespace harmsum

#endif
