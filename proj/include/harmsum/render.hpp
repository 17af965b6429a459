#ifndef HARMSUM_RENDER_HPP
#define HARMSUM_RENDER_HPP

// Text, LaTeX and JSON output for closed forms, and the JSON reader.
//
// Terms are ordered by descending harmonic order, then descending slope,
// then descending offset; the constant part comes last. Polynomial
// coefficients are shown with their rational linear factors pulled out
// (cosmetic only).

#include "harmsum/exact.hpp"
#include "harmsum/harmonic_expr.hpp"
#include "harmsum/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace harmsum {

enum class Format { text, latex, json };

namespace detail {

// content * prod(factor_i ^ mult_i), factors primitive integer polynomials
// with positive leading coefficient.
struct FactoredPoly {
    BigRational content;
    std::vector<std::pair<std::vector<BigInt>, int>> factors;
};

// Primitive integer coefficients (ascending) and the rational content.
inline std::pair<BigRational, std::vector<BigInt>> primitive_part(const Polynomial& p) {
    BigInt l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& c : p.coefficients()) {
        BigRational scaled = c * BigRational(l);
        ints.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (p.leading() < 0) g = -g;
    for (auto& x : ints) x /= g;
    return {make_rational(g, l), std::move(ints)};
}

inline std::vector<BigInt> positive_divisors(const BigInt& v) {
    std::vector<BigInt> out;
    BigInt a = abs(v);
    if (a == 0 || !a.fits_slong_p() || a > 100000000) return out;
    const long x = a.get_si();
    for (long d = 1; d * d <= x; ++d) {
        if (x % d) continue;
        out.emplace_back(d);
        if (d != x / d) out.emplace_back(x / d);
    }
    return out;
}

// Exact division of q by (den*n - num).
inline std::vector<BigInt> divide_linear(const std::vector<BigInt>& q, const BigInt& num, const BigInt& den) {
    Polynomial pq;
    {
        std::vector<BigRational> c;
        for (const auto& x : q) c.emplace_back(x);
        pq = Polynomial(std::move(c));
    }
    Polynomial lin({BigRational(-num), BigRational(den)});
    auto quot = divmod(pq, lin).first;
    std::vector<BigInt> out;
    for (const auto& c : quot.coefficients()) out.push_back(c.get_num());
    return out;
}

inline FactoredPoly factor_for_display(const Polynomial& p) {
    auto [content, q] = primitive_part(p);
    FactoredPoly out{content, {}};
    std::size_t zeros = 0;
    while (zeros < q.size() && q[zeros] == 0) ++zeros;
    q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(zeros));
    if (zeros > 0) out.factors.push_back({{BigInt(0), BigInt(1)}, static_cast<int>(zeros)});

    std::vector<std::pair<std::vector<BigInt>, int>> linear;
    bool found = true;
    while (found && q.size() >= 2) {
        found = false;
        for (const auto& num : positive_divisors(q.front())) {
            for (const auto& den : positive_divisors(q.back())) {
                for (int sign : {-1, 1}) {
                    BigInt nn = num * sign;
                    BigInt g;
                    mpz_gcd(g.get_mpz_t(), nn.get_mpz_t(), den.get_mpz_t());
                    if (g != 1) continue;
                    const BigRational root = make_rational(nn, den);
                    BigRational acc = 0;
                    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * root + BigRational(*it);
                    if (acc != 0) continue;
                    q = divide_linear(q, nn, den);
                    std::vector<BigInt> f{BigInt(-nn), den};
                    auto it = std::find_if(linear.begin(), linear.end(), [&](const auto& e) { return e.first == f; });
                    if (it == linear.end())
                        linear.push_back({f, 1});
                    else
                        ++it->second;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    // n+c before n-c, then by leading coefficient.
    std::sort(linear.begin(), linear.end(), [](const auto& x, const auto& y) {
        const auto& [c0, l0] = std::pair{x.first[0], x.first[1]};
        const auto& [c1, l1] = std::pair{y.first[0], y.first[1]};
        if (l0 != l1) return l0 < l1;
        const bool n0 = c0 < 0, n1 = c1 < 0;
        if (n0 != n1) return !n0;
        return n0 ? c0 > c1 : c0 < c1;
    });
    for (auto& f : linear) out.factors.push_back(std::move(f));
    if (q.size() > 1) out.factors.push_back({std::move(q), 1});
    else if (!q.empty()) out.content *= BigRational(q[0]);
    return out;
}

inline std::string expanded_int_poly(const std::vector<BigInt>& q) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = q.size(); i-- > 0;) {
        if (q[i] == 0) continue;
        BigInt c = q[i];
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        BigInt mag = abs(c);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << "n";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

inline bool is_monomial_n(const std::vector<BigInt>& f) { return f.size() == 2 && f[0] == 0 && f[1] == 1; }

// Product of the factors without the content; empty when there are none.
inline std::string factors_string(const FactoredPoly& fp, Format fmt) {
    std::string out;
    for (const auto& [f, mult] : fp.factors) {
        std::string body = expanded_int_poly(f);
        std::string piece = is_monomial_n(f) ? body : "(" + body + ")";
        if (mult > 1) piece += fmt == Format::latex ? "^{" + std::to_string(mult) + "}" : "^" + std::to_string(mult);
        out += piece;
    }
    return out;
}

inline std::string rational_magnitude(const BigRational& r, Format fmt) {
    BigRational a = abs(r);
    if (a.get_den() == 1) return a.get_num().get_str();
    if (fmt == Format::latex) return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// Signed polynomial display: returns (negative, magnitude string).
inline std::pair<bool, std::string> poly_display(const Polynomial& p, Format fmt) {
    FactoredPoly fp = factor_for_display(p);
    const bool neg = fp.content < 0;
    std::string fac = factors_string(fp, fmt);
    const BigRational mag = abs(fp.content);
    if (fac.empty()) return {neg, rational_magnitude(mag, fmt)};
    if (mag == 1) return {neg, fac};
    // "2n(n+1)" but "1/2 n(n+1)"
    const std::string sep = fmt == Format::latex || mag.get_den() == 1 ? "" : " ";
    return {neg, rational_magnitude(mag, fmt) + sep + fac};
}

// Parenthesize unless s is one factor: digits, n, powers, or a single group.
inline std::string wrap_operand(const std::string& s) {
    if (s.find_first_of("+- /") == std::string::npos) return s;
    if (s.front() == '(') {
        int depth = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
            if (depth == 0) {
                if (i + 1 == s.size()) return s;
                break;
            }
        }
    }
    return "(" + s + ")";
}

inline std::pair<bool, std::string> rf_display(const RationalFunction& rf, Format fmt) {
    if (rf.is_polynomial()) return poly_display(rf.num(), fmt);
    auto [nneg, nstr] = poly_display(rf.num(), fmt);
    auto [dneg, dstr] = poly_display(rf.den(), fmt);
    if (fmt == Format::latex) return {nneg != dneg, "\\frac{" + nstr + "}{" + dstr + "}"};
    return {nneg != dneg, wrap_operand(nstr) + "/" + wrap_operand(dstr)};
}

inline std::string arg_string(const LinearArg& arg) {
    std::string out;
    if (arg.a == 1) out = "n";
    else if (arg.a > 1) out = std::to_string(arg.a) + "n";
    if (arg.b > 0) out += (out.empty() ? "" : "+") + std::to_string(arg.b);
    else if (arg.b < 0) out += std::to_string(arg.b);
    else if (out.empty()) out = "0";
    return out;
}

inline std::string symbol_string(const LinearArg& arg, std::int64_t order, Format fmt) {
    const std::string a = arg_string(arg);
    std::string out = a.size() == 1 ? "H_" + a : "H_{" + a + "}";
    if (order != 1) out += fmt == Format::latex ? "^{(" + std::to_string(order) + ")}" : "^(" + std::to_string(order) + ")";
    return out;
}

// A coefficient equal to r * (sum_{k=1}^{n} k^p) with integer r and p >= 1
// is shown as r H_n^{(-p)}.
inline std::optional<std::pair<BigInt, std::int64_t>> as_power_sum_multiple(const RationalFunction& rf) {
    if (!rf.is_polynomial()) return std::nullopt;
    const Polynomial& p = rf.num();
    const std::int64_t power = p.degree() - 1;
    if (power < 1) return std::nullopt;
    BigRational r = p.leading() * BigRational(static_cast<long>(power + 1));
    if (r.get_den() != 1) return std::nullopt;
    if (faulhaber_poly(power).scaled(r) != p) return std::nullopt;
    return std::pair{r.get_num(), power};
}

struct Piece {
    bool negative;
    std::string body;
};

inline std::vector<HarmonicSymbol> ordered_symbols(const ClosedForm& cf) {
    std::vector<HarmonicSymbol> syms;
    for (const auto& [sym, coeff] : cf.terms()) syms.push_back(sym);
    std::sort(syms.begin(), syms.end(), [](const HarmonicSymbol& x, const HarmonicSymbol& y) {
        if (x.order != y.order) return x.order > y.order;
        if (x.arg.a != y.arg.a) return x.arg.a > y.arg.a;
        return x.arg.b > y.arg.b;
    });
    return syms;
}

inline std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) out += pieces[i].negative ? "-" : "";
        else out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].body;
    }
    return out;
}

inline std::string render_math(const ClosedForm& cf, Format fmt) {
    const std::string sep = " ";
    std::vector<Piece> pieces;
    for (const auto& sym : ordered_symbols(cf)) {
        const RationalFunction& coeff = cf.terms().at(sym);
        const std::string s = symbol_string(sym.arg, sym.order, fmt);
        if (auto ps = as_power_sum_multiple(coeff)) {
            const auto& [mult, power] = *ps;
            std::string lead = abs(mult) == 1 ? "" : BigInt(abs(mult)).get_str() + " ";
            pieces.push_back({mult < 0, lead + symbol_string(LinearArg(1, 0), -power, fmt) + sep + s});
            continue;
        }
        auto [neg, body] = rf_display(coeff, fmt);
        if (coeff.is_polynomial() && coeff.num().is_constant() && abs(coeff.num().leading()) == 1)
            pieces.push_back({neg, s});
        else
            pieces.push_back({neg, body + sep + s});
    }
    if (!cf.constant().is_zero()) {
        auto [neg, body] = rf_display(cf.constant(), fmt);
        pieces.push_back({neg, body});
    }
    return join_pieces(pieces);
}

// Integer-as-string numerator/denominator lists, scaled to a primitive
// integer pair with positive denominator leading coefficient.
inline nlohmann::json rf_to_json(const RationalFunction& rf) {
    BigInt l = 1;
    for (const Polynomial* p : {&rf.num(), &rf.den()})
        for (const auto& c : p->coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    BigInt g = 0;
    std::vector<BigInt> num, den;
    for (const auto& c : rf.num().coefficients()) num.push_back(BigRational(c * BigRational(l)).get_num());
    for (const auto& c : rf.den().coefficients()) den.push_back(BigRational(c * BigRational(l)).get_num());
    for (const auto* v : {&num, &den})
        for (const auto& x : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    nlohmann::json jn = nlohmann::json::array(), jd = nlohmann::json::array();
    for (const auto& x : num) jn.push_back(BigInt(x / g).get_str());
    for (const auto& x : den) jd.push_back(BigInt(x / g).get_str());
    return {{"num", jn}, {"den", jd}};
}

inline Polynomial poly_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<BigRational> coeffs;
    for (const auto& x : arr) {
        if (x.is_string()) coeffs.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer()) coeffs.push_back(make_rational(x.get<std::int64_t>()));
        else throw std::invalid_argument("polynomial coefficient must be an integer string");
    }
    return Polynomial(std::move(coeffs));
}

inline RationalFunction rf_from_json(const nlohmann::json& j) {
    return {poly_from_json(j.at("num")), poly_from_json(j.at("den"))};
}

}  // namespace detail

inline nlohmann::json to_json(const ClosedForm& cf) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& sym : detail::ordered_symbols(cf)) {
        terms.push_back({{"order", sym.order},
                         {"arg", {{"a", sym.arg.a}, {"b", sym.arg.b}}},
                         {"coeff", detail::rf_to_json(cf.terms().at(sym))}});
    }
    return {{"constant", detail::rf_to_json(cf.constant())}, {"terms", terms}};
}

/// Reads the ClosedForm JSON schema; the result is canonical.
inline ClosedForm closed_form_from_json(const nlohmann::json& j) {
    ClosedForm cf(detail::rf_from_json(j.at("constant")));
    for (const auto& t : j.at("terms")) {
        const LinearArg arg(t.at("arg").at("a").get<std::int64_t>(), t.at("arg").at("b").get<std::int64_t>());
        const auto order = t.at("order").get<std::int64_t>();
        RationalFunction coeff = detail::rf_from_json(t.at("coeff"));
        // Accept non-canonical input symbols by folding them.
        cf += symbol_or_expand(arg, order).scaled(coeff);
    }
    return cf;
}

inline ClosedForm parse_closed_form(const std::string& json_text) {
    return closed_form_from_json(nlohmann::json::parse(json_text));
}

inline std::string render(const ClosedForm& cf, Format fmt) {
    if (fmt == Format::json) return to_json(cf).dump();
    return detail::render_math(cf, fmt);
}

/// A polynomial alone, in the same display style.
inline std::string render(const Polynomial& p, Format fmt) {
    if (fmt == Format::json) return detail::rf_to_json(RationalFunction(p)).dump();
    if (p.is_zero()) return "0";
    auto [neg, body] = detail::poly_display(p, fmt);
    return (neg ? "-" : "") + body;
}

inline std::string render(const BigRational& r, Format fmt) {
    if (fmt == Format::json) return nlohmann::json(to_string(r)).dump();
    return (r < 0 ? "-" : "") + detail::rational_magnitude(r, fmt);
}

inline std::optional<Format> parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "latex") return Format::latex;
    if (s == "json") return Format::json;
    return std::nullopt;
}

}  // namespace harmsum

#endif
