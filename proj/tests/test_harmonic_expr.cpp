#include "harmsum/harmonic_expr.hpp"
#include "harmsum/identities.hpp"
#include "harmsum/render.hpp"

#include "random_forms.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace harmsum {
namespace {

const LinearArg kN{1, 0};
const LinearArg kNPlus1{1, 1};

RationalFunction poly(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long x : c) v.emplace_back(x);
    return RationalFunction(Polynomial(std::move(v)));
}

ClosedForm sym(std::int64_t a, std::int64_t b, std::int64_t order = 1) { return ClosedForm::symbol({LinearArg(a, b), order}); }

TEST(LinearArg, Invariants) {
    EXPECT_THROW(LinearArg(-1, 0), DomainError);
    EXPECT_THROW(LinearArg(0, -1), DomainError);
    EXPECT_NO_THROW(LinearArg(2, -1));
    EXPECT_EQ(LinearArg(2, 1).compose(LinearArg(1, 3)), LinearArg(2, 7));
}

TEST(ClosedFormArith, Examples) {
    const ClosedForm h = sym(1, 1);
    const ClosedForm twice = h + h;
    EXPECT_EQ(twice.coefficient({kNPlus1, 1}), RationalFunction(BigRational(2)));
    EXPECT_TRUE(h.scaled(RationalFunction{}).is_zero());
    EXPECT_TRUE((sym(1, 1, 2) - sym(1, 1, 2)).is_zero());
    EXPECT_EQ(sym(1, 1, 2) - sym(1, 1, 2), ClosedForm{});
}

TEST(ClosedFormArith, SymbolInvariants) {
    EXPECT_THROW(ClosedForm::symbol({kN, 0}), DomainError);
    EXPECT_THROW(ClosedForm::symbol({LinearArg::constant(3), 1}), DomainError);
}

TEST(SymbolOrExpand, Examples) {
    EXPECT_EQ(symbol_or_expand(kN, -1), ClosedForm(RationalFunction(Polynomial({0, make_rational(1, 2), make_rational(1, 2)}))));
    EXPECT_EQ(symbol_or_expand(kNPlus1, 2), sym(1, 1, 2));
    EXPECT_EQ(symbol_or_expand(LinearArg::constant(3), 1), ClosedForm(RationalFunction(make_rational(11, 6))));
    // H_{2n+1}^{(0)} = 2n+1
    EXPECT_EQ(symbol_or_expand(LinearArg(2, 1), 0), ClosedForm(poly({1, 2})));
}

TEST(HarmonicNumber, Values) {
    EXPECT_EQ(harmonic_number(0, 3), 0);
    EXPECT_EQ(harmonic_number(4, 1), make_rational(25, 12));
    EXPECT_EQ(harmonic_number(3, -2), 14);
    EXPECT_THROW(harmonic_number(-1, 1), DomainError);
}

TEST(SubstituteN, Examples) {
    EXPECT_EQ(substitute_n(sym(1, 1), LinearArg(2, 0)), sym(2, 1));
    EXPECT_TRUE(substitute_n(sum_f(0, 1), LinearArg::constant(0)).is_zero());
    const ClosedForm cf = sym(1, 1).scaled(poly({1, 1})) - ClosedForm(poly({1, 1}));
    EXPECT_EQ(substitute_n(cf, LinearArg::constant(2)), ClosedForm(RationalFunction(make_rational(5, 2))));
}

TEST(SubstituteN, NegativeConstantArgumentIsDomainError) {
    EXPECT_THROW(substitute_n(sym(1, -1), LinearArg::constant(0)), DomainError);
    EXPECT_NO_THROW(substitute_n(sym(1, -1), LinearArg::constant(1)));
}

TEST(ShiftBasis, Examples) {
    const ClosedForm shifted = shift_basis(sym(1, 0), BasisRule::standard());
    EXPECT_EQ(shifted.coefficient({kNPlus1, 1}), RationalFunction(BigRational(1)));
    EXPECT_EQ(shifted.constant(), RationalFunction(Polynomial::constant(-1), Polynomial({1, 1})));

    const RationalFunction half_tri = RationalFunction(Polynomial({0, make_rational(1, 2), make_rational(1, 2)}));
    const ClosedForm t = shift_basis(sym(1, 0).scaled(half_tri), BasisRule::standard());
    EXPECT_EQ(t.coefficient({kNPlus1, 1}), half_tri);
    EXPECT_EQ(t.constant(), RationalFunction(Polynomial({0, make_rational(-1, 2)})));

    const ClosedForm already = sum_f(3, 2);
    EXPECT_EQ(shift_basis(already, BasisRule::standard()), already);
}

TEST(ShiftBasis, MovesDownwardToo) {
    // H_{2n+1} onto H_{2n}: H_{2n+1} = H_{2n} + 1/(2n+1)
    const ClosedForm cf = shift_basis(sym(2, 1), BasisRule{{{2, 0}}});
    EXPECT_EQ(cf.coefficient({LinearArg(2, 0), 1}), RationalFunction(BigRational(1)));
    EXPECT_EQ(cf.constant(), RationalFunction(Polynomial::constant(1), Polynomial({1, 2})));
}

TEST(EvaluateCf, Examples) {
    const ClosedForm cf = sym(1, 1).scaled(poly({1, 1})) - ClosedForm(poly({1, 1}));
    EXPECT_EQ(evaluate(cf, 2), make_rational(5, 2));
    EXPECT_EQ(evaluate(ClosedForm{}, 17), 0);
    EXPECT_EQ(evaluate(symbol_or_expand(kN, -2), 3), 14);
}

TEST(EvaluateCf, Errors) {
    const ClosedForm pole(RationalFunction(Polynomial::constant(1), Polynomial({-2, 1})));
    EXPECT_THROW(evaluate(pole, 2), DomainError);
    EXPECT_THROW(evaluate(sym(1, -3), 2), DomainError);
    EXPECT_NO_THROW(evaluate(sym(1, -3), 3));
}

TEST(Render, SumOfKHk) {
    EXPECT_EQ(render(sum_f(1, 1), Format::text), "H_n^(-1) H_{n+1} - 1/4 n(n+1)");
    EXPECT_EQ(render(sum_f(1, 1), Format::latex), "H_n^{(-1)} H_{n+1} - \\frac{1}{4}n(n+1)");
    EXPECT_EQ(render(ClosedForm{}, Format::text), "0");
    EXPECT_EQ(render(ClosedForm{}, Format::latex), "0");
}

TEST(Render, Factoring) {
    EXPECT_EQ(render(sum_f(0, 1), Format::text), "(n+1) H_{n+1} - (n+1)");
    EXPECT_EQ(render(sum_f(2, 2), Format::text), "H_n^(-2) H_{n+1}^(2) - 1/6 H_{n+1} - 1/6 (n+1)(n-1)");
    EXPECT_EQ(render(offset_sum_f(0, 1, OffsetSpec(2, 0)), Format::text), "(3n+1) H_{3n+1} - 2n H_{2n} - (n+1)");
    EXPECT_EQ(render(faulhaber_poly(5), Format::text), "1/12 n^2(n+1)^2(2n^2+2n-1)");
    EXPECT_EQ(render(ClosedForm(RationalFunction(Polynomial::constant(-3), Polynomial({1, 1}))), Format::text),
              "-3/(n+1)");
}

TEST(Render, JsonSchemaIsExact) {
    // (n^2+n)/2 H_{n+1} - (n^2+n)/4
    const auto j = to_json(sum_f(1, 1));
    EXPECT_EQ(j["terms"].size(), 1u);
    EXPECT_EQ(j["terms"][0]["order"], 1);
    EXPECT_EQ(j["terms"][0]["arg"]["a"], 1);
    EXPECT_EQ(j["terms"][0]["arg"]["b"], 1);
    EXPECT_EQ(j["terms"][0]["coeff"]["num"], nlohmann::json({"0", "1", "1"}));
    EXPECT_EQ(j["terms"][0]["coeff"]["den"], nlohmann::json({"2"}));
    EXPECT_EQ(j["constant"]["num"], nlohmann::json({"0", "-1", "-1"}));
    EXPECT_EQ(j["constant"]["den"], nlohmann::json({"4"}));
}

TEST(Render, JsonRoundTrip) {
    for (const auto& cf : {sum_f(4, 3), sum_g(5, 2), offset_sum_f(3, 1, OffsetSpec(2, 0)), ClosedForm{}})
        EXPECT_EQ(parse_closed_form(render(cf, Format::json)), cf);
}

TEST(Render, JsonRejectsGarbage) {
    EXPECT_THROW(parse_closed_form(R"({"constant":{"num":["x"],"den":["1"]},"terms":[]})"), std::invalid_argument);
    EXPECT_THROW(parse_closed_form(R"({"constant":{"num":["1"],"den":[]},"terms":[]})"), DomainError);
    EXPECT_ANY_THROW(parse_closed_form(R"({"terms":[]})"));
}

TEST(Render, TermOrder) {
    ClosedForm cf;
    cf.add_term({LinearArg(1, 0), 1}, RationalFunction(BigRational(1)));
    cf.add_term({LinearArg(2, 1), 1}, RationalFunction(BigRational(1)));
    cf.add_term({LinearArg(1, 0), 2}, RationalFunction(BigRational(1)));
    cf.add_term({LinearArg(2, 3), 1}, RationalFunction(BigRational(1)));
    EXPECT_EQ(render(cf, Format::text), "H_n^(2) + H_{2n+3} + H_{2n+1} + H_n");
}

// Properties over randomly generated closed forms.

TEST(Properties, ShiftBasisPreservesValues) {
    gen::Gen g(101);
    for (int i = 0; i < 200; ++i) {
        const ClosedForm cf = g.closed_form();
        BasisRule rule;
        for (std::int64_t a = 1; a <= 3; ++a)
            if (g.integer(0, 1)) rule.target_offset[a] = g.integer(0, 3);
        const ClosedForm shifted = shift_basis(cf, rule);
        for (std::int64_t n = 0; n <= 10; ++n) ASSERT_EQ(evaluate(shifted, n), evaluate(cf, n)) << "instance " << i;
    }
}

TEST(Properties, SubstitutionCommutesWithEvaluation) {
    gen::Gen g(202);
    for (int i = 0; i < 200; ++i) {
        const ClosedForm cf = g.closed_form();
        const LinearArg t(g.integer(0, 2), g.integer(0, 3));
        const ClosedForm sub = substitute_n(cf, t);
        for (std::int64_t n = 0; n <= 8; ++n) ASSERT_EQ(evaluate(sub, n), evaluate(cf, t.at(n))) << "instance " << i;
    }
}

TEST(Properties, CanonicalizationIsIdempotent) {
    gen::Gen g(303);
    for (int i = 0; i < 200; ++i) {
        const ClosedForm cf = g.closed_form();
        EXPECT_EQ(closed_form_from_json(to_json(cf)), cf);
        const BasisRule rule = BasisRule::for_offset(LinearArg(g.integer(0, 2), g.integer(0, 2)));
        const ClosedForm once = shift_basis(cf, rule);
        EXPECT_EQ(shift_basis(once, rule), once);
        EXPECT_EQ(once + ClosedForm{}, once);
    }
}

TEST(Properties, ModuleAxioms) {
    gen::Gen g(404);
    for (int i = 0; i < 200; ++i) {
        const ClosedForm x = g.closed_form(), y = g.closed_form(), z = g.closed_form();
        const RationalFunction r = g.rational_function(), s = g.rational_function();
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x + y).scaled(r), x.scaled(r) + y.scaled(r));
        EXPECT_EQ(x.scaled(r + s), x.scaled(r) + x.scaled(s));
        EXPECT_TRUE((x - x).is_zero());
    }
}

TEST(Properties, EqualityMatchesEvaluation) {
    gen::Gen g(505);
    for (int i = 0; i < 200; ++i) {
        const ClosedForm x = g.closed_form();
        ClosedForm y = x;
        if (i % 2) y.add_term({g.symbol_arg(), g.integer(1, 3)}, g.rational_function());
        const bool equal = x == y;
        std::size_t max_degree = 0;
        for (const auto& [sym, c] : y.terms())
            max_degree = std::max<std::size_t>(max_degree, static_cast<std::size_t>(std::max(c.num().degree(), c.den().degree())));
        const auto n_hi = static_cast<std::int64_t>(2 * (max_degree + y.terms().size()) + 4);
        bool agree = true;
        for (std::int64_t n = 0; n <= n_hi; ++n) agree = agree && evaluate(x, n) == evaluate(y, n);
        EXPECT_EQ(equal, agree) << "instance " << i;
    }
}

}  // namespace
}  // namespace harmsum
