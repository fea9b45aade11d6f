#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "linstrand/edge_ideal.hpp"
#include "linstrand/groebner.hpp"
#include "linstrand/text.hpp"

using namespace linstrand;

namespace {

using F = PrimeField;

Polynomial<F> rand_poly(const F& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(1, 4);
    std::uniform_int_distribution<int> var_count(0, 3);
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> exp(1, 2);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::vector<std::pair<Monomial, std::uint32_t>> raw;
    int tc = term_count(rng);
    std::vector<std::pair<Monomial, typename F::Element>> terms;
    for (int t = 0; t < tc; ++t) {
        std::vector<Monomial::Entry> es;
        int vc = var_count(rng);
        for (int i = 0; i < vc; ++i) {
            int v = pick(rng);
            es.emplace_back(v < 3 ? VariableId::x(unsigned(v))
                                  : VariableId::y(unsigned(v - 3)),
                            unsigned(exp(rng)));
        }
        terms.emplace_back(Monomial(std::move(es)), field.from_int(coeff(rng)));
    }
    return Polynomial<F>::from_terms(field, std::move(terms));
}

} // namespace

TEST_CASE("normal form fixtures") {
    PrimeField f(32003);
    auto lex = MonomialOrder::lex_r();
    auto f01 = parse_polynomial(f, "x1*y2 - x2*y1");

    CHECK(normal_form(f, f01, {f01}, lex).is_zero());
    CHECK(render_polynomial(f, normal_form(f, parse_polynomial(f, "x1*y2"), {f01}, lex),
                            lex) == "x2*y1");
    auto g = parse_polynomial(f, "x2^2*y2");
    CHECK(normal_form(f, g, {f01}, lex) == g);
}

TEST_CASE("division contract on random inputs") {
    PrimeField f(32003);
    auto lex = MonomialOrder::lex_r();
    std::mt19937_64 rng(13371337);
    int done = 0;
    for (int iter = 0; iter < 400; ++iter) {
        auto h = rand_poly(f, rng);
        std::vector<Polynomial<F>> basis;
        int bs = 1 + int(rng() % 3);
        for (int b = 0; b < bs; ++b) {
            auto p = rand_poly(f, rng);
            if (!p.is_zero()) basis.push_back(p);
        }
        if (basis.empty()) continue;
        auto res = divide(f, h, basis, lex);
        // f == sum q_k b_k + r
        Polynomial<F> acc = res.remainder;
        for (std::size_t k = 0; k < basis.size(); ++k)
            acc = add(f, acc, mul(f, res.quotients[k], basis[k]));
        CHECK(acc == h);
        // no monomial of r divisible by any leading monomial
        for (const auto& t : res.remainder.terms())
            for (const auto& b : basis)
                CHECK_FALSE(b.leading_monomial(lex).divides(t.mono));
        ++done;
    }
    CHECK(done >= 350);
}

TEST_CASE("buchberger on principal and linear inputs") {
    PrimeField f(32003);
    auto lex = MonomialOrder::lex_r();
    auto x1 = parse_polynomial(f, "x1");
    auto gb = buchberger(f, {x1}, lex);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == x1);

    // {x1, x1 + y1}: the S-pair leaves y1, so the raw pair is not a basis
    auto x1y1 = parse_polynomial(f, "x1 + y1");
    CHECK_FALSE(is_groebner(f, {x1, x1y1}, lex));
    auto gb2 = buchberger(f, {x1, x1y1}, lex);
    CHECK(gb2.size() == 2);
    CHECK(is_groebner(f, gb2, lex));
    // reduced basis is {x1, y1}
    CHECK(normal_form(f, parse_polynomial(f, "y1"), gb2, lex).is_zero());
    CHECK(normal_form(f, x1, gb2, lex).is_zero());
}

TEST_CASE("edge binomials of closed graphs are a Groebner basis") {
    PrimeField f(32003);
    auto lex = MonomialOrder::lex_r();
    LabeledGraph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    auto ideal = edge_ideal(g, Variant::Binomial, f);
    CHECK(is_groebner(f, ideal.generators, lex));
    auto gb = buchberger(f, ideal.generators, lex);
    CHECK(gb.size() == ideal.generators.size()); // nothing new appears

    // adjacent-transposition path: two non-adjacent-clique binomials
    auto a = parse_polynomial(f, "x1*y2 - x2*y1");
    auto b = parse_polynomial(f, "x2*y3 - x3*y2");
    CHECK(is_groebner(f, {a, b}, lex));
}

TEST_CASE("non-closed labelings need extra basis elements") {
    PrimeField f(32003);
    auto lex = MonomialOrder::lex_r();
    LabeledGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    REQUIRE_FALSE(is_closed_labeling(c4));
    auto ideal = edge_ideal(c4, Variant::Binomial, f);
    CHECK_FALSE(is_groebner(f, ideal.generators, lex));
    auto gb = buchberger(f, ideal.generators, lex);
    CHECK(gb.size() > ideal.generators.size());
    CHECK(is_groebner(f, gb, lex));
}

TEST_CASE("buchberger output always passes is_groebner on random inputs") {
    PrimeField f(101);
    auto lex = MonomialOrder::lex_r();
    std::mt19937_64 rng(2025);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Polynomial<F>> gens;
        int k = 1 + int(rng() % 3);
        for (int i = 0; i < k; ++i) {
            auto p = rand_poly(f, rng);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        auto gb = buchberger(f, gens, lex);
        CHECK(is_groebner(f, gb, lex));
        // membership of the original generators
        for (const auto& g : gens) CHECK(normal_form(f, g, gb, lex).is_zero());
    }
}

TEST_CASE("reduction budget raises") {
    PrimeField f(32003);
    auto lex = MonomialOrder::lex_r();
    LabeledGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto ideal = edge_ideal(c4, Variant::Binomial, f);
    BuchbergerOptions opts;
    opts.max_reductions = 1;
    CHECK_THROWS_AS(buchberger(f, ideal.generators, lex, opts), BudgetExceededError);
}

TEST_CASE("rational coefficients run through the same engine") {
    RationalField q;
    auto lex = MonomialOrder::lex_r();
    auto a = parse_polynomial(q, "2*x0*y1 - x1*y0");
    auto b = parse_polynomial(q, "x1");
    auto gb = buchberger(q, {a, b}, lex);
    CHECK(is_groebner(q, gb, lex));
}
