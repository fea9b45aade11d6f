#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "linstrand/order.hpp"

using namespace linstrand;

namespace {

// random monomial in x0..x3, y0..y3 with bounded degree
Monomial random_r_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> var_count(0, 4);
    std::uniform_int_distribution<int> pick(0, 7);
    std::uniform_int_distribution<int> exp(1, 3);
    std::vector<Monomial::Entry> es;
    int k = var_count(rng);
    for (int i = 0; i < k; ++i) {
        int v = pick(rng);
        es.emplace_back(v < 4 ? VariableId::x(unsigned(v)) : VariableId::y(unsigned(v - 4)),
                        unsigned(exp(rng)));
    }
    return Monomial(std::move(es));
}

Monomial random_s_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> var_count(0, 4);
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> exp(1, 3);
    std::vector<Monomial::Entry> es;
    int k = var_count(rng);
    for (int i = 0; i < k; ++i) {
        int v = pick(rng);
        VariableId var = v < 4   ? VariableId::x(unsigned(v))
                         : v < 8 ? VariableId::y(unsigned(v - 4))
                                 : (v == 8 ? VariableId::t(0, 1) : VariableId::t(1, 2));
        es.emplace_back(var, unsigned(exp(rng)));
    }
    return Monomial(std::move(es));
}

} // namespace

TEST_CASE("LexR compares per the leftmost-exponent rule") {
    auto lex = MonomialOrder::lex_r();
    Monomial x1y2({{VariableId::x(1), 1}, {VariableId::y(2), 1}});
    Monomial x2y1({{VariableId::x(2), 1}, {VariableId::y(1), 1}});
    CHECK(lex.compare(x1y2, x2y1) > 0);
    CHECK(lex.compare(x2y1, x1y2) < 0);
    CHECK(lex.compare(x1y2, x1y2) == 0);

    // x-block dominates the y-block
    Monomial x3({{VariableId::x(3), 1}});
    Monomial y0cubed({{VariableId::y(0), 3}});
    CHECK(lex.greater(x3, y0cubed));

    // 1 is minimal
    CHECK(lex.greater(y0cubed, Monomial::one()));
}

TEST_CASE("RevLexS fixtures") {
    auto rev = MonomialOrder::revlex_s();
    CHECK(rev.greater(Monomial::var(VariableId::t(0, 1)), Monomial::var(VariableId::x(0))));
    CHECK(rev.greater(Monomial::var(VariableId::x(3)), Monomial::var(VariableId::y(0))));
    CHECK(rev.greater(Monomial::var(VariableId::t(0, 1)), Monomial::var(VariableId::t(1, 2))));
    CHECK(rev.greater(Monomial::var(VariableId::t(0, 1)), Monomial::var(VariableId::t(0, 2))));

    // underlined leading term of an initial-variant relation:
    // y1*T(0,2) beats y2*T(0,1)
    Monomial a({{VariableId::y(1), 1}, {VariableId::t(0, 2), 1}});
    Monomial b({{VariableId::y(2), 1}, {VariableId::t(0, 1), 1}});
    CHECK(rev.greater(a, b));
    // and x0*T(1,2) beats x1*T(0,2)
    Monomial c({{VariableId::x(0), 1}, {VariableId::t(1, 2), 1}});
    Monomial d({{VariableId::x(1), 1}, {VariableId::t(0, 2), 1}});
    CHECK(rev.greater(c, d));
}

TEST_CASE("universe mismatches are rejected") {
    auto lex = MonomialOrder::lex_r();
    Monomial t01 = Monomial::var(VariableId::t(0, 1));
    CHECK_THROWS_AS(lex.compare(t01, Monomial::one()), std::invalid_argument);

    auto custom = MonomialOrder::custom({VariableId::x(0), VariableId::x(1)},
                                        MonomialOrder::Mode::Lex);
    CHECK(custom.greater(Monomial::var(VariableId::x(0)), Monomial::var(VariableId::x(1))));
    CHECK_THROWS_AS(custom.compare(Monomial::var(VariableId::y(0)), Monomial::one()),
                    std::invalid_argument);
    CHECK_THROWS_AS(MonomialOrder::custom({VariableId::x(0), VariableId::x(0)},
                                          MonomialOrder::Mode::Lex),
                    std::invalid_argument);
}

TEST_CASE("custom revlex ranking") {
    // y0 ranked above x0: graded revlex on that ranking
    auto o = MonomialOrder::custom({VariableId::y(0), VariableId::x(0)},
                                   MonomialOrder::Mode::GradedRevLex);
    CHECK(o.greater(Monomial::var(VariableId::y(0)), Monomial::var(VariableId::x(0))));
    Monomial y0sq({{VariableId::y(0), 2}});
    CHECK(o.greater(y0sq, Monomial::var(VariableId::x(0)))); // graded
}

TEST_CASE("order axioms hold on random monomials") {
    std::mt19937_64 rng(20240811);
    auto lex = MonomialOrder::lex_r();
    auto rev = MonomialOrder::revlex_s();
    int cases = 0;
    for (int iter = 0; iter < 1200; ++iter) {
        Monomial u = random_s_monomial(rng);
        Monomial v = random_s_monomial(rng);
        Monomial w = random_s_monomial(rng);
        for (const MonomialOrder* o : {&rev}) {
            // totality and antisymmetry
            int uv = o->compare(u, v);
            CHECK(uv == -o->compare(v, u));
            CHECK((uv == 0) == (u == v));
            // multiplicativity
            if (uv < 0) CHECK(o->compare(u * w, v * w) < 0);
            if (uv > 0) CHECK(o->compare(u * w, v * w) > 0);
            // 1 is minimal
            if (!u.is_one()) CHECK(o->greater(u, Monomial::one()));
            // transitivity on the sorted triple
            const Monomial* lo = &u;
            const Monomial* mid = &v;
            const Monomial* hi = &w;
            auto cmp = [&](const Monomial* a, const Monomial* b) {
                return o->compare(*a, *b) < 0;
            };
            if (cmp(mid, lo)) std::swap(lo, mid);
            if (cmp(hi, mid)) std::swap(mid, hi);
            if (cmp(mid, lo)) std::swap(lo, mid);
            CHECK(o->compare(*lo, *hi) <= 0);
            ++cases;
        }
        // LexR on base-ring monomials only
        Monomial ru = random_r_monomial(rng);
        Monomial rv = random_r_monomial(rng);
        Monomial rw = random_r_monomial(rng);
        int uv = lex.compare(ru, rv);
        CHECK(uv == -lex.compare(rv, ru));
        CHECK((uv == 0) == (ru == rv));
        if (uv < 0) CHECK(lex.compare(ru * rw, rv * rw) < 0);
        if (!ru.is_one()) CHECK(lex.greater(ru, Monomial::one()));
        ++cases;
    }
    CHECK(cases >= 2000);
}
