#include <catch2/catch_amalgamated.hpp>

#include "linstrand/betti.hpp"
#include "linstrand/rees.hpp"
#include "linstrand/strand.hpp"
#include "linstrand/text.hpp"

using namespace linstrand;

namespace {

LabeledGraph running_example() {
    return LabeledGraph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

template <class F>
std::vector<ReesRelation<F>> family(const std::vector<ReesRelation<F>>& rels,
                                    ReesFamily fam) {
    std::vector<ReesRelation<F>> out;
    for (const auto& r : rels)
        if (r.family == fam) out.push_back(r);
    return out;
}

} // namespace

TEST_CASE("relation counts on the running example") {
    PrimeField f(32003);
    LabeledGraph g = running_example();
    for (Variant v : {Variant::Binomial, Variant::Initial}) {
        auto rels = rees_relations(g, v, f);
        CHECK(family(rels, ReesFamily::Koszul).size() == 15);
        CHECK(family(rels, ReesFamily::EagonNorthcott).size() == 4);
        CHECK(family(rels, ReesFamily::Pluecker).size() == 0);
    }
    CHECK_THROWS_AS(rees_relations(LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}}),
                                   Variant::Binomial, f),
                    HypothesisError);
}

TEST_CASE("relation bodies match the reference lists") {
    PrimeField f(32003);
    LabeledGraph g = running_example();

    auto binom = rees_relations(g, Variant::Binomial, f);
    auto en = family(binom, ReesFamily::EagonNorthcott);
    REQUIRE(en.size() == 4);
    CHECK(en[0].body == parse_polynomial(f, "x0*T(1,2) - x1*T(0,2) + x2*T(0,1)"));
    CHECK(en[1].body == parse_polynomial(f, "y1*T(0,2) - y2*T(0,1) - y0*T(1,2)"));
    CHECK(en[2].body == parse_polynomial(f, "x3*T(4,5) - x4*T(3,5) + x5*T(3,4)"));
    CHECK(en[3].body == parse_polynomial(f, "y4*T(3,5) - y5*T(3,4) - y3*T(4,5)"));

    // Koszul relations are f_e T_e' - f_e' T_e
    auto ko = family(binom, ReesFamily::Koszul);
    REQUIRE(ko.size() == 15);
    CHECK(ko[0].body ==
          parse_polynomial(
              f, "x0*y1*T(2,3) - x1*y0*T(2,3) - x2*y3*T(0,1) + x3*y2*T(0,1)"));
    auto w0 = std::get<EdgePairWitness>(ko[0].witness);
    CHECK(w0.first == Edge{0, 1});
    CHECK(w0.second == Edge{2, 3});
    CHECK(w0.first_clique == 1);
    CHECK(w0.second_clique == 2);

    auto init = rees_relations(g, Variant::Initial, f);
    auto ien = family(init, ReesFamily::EagonNorthcott);
    REQUIRE(ien.size() == 4);
    CHECK(ien[0].body == parse_polynomial(f, "x0*T(1,2) - x1*T(0,2)"));
    CHECK(ien[1].body == parse_polynomial(f, "y1*T(0,2) - y2*T(0,1)"));
    CHECK(ien[2].body == parse_polynomial(f, "x3*T(4,5) - x4*T(3,5)"));
    CHECK(ien[3].body == parse_polynomial(f, "y4*T(3,5) - y5*T(3,4)"));

    auto iko = family(init, ReesFamily::Koszul);
    REQUIRE(iko.size() == 15);
    CHECK(iko[0].body == parse_polynomial(f, "x2*y3*T(0,1) - x0*y1*T(2,3)"));
}

TEST_CASE("bidegrees per family") {
    PrimeField f(32003);
    auto rels = rees_relations(running_example(), Variant::Binomial, f);
    for (const auto& r : rels) {
        auto expected = r.family == ReesFamily::Koszul ? std::make_pair(1u, 4u)
                        : r.family == ReesFamily::EagonNorthcott
                            ? std::make_pair(1u, 3u)
                            : std::make_pair(2u, 4u);
        CHECK(r.bidegree == expected);
        for (const auto& t : r.body.terms()) CHECK(t.mono.bidegree() == expected);
    }
}

TEST_CASE("kernel membership for every corpus relation") {
    PrimeField f(32003);
    for (unsigned n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_closed_k4free(n))
            for (Variant v : {Variant::Binomial, Variant::Initial})
                for (const auto& r : rees_relations(g, v, f))
                    CHECK(phi_apply(f, r.body, g, v).is_zero());
}

TEST_CASE("count identities on the corpus") {
    PrimeField f(32003);
    for (unsigned n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_closed_k4free(n)) {
            auto rels = rees_relations(g, Variant::Binomial, f);
            auto cliques = maximal_cliques(g);
            std::size_t pairs = 0;
            const auto& edges = g.edges();
            for (std::size_t a = 0; a < edges.size(); ++a)
                for (std::size_t b = a + 1; b < edges.size(); ++b)
                    if (clique_index(cliques, edges[a]) !=
                        clique_index(cliques, edges[b]))
                        ++pairs;
            CHECK(family(rels, ReesFamily::Koszul).size() == pairs);
            CHECK(family(rels, ReesFamily::EagonNorthcott).size() ==
                  2 * triangles(g).size());
            CHECK(family(rels, ReesFamily::Pluecker).empty());
        }
}

TEST_CASE("phi on non-relations") {
    PrimeField f(32003);
    LabeledGraph g = running_example();
    auto t01 =
        Polynomial<PrimeField>::term(f, Monomial::var(VariableId::t(0, 1)), f.one());
    auto image = phi_apply(f, t01, g, Variant::Binomial);
    auto expected = mul(
        f, edge_binomial(f, 0, 1),
        Polynomial<PrimeField>::term(f, Monomial::var(VariableId::rees()), f.one()));
    CHECK(image == expected);

    auto x3 = parse_polynomial(f, "x3");
    CHECK(phi_apply(f, x3, g, Variant::Binomial) == x3);

    auto init_image = phi_apply(f, t01, g, Variant::Initial);
    CHECK(init_image ==
          Polynomial<PrimeField>::term(
              f, edge_initial_monomial(0, 1) * Monomial::var(VariableId::rees()),
              f.one()));

    auto t05 =
        Polynomial<PrimeField>::term(f, Monomial::var(VariableId::t(0, 5)), f.one());
    CHECK_THROWS_AS(phi_apply(f, t05, g, Variant::Binomial), std::invalid_argument);
}

TEST_CASE("Pluecker relations appear exactly on 4-cliques") {
    PrimeField f(32003);
    std::vector<Edge> k4e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    LabeledGraph k4(4, k4e);
    for (Variant v : {Variant::Binomial, Variant::Initial}) {
        auto rels = rees_relations(k4, v, f);
        auto pl = family(rels, ReesFamily::Pluecker);
        REQUIRE(pl.size() == 1); // one relation per 4-clique
        CHECK(phi_apply(f, pl[0].body, k4, v).is_zero());
        CHECK(pl[0].bidegree == std::make_pair(2u, 4u));
    }
    auto pl = family(rees_relations(k4, Variant::Binomial, f), ReesFamily::Pluecker);
    CHECK(pl[0].body ==
          parse_polynomial(f,
                           "T(0,1)*T(2,3) - T(0,2)*T(1,3) + T(0,3)*T(1,2)"));
}

TEST_CASE("Eagon-Northcott leading monomials") {
    LabeledGraph g = running_example();
    auto lms = en_leading_monomials(g);
    REQUIRE(lms.size() == 4);
    CHECK(render_monomial(lms[0]) == "x0*T(1,2)");
    CHECK(render_monomial(lms[1]) == "y1*T(0,2)");
    CHECK(render_monomial(lms[2]) == "x3*T(4,5)");
    CHECK(render_monomial(lms[3]) == "y4*T(3,5)");

    auto tri = en_leading_monomials(LabeledGraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    REQUIRE(tri.size() == 2);
    CHECK(render_monomial(tri[0]) == "x0*T(1,2)");
    CHECK(render_monomial(tri[1]) == "y1*T(0,2)");

    CHECK(en_leading_monomials(LabeledGraph(3, {{0, 1}, {1, 2}})).empty());
}

TEST_CASE("initial-variant EN relations lead with the listed monomials under revlex") {
    PrimeField f(32003);
    auto rev = MonomialOrder::revlex_s();
    for (unsigned n = 3; n <= 5; ++n)
        for (const auto& g : enumerate_closed_k4free(n)) {
            auto lms = en_leading_monomials(g);
            auto en = family(rees_relations(g, Variant::Initial, f),
                             ReesFamily::EagonNorthcott);
            REQUIRE(en.size() == lms.size());
            for (std::size_t k = 0; k < en.size(); ++k)
                CHECK(en[k].body.leading_monomial(rev) == lms[k]);
        }
}

TEST_CASE("pairwise coprimality") {
    LabeledGraph g = running_example();
    CHECK(check_pairwise_coprime(en_leading_monomials(g)).pairwise_coprime);

    // duplicates collapse under set semantics
    Monomial m({{VariableId::x(0), 1}, {VariableId::t(1, 2), 1}});
    CHECK(check_pairwise_coprime({m, m}).pairwise_coprime);

    // hand-built violating pair shares x0
    Monomial m2({{VariableId::x(0), 1}, {VariableId::t(3, 4), 1}});
    auto res = check_pairwise_coprime({m, m2});
    REQUIRE_FALSE(res.pairwise_coprime);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->first == m);
    CHECK(res.witness->second == m2);

    // exhaustive corpus run
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto& gg : enumerate_closed_k4free(n))
            CHECK(check_pairwise_coprime(en_leading_monomials(gg)).pairwise_coprime);

    // K4 violates the K4-free hypothesis with a concrete witness
    LabeledGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto bad = check_pairwise_coprime(en_leading_monomials(k4));
    REQUIRE_FALSE(bad.pairwise_coprime);
    CHECK(render_monomial(bad.witness->first) == "x0*T(1,2)");
    CHECK(render_monomial(bad.witness->second) == "x0*T(1,3)");
}

TEST_CASE("kernel slice dimensions on the running example") {
    PrimeField f(32003);
    LabeledGraph g = running_example();
    CHECK(kernel_slice_dimension(f, g, Variant::Binomial, 1, 2) == 0);
    CHECK(kernel_slice_dimension(f, g, Variant::Binomial, 1, 3) == 4);
    CHECK(kernel_slice_dimension(f, g, Variant::Initial, 1, 3) == 4);
    CHECK(kernel_slice_dimension(f, g, Variant::Binomial, 0, 5) == 0);

    SliceOptions tight;
    tight.monomial_budget = 3;
    CHECK_THROWS_AS(kernel_slice_dimension(f, g, Variant::Binomial, 1, 3, tight),
                    BudgetExceededError);
}

TEST_CASE("no kernel in the top bidegree for K4-free corpus graphs") {
    PrimeField f(32003);
    for (unsigned n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_closed_k4free(n))
            for (unsigned m = 1; m <= 2; ++m)
                for (Variant v : {Variant::Binomial, Variant::Initial})
                    CHECK(kernel_slice_dimension(f, g, v, m, 2 * m) == 0);
    // K4 has a quadratic relation in the top bidegree
    LabeledGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(kernel_slice_dimension(f, k4, Variant::Binomial, 2, 4) == 1);
}

TEST_CASE("syzygy generator counts") {
    PrimeField f(32003);
    LabeledGraph g = running_example();
    CHECK(syzygy_generator_count(f, g, Variant::Binomial, 2, 5) == 28);
    CHECK(syzygy_generator_count(f, g, Variant::Initial, 2, 5) == 28);
    CHECK(syzygy_generator_count(f, g, Variant::Binomial, 1, 3) == 4);
    CHECK(syzygy_generator_count(f, g, Variant::Binomial, 1, 2) == 0);
    CHECK_THROWS_AS(syzygy_generator_count(
                        f, LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}}),
                        Variant::Binomial, 1, 3),
                    HypothesisError);
    LabeledGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(syzygy_generator_count(f, k4, Variant::Binomial, 1, 3),
                    HypothesisError);
}

TEST_CASE("kernel-slice syzygy counts agree with Koszul homology in every degree") {
    // the first-syzygy identification is degree-wise, not just on the
    // linear strand: cross-check the two independent engines off-diagonal
    PrimeField f(32003);
    LabeledGraph g = running_example();
    KoszulOracle<PrimeField> o(f, 6, power_groebner_basis(f, g, Variant::Initial, 2),
                               500000);
    for (unsigned b = 5; b <= 7; ++b)
        CHECK(o.homology_dimension(2, b) ==
              syzygy_generator_count(f, g, Variant::Initial, 2, b));

    LabeledGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    KoszulOracle<PrimeField> ot(f, 3,
                                power_groebner_basis(f, tri, Variant::Binomial, 2),
                                500000);
    for (unsigned b = 5; b <= 7; ++b)
        CHECK(ot.homology_dimension(2, b) ==
              syzygy_generator_count(f, tri, Variant::Binomial, 2, b));
}

TEST_CASE("degree-(m,2m+1) slices are spanned by Eagon-Northcott multiples") {
    PrimeField f(32003);
    for (unsigned n = 3; n <= 5; ++n)
        for (const auto& g : enumerate_closed_k4free(n)) {
            if (g.edge_count() == 0) continue;
            for (Variant v : {Variant::Binomial, Variant::Initial})
                for (unsigned m = 1; m <= 2; ++m) {
                    std::size_t dim = kernel_slice_dimension(f, g, v, m, 2 * m + 1);

                    auto en = rees_relations(g, v, f);
                    auto upper = s_monomials_of_bidegree(g, m, 2 * m + 1);
                    std::unordered_map<Monomial, std::size_t, MonomialHash> id;
                    for (std::size_t i = 0; i < upper.size(); ++i)
                        id.emplace(upper[i], i);
                    auto t_mults = s_monomials_of_bidegree(g, m - 1, 2 * (m - 1));
                    Echelon<PrimeField> span(f);
                    std::size_t rank = 0;
                    for (const auto& r : en) {
                        if (r.family != ReesFamily::EagonNorthcott) continue;
                        for (const auto& tm : t_mults) {
                            SparseVec<PrimeField> vec;
                            for (const auto& t : r.body.terms())
                                vec.emplace_back(id.at(t.mono * tm), t.coeff);
                            if (span.add_row(std::move(vec))) ++rank;
                        }
                    }
                    CHECK(rank == dim);
                }
        }
}
