#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "linstrand/graph.hpp"
#include "linstrand/groebner.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/polynomial.hpp"

namespace linstrand {

enum class Variant { Binomial, Initial };

inline const char* variant_name(Variant v) {
    return v == Variant::Binomial ? "binomial" : "initial";
}

/// x_i y_j - x_j y_i for i < j.
template <class F>
Polynomial<F> edge_binomial(const F& field, unsigned i, unsigned j) {
    return Polynomial<F>::from_terms(
        field,
        {{Monomial({{VariableId::x(i), 1}, {VariableId::y(j), 1}}), field.one()},
         {Monomial({{VariableId::x(j), 1}, {VariableId::y(i), 1}}), field.neg(field.one())}});
}

/// x_i y_j for i < j, the LexR leading monomial of the edge binomial.
inline Monomial edge_initial_monomial(unsigned i, unsigned j) {
    return Monomial({{VariableId::x(i), 1}, {VariableId::y(j), 1}});
}

/// The 2n base-ring variables x_0..x_{n-1}, y_0..y_{n-1}.
inline std::vector<VariableId> base_ring_variables(unsigned n) {
    std::vector<VariableId> vars;
    vars.reserve(2 * n);
    for (unsigned i = 0; i < n; ++i) vars.push_back(VariableId::x(i));
    for (unsigned i = 0; i < n; ++i) vars.push_back(VariableId::y(i));
    return vars;
}

/// All monomials of the given total degree in the given variables,
/// enumerated recursively in a fixed order.
inline std::vector<Monomial> monomials_of_degree(const std::vector<VariableId>& vars,
                                                 unsigned degree) {
    std::vector<Monomial> out;
    std::vector<Monomial::Entry> current;
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (pos == vars.size()) return;
        if (pos + 1 == vars.size()) {
            current.emplace_back(vars[pos], remaining);
            out.emplace_back(current);
            current.pop_back();
            return;
        }
        self(self, pos + 1, remaining); // exponent 0 here
        for (unsigned e = 1; e <= remaining; ++e) {
            current.emplace_back(vars[pos], e);
            self(self, pos + 1, remaining - e);
            current.pop_back();
        }
    };
    rec(rec, 0, degree);
    return out;
}

template <class F>
struct EdgeIdeal {
    LabeledGraph graph;
    Variant variant = Variant::Binomial;
    std::vector<Polynomial<F>> generators; // one per edge, in edge order
};

/// Binomial variant: x_i y_j - x_j y_i per edge. Initial variant: x_i y_j per
/// edge. For closed graphs the binomial generators are certified to be a
/// Groebner basis under LexR on construction.
template <class F>
EdgeIdeal<F> edge_ideal(const LabeledGraph& g, Variant variant, const F& field) {
    EdgeIdeal<F> ideal;
    ideal.graph = g;
    ideal.variant = variant;
    for (const auto& [i, j] : g.edges()) {
        if (variant == Variant::Binomial)
            ideal.generators.push_back(edge_binomial(field, i, j));
        else
            ideal.generators.push_back(
                Polynomial<F>::term(field, edge_initial_monomial(i, j), field.one()));
    }
    if (variant == Variant::Binomial && !ideal.generators.empty() &&
        is_closed_labeling(g)) {
        if (!is_groebner(field, ideal.generators, MonomialOrder::lex_r()))
            throw std::logic_error(
                "edge binomials of a closed graph failed Groebner certification");
    }
    return ideal;
}

/// Minimal generators of the m-th power: all degree-m products of the
/// generators (multisets in lexicographic index order), deduplicated, then
/// greedily filtered to a maximal linearly independent subset of the top
/// graded piece. All candidates share degree 2m, so linear independence is
/// exactly minimality.
template <class F>
std::vector<Polynomial<F>> ideal_power(const EdgeIdeal<F>& ideal, unsigned m,
                                       const F& field) {
    if (m == 0) throw std::invalid_argument("ideal_power requires m >= 1");
    const auto& gens = ideal.generators;
    if (gens.empty()) return {};

    std::vector<Polynomial<F>> products;
    std::vector<std::size_t> choice(m, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t lo) -> void {
        if (pos == m) {
            Polynomial<F> p = gens[choice[0]];
            for (std::size_t k = 1; k < m; ++k) p = mul(field, p, gens[choice[k]]);
            products.push_back(std::move(p));
            return;
        }
        for (std::size_t g = lo; g < gens.size(); ++g) {
            choice[pos] = g;
            self(self, pos + 1, g);
        }
    };
    rec(rec, 0, 0);

    std::unordered_map<Monomial, std::size_t, MonomialHash> mono_id;
    Echelon<F> ech(field);
    std::vector<Polynomial<F>> kept;
    for (auto& p : products) {
        SparseVec<F> row;
        row.reserve(p.term_count());
        for (const auto& t : p.terms()) {
            auto [it, fresh] = mono_id.emplace(t.mono, mono_id.size());
            row.emplace_back(it->second, t.coeff);
        }
        if (ech.add_row(std::move(row))) kept.push_back(std::move(p));
    }
    return kept;
}

/// Standard monomials of degree d: monomials in the 2n base-ring variables
/// not divisible by any of the given leading monomials, sorted LexR
/// descending.
struct GradedBasis {
    unsigned degree = 0;
    std::vector<Monomial> monomials;
};

inline GradedBasis standard_monomials(const std::vector<Monomial>& leading,
                                      unsigned n_vertices, unsigned degree) {
    GradedBasis out;
    out.degree = degree;
    auto order = MonomialOrder::lex_r();
    for (auto& m : monomials_of_degree(base_ring_variables(n_vertices), degree)) {
        bool standard = true;
        for (const auto& l : leading)
            if (l.divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.monomials.push_back(std::move(m));
    }
    std::sort(out.monomials.begin(), out.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

template <class F>
GradedBasis standard_monomials(const F& field,
                               const std::vector<Polynomial<F>>& groebner_basis,
                               unsigned n_vertices, unsigned degree) {
    std::vector<Monomial> leads;
    auto order = MonomialOrder::lex_r();
    leads.reserve(groebner_basis.size());
    for (const auto& p : groebner_basis) leads.push_back(p.leading_monomial(order));
    return standard_monomials(leads, n_vertices, degree);
}

/// Checks in_lex(J^m) == (in_lex J)^m as ideals: computes a LexR Groebner
/// basis of J^m within the reduction budget and compares leading-monomial
/// ideals by mutual normal-form membership.
template <class F>
bool power_initial_commutes(const LabeledGraph& g, unsigned m, const F& field,
                            std::size_t max_reductions = 200000) {
    if (!is_closed_labeling(g))
        throw HypothesisError("power_initial_commutes requires a closed graph");
    if (m == 0) throw std::invalid_argument("m must be >= 1");

    auto order = MonomialOrder::lex_r();
    auto binom = edge_ideal(g, Variant::Binomial, field);
    auto init = edge_ideal(g, Variant::Initial, field);
    if (binom.generators.empty()) return true;

    auto power_gens = ideal_power(binom, m, field);
    BuchbergerOptions opts;
    opts.max_reductions = max_reductions;
    auto gb = buchberger(field, power_gens, order, opts);

    std::vector<Polynomial<F>> lead_polys;
    lead_polys.reserve(gb.size());
    for (const auto& p : gb)
        lead_polys.push_back(
            Polynomial<F>::term(field, p.leading_monomial(order), field.one()));

    auto initial_power = ideal_power(init, m, field);

    for (const auto& p : lead_polys)
        if (!normal_form(field, p, initial_power, order).is_zero()) return false;
    for (const auto& p : initial_power)
        if (!normal_form(field, p, lead_polys, order).is_zero()) return false;
    return true;
}

} // namespace linstrand
