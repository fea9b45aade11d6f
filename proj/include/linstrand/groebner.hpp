#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "linstrand/errors.hpp"
#include "linstrand/polynomial.hpp"

namespace linstrand {

template <class F>
struct DivisionResult {
    std::vector<Polynomial<F>> quotients; // one per basis element
    Polynomial<F> remainder;
};

/// Multivariate division: f = sum(quotients[k] * basis[k]) + remainder, and
/// no monomial of the remainder is divisible by any basis leading monomial.
/// Deterministic: each step reduces the largest reducible monomial by the
/// first basis element whose leading monomial divides it.
template <class F>
DivisionResult<F> divide(const F& field, const Polynomial<F>& f,
                         const std::vector<Polynomial<F>>& basis,
                         const MonomialOrder& order) {
    for (const auto& b : basis)
        if (b.is_zero()) throw std::invalid_argument("zero divisor in basis");

    std::vector<Monomial> lead_m;
    std::vector<typename F::Element> lead_c;
    lead_m.reserve(basis.size());
    for (const auto& b : basis) {
        const auto& lt = b.leading_term(order);
        lead_m.push_back(lt.mono);
        lead_c.push_back(lt.coeff);
    }

    DivisionResult<F> res;
    res.quotients.assign(basis.size(), Polynomial<F>());
    std::vector<std::pair<Monomial, typename F::Element>> rem_terms;

    Polynomial<F> h = f;
    while (!h.is_zero()) {
        const auto& lt = h.leading_term(order);
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto q = lead_m[k].divide_into(lt.mono);
            if (!q) continue;
            auto c = field.div(lt.coeff, lead_c[k]);
            res.quotients[k] =
                add(field, res.quotients[k], Polynomial<F>::term(field, *q, c));
            h = sub_scaled(field, h, c, *q, basis[k]);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem_terms.emplace_back(lt.mono, lt.coeff);
            h = sub(field, h, Polynomial<F>::term(field, lt.mono, lt.coeff));
        }
    }
    res.remainder = Polynomial<F>::from_terms(field, std::move(rem_terms));
    return res;
}

template <class F>
Polynomial<F> normal_form(const F& field, const Polynomial<F>& f,
                          const std::vector<Polynomial<F>>& basis,
                          const MonomialOrder& order) {
    return divide(field, f, basis, order).remainder;
}

template <class F>
Polynomial<F> s_polynomial(const F& field, const Polynomial<F>& f,
                           const Polynomial<F>& g, const MonomialOrder& order) {
    const auto& lf = f.leading_term(order);
    const auto& lg = g.leading_term(order);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Monomial uf = *lf.mono.divide_into(l);
    Monomial ug = *lg.mono.divide_into(l);
    auto a = field.inv(lf.coeff);
    auto b = field.inv(lg.coeff);
    return sub(field, mul_monomial(field, uf, scale(field, a, f)),
               mul_monomial(field, ug, scale(field, b, g)));
}

struct BuchbergerOptions {
    /// Maximum number of S-pair reductions before giving up; 0 = unlimited.
    std::size_t max_reductions = 0;
};

/// Interreduction to the reduced basis: minimal leading monomials, tails in
/// normal form, lead coefficients one.
template <class F>
std::vector<Polynomial<F>> reduce_basis(const F& field,
                                        std::vector<Polynomial<F>> basis,
                                        const MonomialOrder& order) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Polynomial<F>& p) { return p.is_zero(); }),
                basis.end());
    // drop elements whose leading monomial another one divides
    std::vector<Polynomial<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis[i].leading_monomial(order);
        bool keep = true;
        for (std::size_t j = 0; keep && j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_monomial(order);
            if (mj.divides(mi) && !(mi == mj && j > i)) keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial<F>> out(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial<F> r = others.empty()
                              ? minimal[i]
                              : normal_form(field, minimal[i], others, order);
        out[i] = monic(field, r, order);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    return out;
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the product and chain criteria. Returns the reduced basis.
template <class F>
std::vector<Polynomial<F>> buchberger(const F& field,
                                      const std::vector<Polynomial<F>>& gens,
                                      const MonomialOrder& order,
                                      const BuchbergerOptions& opts = {}) {
    std::vector<Polynomial<F>> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(p);
    if (g.empty()) return g;

    std::vector<Monomial> lm;
    lm.reserve(g.size());
    for (const auto& p : g) lm.push_back(p.leading_monomial(order));

    using Pair = std::pair<std::size_t, std::size_t>;
    std::vector<Pair> queue;
    std::set<Pair> treated;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
    };
    for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

    auto pop_smallest = [&]() {
        std::size_t best = 0;
        Monomial best_lcm = Monomial::lcm(lm[queue[0].first], lm[queue[0].second]);
        for (std::size_t k = 1; k < queue.size(); ++k) {
            Monomial l = Monomial::lcm(lm[queue[k].first], lm[queue[k].second]);
            if (order.less(l, best_lcm)) {
                best = k;
                best_lcm = std::move(l);
            }
        }
        Pair p = queue[best];
        queue.erase(queue.begin() + std::ptrdiff_t(best));
        return p;
    };

    std::size_t reductions = 0;
    while (!queue.empty()) {
        auto [i, j] = pop_smallest();
        treated.insert({i, j});

        // product criterion
        if (Monomial::coprime(lm[i], lm[j])) continue;

        // chain criterion: some g_k divides the lcm and both companion pairs
        // were already treated
        Monomial l = Monomial::lcm(lm[i], lm[j]);
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == i || k == j || !lm[k].divides(l)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (treated.count(ik) && treated.count(jk)) skip = true;
        }
        if (skip) continue;

        if (opts.max_reductions && ++reductions > opts.max_reductions)
            throw BudgetExceededError("buchberger exceeded " +
                                      std::to_string(opts.max_reductions) +
                                      " S-pair reductions");
        Polynomial<F> r =
            normal_form(field, s_polynomial(field, g[i], g[j], order), g, order);
        if (r.is_zero()) continue;
        g.push_back(std::move(r));
        lm.push_back(g.back().leading_monomial(order));
        push_pairs(g.size() - 1);
    }

    return reduce_basis(field, std::move(g), order);
}

/// True iff every S-polynomial of two generators reduces to zero against the
/// generators themselves (direct check, no criteria shortcuts).
template <class F>
bool is_groebner(const F& field, const std::vector<Polynomial<F>>& gens,
                 const MonomialOrder& order) {
    for (const auto& p : gens)
        if (p.is_zero()) throw std::invalid_argument("zero generator");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Polynomial<F> s = s_polynomial(field, gens[i], gens[j], order);
            if (!normal_form(field, s, gens, order).is_zero()) return false;
        }
    return true;
}

} // namespace linstrand
