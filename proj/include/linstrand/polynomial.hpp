#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linstrand/field.hpp"
#include "linstrand/monomial.hpp"
#include "linstrand/order.hpp"

namespace linstrand {

/// A sparse multivariate polynomial over a field F. Terms are stored sorted
/// under the fixed structural monomial order with no zero coefficients, so
/// equality is term-wise. Leading terms with respect to an actual monomial
/// order are located by scanning.
template <class F>
class Polynomial {
public:
    using Coeff = typename F::Element;
    struct Term {
        Monomial mono;
        Coeff coeff;
    };

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial term(const F& field, Monomial m, Coeff c) {
        Polynomial p;
        if (!field.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    static Polynomial constant(const F& field, Coeff c) {
        return term(field, Monomial::one(), std::move(c));
    }

    /// Builds from arbitrary (monomial, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    static Polynomial from_terms(const F& field,
                                 std::vector<std::pair<Monomial, Coeff>> raw) {
        std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
            return Monomial::structural_compare(a.first, b.first) > 0;
        });
        Polynomial p;
        for (auto& [m, c] : raw) {
            if (!p.terms_.empty() && p.terms_.back().mono == m) {
                p.terms_.back().coeff = field.add(p.terms_.back().coeff, c);
            } else {
                p.terms_.push_back({std::move(m), std::move(c)});
            }
        }
        std::size_t w = 0;
        for (std::size_t r = 0; r < p.terms_.size(); ++r) {
            if (field.is_zero(p.terms_[r].coeff)) continue;
            if (w != r) p.terms_[w] = std::move(p.terms_[r]);
            ++w;
        }
        p.terms_.resize(w);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) ||
                !(terms_[i].coeff == o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// All terms share one total degree; throws otherwise. Zero reports 0.
    std::uint32_t homogeneous_degree() const {
        if (terms_.empty()) return 0;
        std::uint32_t d = terms_.front().mono.total_degree();
        for (const auto& t : terms_)
            if (t.mono.total_degree() != d)
                throw std::invalid_argument("polynomial is not homogeneous");
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::uint32_t d = terms_.front().mono.total_degree();
        for (const auto& t : terms_)
            if (t.mono.total_degree() != d) return false;
        return true;
    }

    const Term& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        const Term* best = &terms_.front();
        for (const auto& t : terms_)
            if (order.greater(t.mono, best->mono)) best = &t;
        return *best;
    }

    const Monomial& leading_monomial(const MonomialOrder& order) const {
        return leading_term(order).mono;
    }

    /// Terms sorted descending under `order`; for rendering and fixtures.
    std::vector<Term> sorted_terms(const MonomialOrder& order) const {
        std::vector<Term> out = terms_;
        std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
            return order.greater(a.mono, b.mono);
        });
        return out;
    }

private:
    std::vector<Term> terms_;
};

template <class F>
Polynomial<F> add(const F& field, const Polynomial<F>& f, const Polynomial<F>& g) {
    using Term = typename Polynomial<F>::Term;
    std::vector<std::pair<Monomial, typename F::Element>> raw;
    raw.reserve(f.term_count() + g.term_count());
    for (const Term& t : f.terms()) raw.emplace_back(t.mono, t.coeff);
    for (const Term& t : g.terms()) raw.emplace_back(t.mono, t.coeff);
    return Polynomial<F>::from_terms(field, std::move(raw));
}

template <class F>
Polynomial<F> negate(const F& field, const Polynomial<F>& f) {
    std::vector<std::pair<Monomial, typename F::Element>> raw;
    raw.reserve(f.term_count());
    for (const auto& t : f.terms()) raw.emplace_back(t.mono, field.neg(t.coeff));
    return Polynomial<F>::from_terms(field, std::move(raw));
}

template <class F>
Polynomial<F> sub(const F& field, const Polynomial<F>& f, const Polynomial<F>& g) {
    return add(field, f, negate(field, g));
}

/// f - c * m * g, the division/S-pair workhorse.
template <class F>
Polynomial<F> sub_scaled(const F& field, const Polynomial<F>& f,
                         const typename F::Element& c, const Monomial& m,
                         const Polynomial<F>& g) {
    std::vector<std::pair<Monomial, typename F::Element>> raw;
    raw.reserve(f.term_count() + g.term_count());
    for (const auto& t : f.terms()) raw.emplace_back(t.mono, t.coeff);
    for (const auto& t : g.terms())
        raw.emplace_back(m * t.mono, field.neg(field.mul(c, t.coeff)));
    return Polynomial<F>::from_terms(field, std::move(raw));
}

template <class F>
Polynomial<F> scale(const F& field, const typename F::Element& c,
                    const Polynomial<F>& f) {
    std::vector<std::pair<Monomial, typename F::Element>> raw;
    raw.reserve(f.term_count());
    for (const auto& t : f.terms()) raw.emplace_back(t.mono, field.mul(c, t.coeff));
    return Polynomial<F>::from_terms(field, std::move(raw));
}

template <class F>
Polynomial<F> mul_monomial(const F& field, const Monomial& m, const Polynomial<F>& f) {
    std::vector<std::pair<Monomial, typename F::Element>> raw;
    raw.reserve(f.term_count());
    for (const auto& t : f.terms()) raw.emplace_back(m * t.mono, t.coeff);
    return Polynomial<F>::from_terms(field, std::move(raw));
}

template <class F>
Polynomial<F> mul(const F& field, const Polynomial<F>& f, const Polynomial<F>& g) {
    std::vector<std::pair<Monomial, typename F::Element>> raw;
    raw.reserve(f.term_count() * g.term_count());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            raw.emplace_back(a.mono * b.mono, field.mul(a.coeff, b.coeff));
    return Polynomial<F>::from_terms(field, std::move(raw));
}

/// Lead coefficient scaled to one.
template <class F>
Polynomial<F> monic(const F& field, const Polynomial<F>& f, const MonomialOrder& order) {
    if (f.is_zero()) return f;
    return scale(field, field.inv(f.leading_term(order).coeff), f);
}

} // namespace linstrand
