#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "linstrand/edge_ideal.hpp"
#include "linstrand/graph.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/polynomial.hpp"

namespace linstrand {

enum class ReesFamily { Koszul, EagonNorthcott, Pluecker };

inline const char* family_name(ReesFamily f) {
    switch (f) {
        case ReesFamily::Koszul: return "Koszul";
        case ReesFamily::EagonNorthcott: return "Eagon-Northcott";
        case ReesFamily::Pluecker: return "Pluecker";
    }
    return "?";
}

struct EdgePairWitness {
    Edge first, second;
    unsigned first_clique = 0, second_clique = 0; // 1-based indices
};

using ReesWitness = std::variant<EdgePairWitness, Triangle, FourClique>;

/// One generator of the Rees relation ideal, tagged by family and variant.
/// The body lies in the extended ring S and maps to zero under the
/// presentation map of its variant.
template <class F>
struct ReesRelation {
    ReesFamily family = ReesFamily::Koszul;
    Variant variant = Variant::Binomial;
    Polynomial<F> body;
    ReesWitness witness;
    std::pair<std::uint32_t, std::uint32_t> bidegree{0, 0}; // (T-degree, xy-degree)
};

namespace detail {

template <class F>
Polynomial<F> t_var(const F& field, unsigned i, unsigned j) {
    return Polynomial<F>::term(field, Monomial::var(VariableId::t(i, j)), field.one());
}

template <class F>
Polynomial<F> coeff_times_t(const F& field, VariableId v, unsigned i, unsigned j,
                            bool negate_term = false) {
    auto c = negate_term ? field.neg(field.one()) : field.one();
    return Polynomial<F>::term(
        field, Monomial({{v, 1}, {VariableId::t(i, j), 1}}), c);
}

} // namespace detail

/// The complete relation generator list for the requested variant, in a
/// deterministic order: Koszul relations by edge pair, Eagon-Northcott by
/// triangle with the x-relation before the y-relation, Pluecker by 4-clique.
template <class F>
std::vector<ReesRelation<F>> rees_relations(const LabeledGraph& g, Variant variant,
                                            const F& field) {
    if (!is_closed_labeling(g))
        throw HypothesisError("rees_relations requires a closed graph");

    std::vector<ReesRelation<F>> out;
    auto cliques = maximal_cliques(g);
    const auto& edges = g.edges();
    std::vector<unsigned> cidx(edges.size());
    for (std::size_t a = 0; a < edges.size(); ++a)
        cidx[a] = clique_index(cliques, edges[a]);

    auto coeff_poly = [&](Edge e) {
        return variant == Variant::Binomial
                   ? edge_binomial(field, e.first, e.second)
                   : Polynomial<F>::term(
                         field, edge_initial_monomial(e.first, e.second), field.one());
    };

    // Koszul relations: one per unordered pair of edges lying in cliques of
    // distinct least index. The initial variant keeps only pairs where one
    // edge dominates the other coordinatewise and leads with the dominating
    // edge's monomial.
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (cidx[a] == cidx[b]) continue;
            Edge ea = edges[a], eb = edges[b];
            ReesRelation<F> rel;
            rel.family = ReesFamily::Koszul;
            rel.variant = variant;
            rel.witness = EdgePairWitness{ea, eb, cidx[a], cidx[b]};
            rel.bidegree = {1, 4};
            if (variant == Variant::Binomial) {
                rel.body = sub(
                    field,
                    mul(field, coeff_poly(ea), detail::t_var(field, eb.first, eb.second)),
                    mul(field, coeff_poly(eb), detail::t_var(field, ea.first, ea.second)));
            } else {
                Edge hi, lo;
                if (ea.first > eb.first && ea.second > eb.second) {
                    hi = ea;
                    lo = eb;
                } else if (eb.first > ea.first && eb.second > ea.second) {
                    hi = eb;
                    lo = ea;
                } else {
                    continue; // no coordinatewise domination: not in the list
                }
                rel.body = sub(
                    field,
                    mul(field, coeff_poly(hi), detail::t_var(field, lo.first, lo.second)),
                    mul(field, coeff_poly(lo), detail::t_var(field, hi.first, hi.second)));
            }
            out.push_back(std::move(rel));
        }

    // Eagon-Northcott relations, two per triangle i < j < k:
    //   binomial:  x_i T_jk - x_j T_ik + x_k T_ij,  y_j T_ik - y_i T_jk - y_k T_ij
    //   initial:   x_i T_jk - x_j T_ik,             y_j T_ik - y_k T_ij
    for (const auto& tri : triangles(g)) {
        auto [i, j, k] = tri;
        ReesRelation<F> rx, ry;
        rx.family = ry.family = ReesFamily::EagonNorthcott;
        rx.variant = ry.variant = variant;
        rx.witness = ry.witness = tri;
        rx.bidegree = ry.bidegree = {1, 3};
        auto term = [&](VariableId v, unsigned a, unsigned b, bool neg) {
            return detail::coeff_times_t(field, v, a, b, neg);
        };
        if (variant == Variant::Binomial) {
            rx.body = add(field,
                          add(field, term(VariableId::x(i), j, k, false),
                              term(VariableId::x(j), i, k, true)),
                          term(VariableId::x(k), i, j, false));
            ry.body = add(field,
                          add(field, term(VariableId::y(j), i, k, false),
                              term(VariableId::y(i), j, k, true)),
                          term(VariableId::y(k), i, j, true));
        } else {
            rx.body = add(field, term(VariableId::x(i), j, k, false),
                          term(VariableId::x(j), i, k, true));
            ry.body = add(field, term(VariableId::y(j), i, k, false),
                          term(VariableId::y(k), i, j, true));
        }
        out.push_back(std::move(rx));
        out.push_back(std::move(ry));
    }

    // Pluecker relations, one per 4-clique a < b < c < d:
    //   binomial: T_ab T_cd - T_ac T_bd + T_ad T_bc
    //   initial:  T_ad T_bc - T_ac T_bd   (the monomial presentation's quadric)
    for (const auto& q : four_cliques(g)) {
        auto [a, b, c, d] = q;
        ReesRelation<F> rel;
        rel.family = ReesFamily::Pluecker;
        rel.variant = variant;
        rel.witness = q;
        rel.bidegree = {2, 4};
        auto tt = [&](unsigned p, unsigned q1, unsigned r, unsigned s, bool neg) {
            auto coeff = neg ? field.neg(field.one()) : field.one();
            return Polynomial<F>::term(
                field,
                Monomial::var(VariableId::t(p, q1)) * Monomial::var(VariableId::t(r, s)),
                coeff);
        };
        if (variant == Variant::Binomial) {
            rel.body = add(field, add(field, tt(a, b, c, d, false), tt(a, c, b, d, true)),
                           tt(a, d, b, c, false));
        } else {
            rel.body = add(field, tt(a, d, b, c, false), tt(a, c, b, d, true));
        }
        out.push_back(std::move(rel));
    }

    return out;
}

/// The presentation map: T_e maps to f_e * T (binomial) or to the edge's
/// leading monomial times T (initial); x, y and the Rees variable are fixed.
template <class F>
Polynomial<F> phi_apply(const F& field, const Polynomial<F>& f, const LabeledGraph& g,
                        Variant variant) {
    Polynomial<F> out;
    for (const auto& t : f.terms()) {
        std::vector<Monomial::Entry> fixed;
        Polynomial<F> factor = Polynomial<F>::constant(field, t.coeff);
        for (const auto& [v, e] : t.mono.entries()) {
            if (v.kind() != VarKind::TEdge) {
                fixed.emplace_back(v, e);
                continue;
            }
            if (!g.has_edge(v.first(), v.second()))
                throw std::invalid_argument("unknown edge variable " + v.str());
            Polynomial<F> image =
                variant == Variant::Binomial
                    ? mul(field, edge_binomial(field, v.first(), v.second()),
                          Polynomial<F>::term(field, Monomial::var(VariableId::rees()),
                                              field.one()))
                    : Polynomial<F>::term(
                          field,
                          edge_initial_monomial(v.first(), v.second()) *
                              Monomial::var(VariableId::rees()),
                          field.one());
            for (std::uint32_t rep = 0; rep < e; ++rep)
                factor = mul(field, factor, image);
        }
        out = add(field, out, mul_monomial(field, Monomial(std::move(fixed)), factor));
    }
    return out;
}

/// For each triangle i < j < k the two monomials x_i T_jk and y_j T_ik; the
/// leading monomials of the Eagon-Northcott relations (initial variant under
/// the graded revlex order; binomial variant by the matching order taken as
/// given). Size 2t.
inline std::vector<Monomial> en_leading_monomials(const LabeledGraph& g) {
    if (!is_closed_labeling(g))
        throw HypothesisError("en_leading_monomials requires a closed graph");
    std::vector<Monomial> out;
    for (const auto& [i, j, k] : triangles(g)) {
        out.push_back(Monomial({{VariableId::x(i), 1}, {VariableId::t(j, k), 1}}));
        out.push_back(Monomial({{VariableId::y(j), 1}, {VariableId::t(i, k), 1}}));
    }
    return out;
}

struct CoprimeResult {
    bool pairwise_coprime = true;
    std::optional<std::pair<Monomial, Monomial>> witness;
};

/// Checks pairwise coprimality after deduplication (set semantics); on
/// failure reports the first violating pair in list order.
inline CoprimeResult check_pairwise_coprime(const std::vector<Monomial>& monomials) {
    std::vector<Monomial> set;
    for (const auto& m : monomials) {
        bool dup = false;
        for (const auto& s : set)
            if (s == m) {
                dup = true;
                break;
            }
        if (!dup) set.push_back(m);
    }
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!Monomial::coprime(set[a], set[b]))
                return {false, std::make_pair(set[a], set[b])};
    return {true, std::nullopt};
}

struct SliceOptions {
    std::size_t monomial_budget = 200000; // max S-monomials per slice
    std::size_t dense_cells = 5000000;    // dense materialization threshold
};

/// All monomials of the extended ring S with T-degree m and xy-degree b
/// (edge variables weigh (1,2)): multisets of m edges times xy-monomials of
/// degree b - 2m, in a fixed enumeration order.
inline std::vector<Monomial> s_monomials_of_bidegree(const LabeledGraph& g, unsigned m,
                                                     unsigned b) {
    std::vector<Monomial> out;
    if (b < 2 * m) return out;
    std::vector<Monomial> t_parts;
    const auto& edges = g.edges();
    std::vector<Monomial::Entry> current;
    auto rec = [&](auto&& self, std::size_t lo, unsigned remaining) -> void {
        if (remaining == 0) {
            t_parts.emplace_back(current);
            return;
        }
        for (std::size_t e = lo; e < edges.size(); ++e) {
            current.emplace_back(VariableId::t(edges[e].first, edges[e].second), 1);
            self(self, e, remaining - 1);
            current.pop_back();
        }
    };
    rec(rec, 0, m);
    auto xy = monomials_of_degree(base_ring_variables(g.n()), b - 2 * m);
    out.reserve(t_parts.size() * xy.size());
    for (const auto& tp : t_parts)
        for (const auto& x : xy) out.push_back(tp * x);
    return out;
}

namespace detail {

/// Vertex-multidegree-plus-x-degree block key; both statistics are
/// preserved by the presentation map in both variants, so the slice
/// matrices are block-diagonal across keys.
inline std::vector<std::uint32_t> block_key(const Monomial& m, unsigned n) {
    std::vector<std::uint32_t> key(n + 1, 0);
    m.add_vertex_multidegree(key);
    key[n] = m.x_degree();
    return key;
}

/// Substitutes T_e by the edge polynomial (without the Rees variable);
/// the result is the phi-image with the power of T stripped.
template <class F>
Polynomial<F> phi_image_stripped(const F& field, const Monomial& mono,
                                 const LabeledGraph& g, Variant variant) {
    std::vector<Monomial::Entry> fixed;
    Polynomial<F> factor = Polynomial<F>::constant(field, field.one());
    for (const auto& [v, e] : mono.entries()) {
        if (v.kind() != VarKind::TEdge) {
            fixed.emplace_back(v, e);
            continue;
        }
        if (!g.has_edge(v.first(), v.second()))
            throw std::invalid_argument("unknown edge variable " + v.str());
        Polynomial<F> image =
            variant == Variant::Binomial
                ? edge_binomial(field, v.first(), v.second())
                : Polynomial<F>::term(field,
                                      edge_initial_monomial(v.first(), v.second()),
                                      field.one());
        for (std::uint32_t rep = 0; rep < e; ++rep) factor = mul(field, factor, image);
    }
    return mul_monomial(field, Monomial(std::move(fixed)), factor);
}

template <class F>
struct SliceKernel {
    std::vector<Monomial> columns;        // the S-monomial basis of the slice
    std::vector<SparseVec<F>> kernel;     // kernel vectors over column indices
    std::size_t rank = 0;
};

/// Kernel of the presentation map restricted to the bidegree-(m, b) slice,
/// computed blockwise. Small blocks are materialized densely, larger ones go
/// through sparse elimination.
template <class F>
SliceKernel<F> kernel_slice(const F& field, const LabeledGraph& g, Variant variant,
                            unsigned m, unsigned b, const SliceOptions& opts) {
    SliceKernel<F> out;
    out.columns = s_monomials_of_bidegree(g, m, b);
    if (out.columns.size() > opts.monomial_budget)
        throw BudgetExceededError("bidegree (" + std::to_string(m) + "," +
                                  std::to_string(b) + ") slice has " +
                                  std::to_string(out.columns.size()) +
                                  " monomials, budget " +
                                  std::to_string(opts.monomial_budget));

    struct Block {
        std::vector<std::size_t> cols;                 // global column ids
        std::vector<SparseVec<F>> images;              // over local row ids
        std::unordered_map<Monomial, std::size_t, MonomialHash> rows;
    };
    std::unordered_map<std::vector<std::uint32_t>, Block, VecHash> blocks;

    unsigned n = g.n();
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
        Block& blk = blocks[block_key(out.columns[c], n)];
        Polynomial<F> img = phi_image_stripped(field, out.columns[c], g, variant);
        SparseVec<F> vec;
        vec.reserve(img.term_count());
        for (const auto& t : img.terms()) {
            auto [it, fresh] = blk.rows.emplace(t.mono, blk.rows.size());
            vec.emplace_back(it->second, t.coeff);
        }
        blk.cols.push_back(c);
        blk.images.push_back(std::move(vec));
    }

    for (auto& [key, blk] : blocks) {
        std::size_t aug_cells = blk.cols.size() * (blk.rows.size() + blk.cols.size());
        bool dense = aug_cells <= opts.dense_cells;
        // Augmented elimination per block: dense materialization below the
        // cell threshold, sparse incremental echelon above it.
        if (dense) {
            std::size_t nr = blk.rows.size(), nc = blk.cols.size();
            std::vector<std::vector<typename F::Element>> mat(
                nc, std::vector<typename F::Element>(nr + nc, field.zero()));
            for (std::size_t c = 0; c < nc; ++c) {
                for (const auto& [r, coeff] : blk.images[c]) mat[c][r] = coeff;
                mat[c][nr + c] = field.one();
            }
            dense_rank(field, mat);
            for (const auto& row : mat) {
                bool img_zero = true;
                for (std::size_t r = 0; r < nr && img_zero; ++r)
                    if (!field.is_zero(row[r])) img_zero = false;
                bool all_zero = img_zero;
                SparseVec<F> kv;
                for (std::size_t c = 0; c < nc; ++c)
                    if (!field.is_zero(row[nr + c])) {
                        all_zero = false;
                        if (img_zero) kv.emplace_back(blk.cols[c], row[nr + c]);
                    }
                if (!img_zero && !all_zero) ++out.rank;
                if (img_zero && !kv.empty()) out.kernel.push_back(std::move(kv));
            }
        } else {
            KernelBuilder<F> kb(field);
            for (const auto& img : blk.images) kb.add_column(img);
            out.rank += kb.rank();
            for (auto kv : kb.kernel_basis()) {
                for (auto& [idx, coeff] : kv) idx = blk.cols[idx];
                out.kernel.push_back(std::move(kv));
            }
        }
    }
    return out;
}

} // namespace detail

/// dim over the coefficient field of the bidegree-(m, b) slice of the
/// relation ideal: elements of S of that bidegree mapping to zero.
template <class F>
std::size_t kernel_slice_dimension(const F& field, const LabeledGraph& g,
                                   Variant variant, unsigned m, unsigned b,
                                   const SliceOptions& opts = {}) {
    if (m == 0) return 0; // the presentation map is injective on the base ring
    auto slice = detail::kernel_slice(field, g, variant, m, b, opts);
    return slice.kernel.size();
}

/// Number of minimal generators of the kernel slice in xy-degree b:
/// dim L_(m,b) minus the dimension of the image of degree-one multiplication
/// from L_(m,b-1). For closed K4-free graphs this equals the first-syzygy
/// Betti number beta_{1,b} of the m-th ideal power.
template <class F>
std::size_t syzygy_generator_count(const F& field, const LabeledGraph& g,
                                   Variant variant, unsigned m, unsigned b,
                                   const SliceOptions& opts = {}) {
    if (!is_closed_labeling(g))
        throw HypothesisError("syzygy_generator_count requires a closed graph");
    if (has_induced_k4(g))
        throw HypothesisError("syzygy_generator_count requires a K4-free graph");
    if (m == 0 || b == 0) return 0;

    std::size_t dim_b = kernel_slice_dimension(field, g, variant, m, b, opts);
    if (b < 1 + 2 * m) return dim_b; // nothing below to multiply up

    auto lower = detail::kernel_slice(field, g, variant, m, b - 1, opts);
    if (lower.kernel.empty()) return dim_b;

    auto upper_basis = s_monomials_of_bidegree(g, m, b);
    std::unordered_map<Monomial, std::size_t, MonomialHash> upper_id;
    for (std::size_t i = 0; i < upper_basis.size(); ++i)
        upper_id.emplace(upper_basis[i], i);

    unsigned n = g.n();
    BlockedEchelon<F> products(field);
    for (const auto& kv : lower.kernel) {
        for (const auto& var : base_ring_variables(n)) {
            SparseVec<F> prod;
            prod.reserve(kv.size());
            std::vector<std::uint32_t> key;
            for (const auto& [col, coeff] : kv) {
                Monomial mono = lower.columns[col] * Monomial::var(var);
                if (key.empty()) key = detail::block_key(mono, n);
                prod.emplace_back(upper_id.at(mono), coeff);
            }
            products.add_row(key, std::move(prod));
        }
    }
    std::size_t image_dim = products.rank();
    return dim_b - image_dim;
}

} // namespace linstrand
