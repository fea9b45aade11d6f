#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "linstrand/edge_ideal.hpp"
#include "linstrand/groebner.hpp"
#include "linstrand/linalg.hpp"

namespace linstrand {

enum class Provenance { Formula, Oracle };

/// A window of graded Betti numbers. Values are stored in the quotient
/// convention beta_{p,j}(R/I) and exposed in both conventions via
/// beta_{i,j}(I) = beta_{i+1,j}(R/I). Entries outside the window, or
/// declined by the budget, are unknown rather than zero.
struct BettiTable {
    unsigned max_i = 0; // ideal-convention homological window bound
    unsigned max_j = 0;
    Provenance provenance = Provenance::Oracle;
    std::map<std::pair<unsigned, unsigned>, std::size_t> quotient_values;
    std::set<std::pair<unsigned, unsigned>> skipped; // quotient-convention keys

    bool in_window_quotient(unsigned p, unsigned j) const {
        return p <= max_i + 1 && j <= max_j;
    }

    std::optional<std::size_t> quotient_betti(unsigned p, unsigned j) const {
        if (!in_window_quotient(p, j) || skipped.count({p, j})) return std::nullopt;
        auto it = quotient_values.find({p, j});
        return it == quotient_values.end() ? std::optional<std::size_t>(0)
                                           : std::optional<std::size_t>(it->second);
    }

    std::optional<std::size_t> ideal_betti(unsigned i, unsigned j) const {
        return quotient_betti(i + 1, j);
    }

    /// Staircase text layout in the ideal convention: rows are j - i,
    /// columns are i; zero prints as '.', unknown as '?'.
    std::string render_staircase() const {
        unsigned min_row = max_j, max_row = 0;
        bool any_row = false;
        for (unsigned r = 0; r <= max_j; ++r) {
            bool any = false;
            for (unsigned i = 0; i <= max_i && r + i <= max_j; ++i) {
                auto v = ideal_betti(i, r + i);
                if (!v || *v != 0) any = true;
            }
            if (any) {
                if (!any_row) min_row = r;
                max_row = r;
                any_row = true;
            }
        }
        if (!any_row) min_row = max_row = 0;
        auto pad = [](const std::string& s, std::size_t w) {
            return std::string(s.size() < w ? w - s.size() : 1, ' ') + s;
        };
        std::string out = "      ";
        for (unsigned i = 0; i <= max_i; ++i) out += pad(std::to_string(i), 7);
        out += "\n";
        for (unsigned r = min_row; r <= max_row; ++r) {
            out += pad(std::to_string(r) + ":", 6);
            for (unsigned i = 0; i <= max_i; ++i) {
                std::string cell;
                if (r + i > max_j) {
                    cell = "?";
                } else {
                    auto v = ideal_betti(i, r + i);
                    cell = !v ? "?" : (*v == 0 ? "." : std::to_string(*v));
                }
                out += pad(cell, 7);
            }
            out += "\n";
        }
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["convention"] = "ideal";
        j["provenance"] = provenance == Provenance::Oracle ? "oracle" : "formula";
        j["window"] = {{"max_i", max_i}, {"max_j", max_j}};
        auto entries = nlohmann::ordered_json::array();
        for (unsigned i = 0; i <= max_i; ++i)
            for (unsigned jj = 0; jj <= max_j; ++jj) {
                auto v = ideal_betti(i, jj);
                if (v && *v == 0) continue;
                nlohmann::ordered_json e;
                e["i"] = i;
                e["j"] = jj;
                if (v)
                    e["value"] = *v;
                else
                    e["value"] = nullptr;
                entries.push_back(e);
            }
        j["entries"] = entries;
        return j;
    }
};

/// Betti numbers of R/I as Koszul homology: beta_{p,j}(R/I) is the dimension
/// of H_p(K tensor R/I) in internal degree j, where K is the Koszul complex
/// on all 2n base-ring variables. Each graded piece is a finite-dimensional
/// rank problem over the coefficient field; pieces above the budget are
/// declined, never silently truncated.
///
/// Sign convention: for S = {v_1 < ... < v_p} in the fixed variable order
/// x_0..x_{n-1}, y_0..y_{n-1},
///   d(e_S tensor u) = sum_k (-1)^{k+1} e_{S \ v_k} tensor x_{v_k} u.
///
/// Pieces decompose along vertex multidegree and x-degree (both preserved by
/// multiplication and by normal forms against the vertex-graded basis), so
/// each rank is accumulated block by block.
template <class F>
class KoszulOracle {
public:
    KoszulOracle(const F& field, unsigned n_vertices,
                 std::vector<Polynomial<F>> groebner_basis, std::size_t budget = 20000)
        : field_(field),
          n_(n_vertices),
          vars_(base_ring_variables(n_vertices)),
          order_(MonomialOrder::lex_r()),
          gb_(std::move(groebner_basis)),
          budget_(budget) {
        monomial_ideal_ = true;
        for (const auto& p : gb_) {
            if (p.is_zero()) throw std::invalid_argument("zero element in basis");
            leads_.push_back(p.leading_monomial(order_));
            if (p.term_count() > 1) monomial_ideal_ = false;
        }
    }

    std::size_t budget() const { return budget_; }

    std::size_t piece_dimension(unsigned p, unsigned j) {
        if (p > vars_.size() || p > j) return 0;
        return subset_count(p) * std_count(j - p);
    }

    /// beta_{p,j}(R/I).
    std::size_t homology_dimension(unsigned p, unsigned j) {
        check_budget(p, j);
        if (p > 0) check_budget(p - 1, j);
        check_budget(p + 1, j);
        std::size_t dim = piece_dimension(p, j);
        if (dim == 0) return 0;
        std::size_t r1 = differential_rank(p, j);
        std::size_t r2 = differential_rank(p + 1, j);
        return dim - r1 - r2;
    }

    /// Rank of d_p restricted to internal degree j (columns in (p,j), rows
    /// in (p-1,j)); cached.
    std::size_t differential_rank(unsigned p, unsigned j) {
        if (p == 0 || piece_dimension(p, j) == 0 || piece_dimension(p - 1, j) == 0)
            return 0;
        auto key = std::make_pair(p, j);
        auto cached = rank_cache_.find(key);
        if (cached != rank_cache_.end()) return cached->second;

        const auto& srcs = subsets(p);
        const auto& drops = drop_table(p);
        const auto& us = std_basis(j - p).monomials;
        const auto& target_mono_id = std_index(j - p + 1);
        std::size_t n_target_std = std_count(j - p + 1);

        struct Block {
            Echelon<F> ech;
            std::unordered_map<std::size_t, std::size_t> rows;
            explicit Block(const F& f) : ech(f) {}
        };
        std::unordered_map<std::vector<std::uint32_t>, Block, VecHash> blocks;

        std::vector<std::uint32_t> key_buf;
        for (std::size_t si = 0; si < srcs.size(); ++si) {
            const auto& S = srcs[si];
            for (std::size_t ui = 0; ui < us.size(); ++ui) {
                const Monomial& u = us[ui];
                SparseVec<F> col;
                for (std::size_t k = 0; k < S.size(); ++k) {
                    Monomial prod = u * Monomial::var(vars_[S[k]]);
                    const Polynomial<F>& reduced = nf(prod);
                    if (reduced.is_zero()) continue;
                    bool neg = (k % 2) == 1; // (-1)^{k+1}, k one-based
                    std::size_t sub_id = drops[si][k];
                    for (const auto& t : reduced.terms()) {
                        std::size_t row =
                            sub_id * n_target_std + target_mono_id.at(t.mono);
                        col.emplace_back(row, neg ? field_.neg(t.coeff) : t.coeff);
                    }
                }
                if (col.empty()) continue;
                key_buf.assign(n_ + 1, 0);
                u.add_vertex_multidegree(key_buf);
                std::uint32_t xd = u.x_degree();
                for (unsigned v : S) {
                    key_buf[v < n_ ? v : v - n_] += 1;
                    if (v < n_) ++xd;
                }
                key_buf[n_] = xd;

                auto bit = blocks.find(key_buf);
                if (bit == blocks.end())
                    bit = blocks.emplace(key_buf, Block(field_)).first;
                Block& blk = bit->second;
                for (auto& [row, c] : col) {
                    auto [rit, fresh] = blk.rows.emplace(row, blk.rows.size());
                    row = rit->second;
                }
                blk.ech.add_row(std::move(col));
            }
        }
        std::size_t rank = 0;
        for (const auto& [k, blk] : blocks) rank += blk.ech.rank();
        rank_cache_.emplace(key, rank);
        return rank;
    }

    /// The full window in the ideal convention; budget-declined pieces are
    /// recorded as skipped.
    BettiTable graded_betti(unsigned max_i, unsigned max_j) {
        BettiTable table;
        table.max_i = max_i;
        table.max_j = max_j;
        table.provenance = Provenance::Oracle;
        for (unsigned p = 0; p <= max_i + 1; ++p)
            for (unsigned j = 0; j <= max_j; ++j) {
                try {
                    std::size_t b = homology_dimension(p, j);
                    if (b) table.quotient_values[{p, j}] = b;
                } catch (const BudgetExceededError&) {
                    table.skipped.insert({p, j});
                }
            }
        return table;
    }

    /// The diagonal j = 2m + i in the ideal convention, i = 0..max_i;
    /// entries declined by the budget come back empty.
    std::vector<std::optional<std::size_t>> linear_strand(unsigned m, unsigned max_i) {
        std::vector<std::optional<std::size_t>> out;
        for (unsigned i = 0; i <= max_i; ++i) {
            try {
                out.emplace_back(homology_dimension(i + 1, 2 * m + i));
            } catch (const BudgetExceededError&) {
                out.emplace_back(std::nullopt);
            }
        }
        return out;
    }

    std::size_t std_count(unsigned d) { return std_basis(d).monomials.size(); }

    const GradedBasis& std_basis(unsigned d) {
        auto it = std_cache_.find(d);
        if (it == std_cache_.end())
            it = std_cache_.emplace(d, standard_monomials(leads_, n_, d)).first;
        return it->second;
    }

private:
    void check_budget(unsigned p, unsigned j) {
        std::size_t dim = piece_dimension(p, j);
        if (dim > budget_)
            throw BudgetExceededError(
                "graded piece (" + std::to_string(p) + "," + std::to_string(j) +
                ") has dimension " + std::to_string(dim) + ", budget " +
                std::to_string(budget_));
    }

    std::size_t subset_count(unsigned p) { return subsets(p).size(); }

    // all p-element subsets of variable indices 0..2n-1, lexicographic
    const std::vector<std::vector<unsigned>>& subsets(unsigned p) {
        auto it = subset_cache_.find(p);
        if (it != subset_cache_.end()) return it->second;
        std::vector<std::vector<unsigned>> out;
        std::vector<unsigned> cur;
        unsigned nv = unsigned(vars_.size());
        auto rec = [&](auto&& self, unsigned lo, unsigned need) -> void {
            if (need == 0) {
                out.push_back(cur);
                return;
            }
            for (unsigned v = lo; v + need <= nv; ++v) {
                cur.push_back(v);
                self(self, v + 1, need - 1);
                cur.pop_back();
            }
        };
        rec(rec, 0, p);
        return subset_cache_.emplace(p, std::move(out)).first->second;
    }

    // drop_table(p)[si][k] = index within subsets(p-1) of subsets(p)[si]
    // minus its k-th element
    const std::vector<std::vector<std::size_t>>& drop_table(unsigned p) {
        auto it = drop_cache_.find(p);
        if (it != drop_cache_.end()) return it->second;
        const auto& lower = subsets(p - 1);
        std::unordered_map<std::vector<unsigned>, std::size_t, UVecHash> idx;
        for (std::size_t s = 0; s < lower.size(); ++s) idx.emplace(lower[s], s);
        const auto& upper = subsets(p);
        std::vector<std::vector<std::size_t>> table(upper.size());
        for (std::size_t si = 0; si < upper.size(); ++si) {
            table[si].resize(upper[si].size());
            for (std::size_t k = 0; k < upper[si].size(); ++k) {
                std::vector<unsigned> sub = upper[si];
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
                table[si][k] = idx.at(sub);
            }
        }
        return drop_cache_.emplace(p, std::move(table)).first->second;
    }

    const std::unordered_map<Monomial, std::size_t, MonomialHash>& std_index(unsigned d) {
        auto it = std_index_cache_.find(d);
        if (it != std_index_cache_.end()) return it->second;
        std::unordered_map<Monomial, std::size_t, MonomialHash> map;
        const auto& basis = std_basis(d);
        for (std::size_t i = 0; i < basis.monomials.size(); ++i)
            map.emplace(basis.monomials[i], i);
        return std_index_cache_.emplace(d, std::move(map)).first->second;
    }

    const Polynomial<F>& nf(const Monomial& m) {
        auto it = nf_cache_.find(m);
        if (it != nf_cache_.end()) return it->second;
        Polynomial<F> result;
        if (monomial_ideal_) {
            bool standard = true;
            for (const auto& l : leads_)
                if (l.divides(m)) {
                    standard = false;
                    break;
                }
            if (standard) result = Polynomial<F>::term(field_, m, field_.one());
        } else {
            result = normal_form(field_, Polynomial<F>::term(field_, m, field_.one()),
                                 gb_, order_);
        }
        return nf_cache_.emplace(m, std::move(result)).first->second;
    }

    struct UVecHash {
        std::size_t operator()(const std::vector<unsigned>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (auto x : v) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };

    const F& field_;
    unsigned n_;
    std::vector<VariableId> vars_;
    MonomialOrder order_;
    std::vector<Polynomial<F>> gb_;
    std::vector<Monomial> leads_;
    bool monomial_ideal_ = false;
    std::size_t budget_;

    std::map<unsigned, GradedBasis> std_cache_;
    std::map<unsigned, std::unordered_map<Monomial, std::size_t, MonomialHash>>
        std_index_cache_;
    std::map<unsigned, std::vector<std::vector<unsigned>>> subset_cache_;
    std::map<unsigned, std::vector<std::vector<std::size_t>>> drop_cache_;
    std::unordered_map<Monomial, Polynomial<F>, MonomialHash> nf_cache_;
    std::map<std::pair<unsigned, unsigned>, std::size_t> rank_cache_;
};

/// Groebner basis of the m-th power of an edge ideal under LexR (monomial
/// generating sets are their own basis), ready for the oracle.
template <class F>
std::vector<Polynomial<F>> power_groebner_basis(const F& field, const LabeledGraph& g,
                                                Variant variant, unsigned m,
                                                std::size_t max_reductions = 500000) {
    auto ideal = edge_ideal(g, variant, field);
    auto gens = ideal_power(ideal, m, field);
    if (variant == Variant::Initial) return gens;
    BuchbergerOptions opts;
    opts.max_reductions = max_reductions;
    return buchberger(field, gens, MonomialOrder::lex_r(), opts);
}

/// The linear strand of the m-th power of an edge ideal, straight from the
/// oracle: beta_{i, 2m+i} for i = 0..max_i in the ideal convention.
template <class F>
std::vector<std::optional<std::size_t>> linear_strand_betti(
    const F& field, const LabeledGraph& g, Variant variant, unsigned m,
    unsigned max_i, std::size_t budget = 20000) {
    KoszulOracle<F> oracle(field, g.n(), power_groebner_basis(field, g, variant, m),
                           budget);
    return oracle.linear_strand(m, max_i);
}

} // namespace linstrand
