#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "linstrand/monomial.hpp"

namespace linstrand {

/// Total multiplicative monomial orders with 1 minimal.
///
/// LexR: pure lexicographic on the base ring, x0 > x1 > ... > y0 > y1 > ...
/// (the Rees variable, when present, ranks below everything; edge variables
/// are rejected).
///
/// RevLexS: degree-graded reverse lexicographic on the extended ring, with
/// variable ranking T(i,j) first (ordered lexicographically by index pair),
/// then all x's, then all y's, then the Rees variable.
///
/// Custom: a user-supplied descending variable ranking with lex or graded
/// revlex comparison.
class MonomialOrder {
public:
    enum class Mode { Lex, GradedRevLex };

    static MonomialOrder lex_r() { return MonomialOrder(Builtin::LexR, Mode::Lex); }
    static MonomialOrder revlex_s() {
        return MonomialOrder(Builtin::RevLexS, Mode::GradedRevLex);
    }
    static MonomialOrder custom(const std::vector<VariableId>& ranking_descending,
                                Mode mode) {
        MonomialOrder o(Builtin::Custom, mode);
        for (std::size_t r = 0; r < ranking_descending.size(); ++r) {
            auto [it, fresh] = o.table_.emplace(ranking_descending[r].code(), r);
            if (!fresh) throw std::invalid_argument("duplicate variable in ranking");
        }
        return o;
    }

    Mode mode() const { return mode_; }

    /// Three-way comparison: +1 when u > v, -1 when u < v, 0 on equality.
    int compare(const Monomial& u, const Monomial& v) const {
        if (mode_ == Mode::GradedRevLex) {
            std::uint32_t du = u.total_degree(), dv = v.total_degree();
            if (du != dv) return du > dv ? 1 : -1;
        }
        // merged (rank, exponent-in-u, exponent-in-v) triples, rank ascending
        std::vector<Cell> merged;
        merged.reserve(u.entries().size() + v.entries().size());
        for (const auto& [var, e] : u.entries()) merged.push_back({rank(var), e, 0});
        for (const auto& [var, e] : v.entries()) merged.push_back({rank(var), 0, e});
        std::sort(merged.begin(), merged.end(),
                  [](const Cell& a, const Cell& b) { return a.rank < b.rank; });
        std::size_t w = 0;
        for (std::size_t r = 0; r < merged.size(); ++r) {
            if (w > 0 && merged[w - 1].rank == merged[r].rank) {
                merged[w - 1].in_u += merged[r].in_u;
                merged[w - 1].in_v += merged[r].in_v;
            } else {
                merged[w++] = merged[r];
            }
        }
        merged.resize(w);

        if (mode_ == Mode::Lex) {
            for (const auto& c : merged)
                if (c.in_u != c.in_v) return c.in_u > c.in_v ? 1 : -1;
            return 0;
        }
        // graded revlex tie-break: scan from the lowest-ranked variable; the
        // monomial with the larger exponent there is the smaller one
        for (auto it = merged.rbegin(); it != merged.rend(); ++it)
            if (it->in_u != it->in_v) return it->in_u > it->in_v ? -1 : 1;
        return 0;
    }

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

private:
    enum class Builtin { LexR, RevLexS, Custom };

    struct Cell {
        std::uint64_t rank;
        std::uint32_t in_u;
        std::uint32_t in_v;
    };

    MonomialOrder(Builtin b, Mode m) : builtin_(b), mode_(m) {}

    std::uint64_t rank(VariableId v) const {
        switch (builtin_) {
            case Builtin::LexR:
                switch (v.kind()) {
                    case VarKind::X: return (0ull << 32) | v.first();
                    case VarKind::Y: return (1ull << 32) | v.first();
                    case VarKind::Rees: return 3ull << 32;
                    case VarKind::TEdge:
                        throw std::invalid_argument(
                            "edge variable " + v.str() + " is outside the LexR universe");
                }
                break;
            case Builtin::RevLexS:
                switch (v.kind()) {
                    case VarKind::TEdge:
                        return (0ull << 32) | (std::uint64_t(v.first()) << 16) | v.second();
                    case VarKind::X: return (1ull << 32) | v.first();
                    case VarKind::Y: return (2ull << 32) | v.first();
                    case VarKind::Rees: return 3ull << 32;
                }
                break;
            case Builtin::Custom: {
                auto it = table_.find(v.code());
                if (it == table_.end())
                    throw std::invalid_argument("variable " + v.str() +
                                                " is outside the order's universe");
                return it->second;
            }
        }
        throw std::logic_error("unreachable");
    }

    Builtin builtin_;
    Mode mode_;
    std::unordered_map<std::uint32_t, std::uint64_t> table_;
};

} // namespace linstrand
