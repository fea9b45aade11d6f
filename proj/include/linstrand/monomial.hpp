#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "linstrand/variables.hpp"

namespace linstrand {

/// A monomial as a sparse exponent vector: (variable, exponent) pairs sorted
/// by packed variable code, exponents strictly positive.
class Monomial {
public:
    using Entry = std::pair<VariableId, std::uint32_t>;

    Monomial() = default;

    explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
        normalize();
    }

    Monomial(std::initializer_list<Entry> entries)
        : entries_(entries) {
        normalize();
    }

    static Monomial one() { return Monomial(); }
    static Monomial var(VariableId v, std::uint32_t e = 1) {
        return Monomial({{v, e}});
    }

    bool is_one() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    std::uint32_t exponent(VariableId v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, VariableId w) { return e.first < w; });
        return (it != entries_.end() && it->first == v) ? it->second : 0;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [v, e] : entries_) d += e;
        return d;
    }

    /// Homological bidegree (T-degree, xy-degree) with deg T(i,j) = (1,2),
    /// deg x = deg y = (0,1) and the Rees variable of bidegree (1,0).
    std::pair<std::uint32_t, std::uint32_t> bidegree() const {
        std::uint32_t t = 0, xy = 0;
        for (const auto& [v, e] : entries_) {
            switch (v.kind()) {
                case VarKind::X:
                case VarKind::Y: xy += e; break;
                case VarKind::TEdge:
                    t += e;
                    xy += 2 * e;
                    break;
                case VarKind::Rees: t += e; break;
            }
        }
        return {t, xy};
    }

    /// Total x-degree, counting each T(i,j) once (its image under the Rees
    /// presentation has x-degree one in every term, in both variants).
    std::uint32_t x_degree() const {
        std::uint32_t d = 0;
        for (const auto& [v, e] : entries_)
            if (v.kind() == VarKind::X || v.kind() == VarKind::TEdge) d += e;
        return d;
    }

    /// Accumulates the vertex multidegree: x_v and y_v count vertex v once
    /// per exponent, T(i,j) counts both endpoints. Preserved by the Rees
    /// presentation map in both variants, which makes it usable as a
    /// block-diagonalization key for exact linear algebra.
    void add_vertex_multidegree(std::vector<std::uint32_t>& acc) const {
        for (const auto& [v, e] : entries_) {
            switch (v.kind()) {
                case VarKind::X:
                case VarKind::Y: acc[v.first()] += e; break;
                case VarKind::TEdge:
                    acc[v.first()] += e;
                    acc[v.second()] += e;
                    break;
                case VarKind::Rees: break;
            }
        }
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<Entry> out;
        out.reserve(entries_.size() + o.entries_.size());
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() && b != o.entries_.end()) {
            if (a->first < b->first) out.push_back(*a++);
            else if (b->first < a->first) out.push_back(*b++);
            else {
                out.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        out.insert(out.end(), a, entries_.end());
        out.insert(out.end(), b, o.entries_.end());
        Monomial m;
        m.entries_ = std::move(out);
        return m;
    }

    bool divides(const Monomial& o) const {
        auto a = entries_.begin();
        auto b = o.entries_.begin();
        while (a != entries_.end()) {
            while (b != o.entries_.end() && b->first < a->first) ++b;
            if (b == o.entries_.end() || b->first != a->first || b->second < a->second)
                return false;
            ++a;
        }
        return true;
    }

    /// o / *this, when it divides.
    std::optional<Monomial> divide_into(const Monomial& o) const {
        if (!divides(o)) return std::nullopt;
        std::vector<Entry> out;
        out.reserve(o.entries_.size());
        auto a = entries_.begin();
        for (const auto& e : o.entries_) {
            std::uint32_t sub = 0;
            if (a != entries_.end() && a->first == e.first) {
                sub = a->second;
                ++a;
            }
            if (e.second > sub) out.emplace_back(e.first, e.second - sub);
        }
        Monomial m;
        m.entries_ = std::move(out);
        return m;
    }

    static Monomial lcm(const Monomial& u, const Monomial& v) {
        std::vector<Entry> out;
        auto a = u.entries_.begin(), b = v.entries_.begin();
        while (a != u.entries_.end() && b != v.entries_.end()) {
            if (a->first < b->first) out.push_back(*a++);
            else if (b->first < a->first) out.push_back(*b++);
            else {
                out.emplace_back(a->first, std::max(a->second, b->second));
                ++a;
                ++b;
            }
        }
        out.insert(out.end(), a, u.entries_.end());
        out.insert(out.end(), b, v.entries_.end());
        Monomial m;
        m.entries_ = std::move(out);
        return m;
    }

    static Monomial gcd(const Monomial& u, const Monomial& v) {
        std::vector<Entry> out;
        auto a = u.entries_.begin(), b = v.entries_.begin();
        while (a != u.entries_.end() && b != v.entries_.end()) {
            if (a->first < b->first) ++a;
            else if (b->first < a->first) ++b;
            else {
                out.emplace_back(a->first, std::min(a->second, b->second));
                ++a;
                ++b;
            }
        }
        Monomial m;
        m.entries_ = std::move(out);
        return m;
    }

    static bool coprime(const Monomial& u, const Monomial& v) {
        auto a = u.entries_.begin(), b = v.entries_.begin();
        while (a != u.entries_.end() && b != v.entries_.end()) {
            if (a->first < b->first) ++a;
            else if (b->first < a->first) ++b;
            else return false;
        }
        return true;
    }

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return entries_ != o.entries_; }

    /// Structural comparison by packed codes; a fixed total order used for
    /// canonical term storage, unrelated to monomial orders.
    static int structural_compare(const Monomial& u, const Monomial& v) {
        auto a = u.entries_.begin(), b = v.entries_.begin();
        while (a != u.entries_.end() && b != v.entries_.end()) {
            if (a->first != b->first) return a->first < b->first ? 1 : -1;
            if (a->second != b->second) return a->second > b->second ? 1 : -1;
            ++a;
            ++b;
        }
        if (a != u.entries_.end()) return 1;
        if (b != v.entries_.end()) return -1;
        return 0;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& [v, e] : entries_) {
            h = (h ^ v.code()) * 1099511628211ull;
            h = (h ^ e) * 1099511628211ull;
        }
        return h;
    }

private:
    void normalize() {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::vector<Entry> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) {
            if (e.second == 0) continue;
            if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
            else out.push_back(e);
        }
        entries_ = std::move(out);
    }

    std::vector<Entry> entries_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace linstrand
