#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linstrand/field.hpp"
#include "linstrand/graph.hpp"

namespace linstrand {

/// Binomial coefficient with the count-of-multisets conventions used
/// throughout: C(a,0) = 1 for every a (including a = -1), C(a,b) = 0 for
/// b < 0 or 0 <= a < b. Exact big-integer arithmetic via the multiplicative
/// falling-factorial formula.
inline BigInt binomial(long long a, long long b) {
    if (b < 0) return BigInt(0);
    if (b == 0) return BigInt(1);
    if (a < b) return BigInt(0);
    BigInt num(1), den(1);
    for (long long k = 1; k <= b; ++k) {
        num *= BigInt(a - b + k);
        den *= BigInt(k);
    }
    return num / den;
}

/// The same coefficients derived independently through the Pascal
/// recurrence; exposed so the two routes can be checked against each other.
inline BigInt binomial_pascal(long long a, long long b) {
    if (b < 0) return BigInt(0);
    if (b == 0) return BigInt(1);
    if (a < b) return BigInt(0);
    std::vector<BigInt> row(static_cast<std::size_t>(b) + 1, BigInt(0));
    row[0] = 1;
    for (long long r = 1; r <= a; ++r)
        for (long long c = std::min(r, b); c >= 1; --c)
            row[static_cast<std::size_t>(c)] += row[static_cast<std::size_t>(c) - 1];
    return row[static_cast<std::size_t>(b)];
}

/// The linear-strand Betti number of the m-th power of an edge ideal with e
/// generators and t triangles: C(e+m-i-1, m-i) * C(2t, i).
inline BigInt linear_strand_formula(unsigned long long e, unsigned long long t,
                                    unsigned m, unsigned i) {
    if (m == 0) throw std::invalid_argument("linear_strand_formula requires m >= 1");
    auto E = static_cast<long long>(e);
    auto T = static_cast<long long>(t);
    auto M = static_cast<long long>(m);
    auto I = static_cast<long long>(i);
    return binomial(E + M - I - 1, M - I) * binomial(2 * T, I);
}

/// The strand of the minimal free resolution of the m-th power, evaluated
/// from the graph. Entries run i = 0 .. m + 2t, with explicit zeros beyond
/// the support bound min(m, 2t).
struct StrandProfile {
    unsigned long long e = 0;
    unsigned long long t = 0;
    unsigned m = 1;
    std::vector<BigInt> entries;
};

inline StrandProfile strand_profile(const LabeledGraph& g, unsigned m) {
    if (m == 0) throw std::invalid_argument("strand_profile requires m >= 1");
    if (!is_closed_labeling(g))
        throw HypothesisError("strand_profile requires a closed graph (the triple "
                              "condition fails for this labeling)");
    if (has_induced_k4(g))
        throw HypothesisError("strand_profile requires a K4-free graph (an induced "
                              "K4 is present)");
    StrandProfile p;
    p.e = g.edge_count();
    p.t = triangles(g).size();
    p.m = m;
    unsigned top = m + 2 * static_cast<unsigned>(p.t);
    for (unsigned i = 0; i <= top; ++i)
        p.entries.push_back(linear_strand_formula(p.e, p.t, m, i));
    return p;
}

/// Ranks of the restricted Koszul-complex strand on r = 2t regular-sequence
/// elements over s = e presentation variables: for each homological index i,
/// C(2t, i) copies of a free module of rank C(e+m-i-1, m-i). Derived through
/// the Pascal route, independent of linear_strand_formula's arithmetic, and
/// truncated to the nonzero range i <= min(m, 2t).
inline std::vector<std::pair<unsigned, BigInt>> strand_complex_ranks(
    unsigned long long e, unsigned long long t, unsigned m) {
    if (m == 0) throw std::invalid_argument("strand_complex_ranks requires m >= 1");
    std::vector<std::pair<unsigned, BigInt>> out;
    auto top = static_cast<unsigned>(
        std::min<unsigned long long>(m, 2 * t));
    auto E = static_cast<long long>(e);
    auto T = static_cast<long long>(t);
    auto M = static_cast<long long>(m);
    for (unsigned i = 0; i <= top; ++i) {
        auto I = static_cast<long long>(i);
        BigInt copies = binomial_pascal(2 * T, I);
        BigInt rank = binomial_pascal(E + M - I - 1, M - I);
        out.emplace_back(i, copies * rank);
    }
    return out;
}

inline nlohmann::ordered_json json_number(const BigInt& v) {
    if (v <= BigInt(9007199254740992ll)) // exact as a JSON number
        return nlohmann::ordered_json(v.convert_to<std::uint64_t>());
    return nlohmann::ordered_json(v.str());
}

inline nlohmann::ordered_json strand_profile_json(const StrandProfile& p) {
    nlohmann::ordered_json j;
    j["e"] = p.e;
    j["t"] = p.t;
    j["m"] = p.m;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : p.entries) arr.push_back(json_number(v));
    j["strand"] = arr;
    return j;
}

} // namespace linstrand
