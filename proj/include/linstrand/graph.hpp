#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linstrand/errors.hpp"

namespace linstrand {

using Edge = std::pair<unsigned, unsigned>; // always i < j
using Triangle = std::array<unsigned, 3>;   // sorted
using FourClique = std::array<unsigned, 4>; // sorted

/// A simple undirected graph on labeled vertices 0..n-1. Immutable after
/// construction; the constructor enforces no loops, set semantics on edges
/// and in-range endpoints.
class LabeledGraph {
public:
    LabeledGraph() = default;

    LabeledGraph(unsigned n, std::vector<Edge> edges) : n_(n) {
        for (auto& [i, j] : edges) {
            if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
            if (i > j) std::swap(i, j);
            if (j >= n)
                throw std::invalid_argument("edge endpoint " + std::to_string(j) +
                                            " out of range for n=" + std::to_string(n));
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) +
                                        "," + std::to_string(dup->second) + "}");
        edges_ = std::move(edges);
        adj_.assign(n_, std::vector<bool>(n_, false));
        for (const auto& [i, j] : edges_) adj_[i][j] = adj_[j][i] = true;
    }

    unsigned n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(unsigned i, unsigned j) const {
        return i < n_ && j < n_ && i != j && adj_[i][j];
    }

    bool operator==(const LabeledGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    unsigned n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<bool>> adj_;
};

/// Closedness via the triple condition: for all i < j < k, an edge {i,k}
/// forces both {i,j} and {j,k}.
inline bool is_closed_labeling(const LabeledGraph& g) {
    unsigned n = g.n();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = i + 2; k < n; ++k) {
            if (!g.has_edge(i, k)) continue;
            for (unsigned j = i + 1; j < k; ++j)
                if (!g.has_edge(i, j) || !g.has_edge(j, k)) return false;
        }
    return true;
}

/// Closedness via the pairwise-edge definition: for edges {i,j} and {k,l}
/// with i < j and k < l, i = k forces {j,l} and j = l forces {i,k}.
/// Strictly weaker than the triple condition on graphs with label gaps
/// (e.g. the lone edge {0,2} on three vertices); the two agree on
/// connected graphs.
inline bool is_closed_pairwise(const LabeledGraph& g) {
    const auto& es = g.edges();
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            const auto& [i, j] = es[a];
            const auto& [k, l] = es[b];
            if (i == k && j != l && !g.has_edge(j, l)) return false;
            if (j == l && i != k && !g.has_edge(i, k)) return false;
        }
    return true;
}

inline LabeledGraph relabel(const LabeledGraph& g, const std::vector<unsigned>& perm) {
    if (perm.size() != g.n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [i, j] : g.edges())
        edges.emplace_back(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
    return LabeledGraph(g.n(), std::move(edges));
}

/// Searches for a relabeling that satisfies the triple condition, by
/// exhaustive permutation search with pruning. Returns the identity when the
/// input already qualifies. Capped at n <= 10.
inline std::optional<std::vector<unsigned>> find_closed_labeling(const LabeledGraph& g) {
    unsigned n = g.n();
    if (n > 10)
        throw SizeLimitError("find_closed_labeling is capped at n <= 10, got n=" +
                             std::to_string(n));
    if (is_closed_labeling(g)) {
        std::vector<unsigned> id(n);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }

    // slot[k] = old vertex receiving new label k; prefix feasibility checks
    // every triple whose largest label is the one just assigned
    std::vector<unsigned> slot(n, 0);
    std::vector<bool> used(n, false);
    auto feasible = [&](unsigned k) {
        for (unsigned i = 0; i + 1 < k; ++i)
            if (g.has_edge(slot[i], slot[k]))
                for (unsigned j = i + 1; j < k; ++j)
                    if (!g.has_edge(slot[i], slot[j]) || !g.has_edge(slot[j], slot[k]))
                        return false;
        return true;
    };
    std::vector<unsigned> result;
    auto search = [&](auto&& self, unsigned k) -> bool {
        if (k == n) return true;
        for (unsigned v = 0; v < n; ++v) {
            if (used[v]) continue;
            slot[k] = v;
            used[v] = true;
            if (feasible(k) && self(self, k + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    std::vector<unsigned> perm(n);
    for (unsigned k = 0; k < n; ++k) perm[slot[k]] = k;
    return perm;
}

/// Maximal cliques covering the edges of a closed graph, sorted ascending by
/// (least vertex, greatest vertex); rejects non-closed inputs because the
/// 1-based clique indexing downstream depends on that hypothesis.
struct CliqueList {
    std::vector<std::vector<unsigned>> cliques;
};

namespace detail {

inline void bron_kerbosch(std::uint32_t r, std::uint32_t p, std::uint32_t x,
                          const std::vector<std::uint32_t>& adj,
                          std::vector<std::uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint32_t px = p | x;
    unsigned pivot = 0;
    int best = -1;
    for (unsigned v = 0; v < adj.size(); ++v) {
        if (!(px >> v & 1)) continue;
        int cnt = __builtin_popcount(p & adj[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    std::uint32_t cand = p & ~adj[pivot];
    while (cand) {
        unsigned v = unsigned(__builtin_ctz(cand));
        cand &= cand - 1;
        bron_kerbosch(r | (1u << v), p & adj[v], x & adj[v], adj, out);
        p &= ~(1u << v);
        x |= 1u << v;
    }
}

} // namespace detail

inline CliqueList maximal_cliques(const LabeledGraph& g) {
    if (!is_closed_labeling(g))
        throw HypothesisError("maximal_cliques requires a closed graph");
    unsigned n = g.n();
    if (n > 31) throw SizeLimitError("maximal_cliques is capped at n <= 31");
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [i, j] : g.edges()) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    std::vector<std::uint32_t> masks;
    if (n > 0)
        detail::bron_kerbosch(0, n == 32 ? ~0u : (1u << n) - 1, 0, adj, masks);
    CliqueList out;
    for (auto m : masks) {
        std::vector<unsigned> c;
        for (unsigned v = 0; v < n; ++v)
            if (m >> v & 1) c.push_back(v);
        out.cliques.push_back(std::move(c));
    }
    std::sort(out.cliques.begin(), out.cliques.end(),
              [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
                  return std::make_tuple(a.front(), a.back(), a) <
                         std::make_tuple(b.front(), b.back(), b);
              });
    return out;
}

/// 1-based index of the first listed maximal clique containing both
/// endpoints of `e`.
inline unsigned clique_index(const CliqueList& cliques, Edge e) {
    for (std::size_t a = 0; a < cliques.cliques.size(); ++a) {
        const auto& c = cliques.cliques[a];
        bool fi = std::binary_search(c.begin(), c.end(), e.first);
        bool se = std::binary_search(c.begin(), c.end(), e.second);
        if (fi && se) return unsigned(a + 1);
    }
    throw std::invalid_argument("edge {" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + "} lies in no listed clique");
}

inline unsigned clique_index(const LabeledGraph& g, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("edge {" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + "} not in graph");
    return clique_index(maximal_cliques(g), e);
}

inline std::vector<Triangle> triangles(const LabeledGraph& g) {
    std::vector<Triangle> out;
    unsigned n = g.n();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (unsigned k = j + 1; k < n; ++k)
                if (g.has_edge(i, k) && g.has_edge(j, k)) out.push_back({i, j, k});
        }
    return out; // lexicographic by construction
}

inline std::vector<FourClique> four_cliques(const LabeledGraph& g) {
    std::vector<FourClique> out;
    for (const auto& [i, j, k] : triangles(g))
        for (unsigned l = k + 1; l < g.n(); ++l)
            if (g.has_edge(i, l) && g.has_edge(j, l) && g.has_edge(k, l))
                out.push_back({i, j, k, l});
    return out;
}

inline bool has_induced_k4(const LabeledGraph& g) {
    for (const auto& [i, j, k] : triangles(g))
        for (unsigned l = k + 1; l < g.n(); ++l)
            if (g.has_edge(i, l) && g.has_edge(j, l) && g.has_edge(k, l)) return true;
    return false;
}

inline bool is_connected(const LabeledGraph& g) {
    unsigned n = g.n();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<unsigned> stack{0};
    seen[0] = true;
    unsigned count = 1;
    while (!stack.empty()) {
        unsigned v = stack.back();
        stack.pop_back();
        for (unsigned w = 0; w < n; ++w)
            if (g.has_edge(v, w) && !seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

/// Every labeled graph on n vertices that is closed and K4-free, connected
/// graphs first; within each class ordered by ascending edge bitmask over
/// the lexicographic list of vertex pairs. Capped at n <= 7.
inline std::vector<LabeledGraph> enumerate_closed_k4free(unsigned n) {
    if (n > 7)
        throw SizeLimitError("enumerate_closed_k4free is capped at n <= 7, got n=" +
                             std::to_string(n));
    std::vector<Edge> pairs;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<LabeledGraph> connected, rest;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
        std::array<std::uint8_t, 8> adj{};
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) {
                adj[pairs[b].first] |= std::uint8_t(1u << pairs[b].second);
                adj[pairs[b].second] |= std::uint8_t(1u << pairs[b].first);
            }
        bool ok = true;
        for (unsigned i = 0; ok && i < n; ++i)
            for (unsigned k = i + 2; ok && k < n; ++k) {
                if (!(adj[i] >> k & 1)) continue;
                for (unsigned j = i + 1; j < k; ++j)
                    if (!(adj[i] >> j & 1) || !(adj[j] >> k & 1)) {
                        ok = false;
                        break;
                    }
            }
        if (!ok) continue;
        for (unsigned i = 0; ok && i < n; ++i)
            for (unsigned j = i + 1; ok && j < n; ++j) {
                if (!(adj[i] >> j & 1)) continue;
                for (unsigned k = j + 1; ok && k < n; ++k) {
                    if (!(adj[i] >> k & 1) || !(adj[j] >> k & 1)) continue;
                    for (unsigned l = k + 1; l < n; ++l)
                        if ((adj[i] >> l & 1) && (adj[j] >> l & 1) && (adj[k] >> l & 1)) {
                            ok = false;
                            break;
                        }
                }
            }
        if (!ok) continue;
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        LabeledGraph g(n, std::move(edges));
        (is_connected(g) ? connected : rest).push_back(std::move(g));
    }
    connected.insert(connected.end(), rest.begin(), rest.end());
    return connected;
}

/// Edge-list text format: one edge per line as two whitespace-separated
/// labels, `#` comments and blank lines ignored, optional header `n <count>`
/// overriding the inferred vertex count.
inline LabeledGraph parse_edge_list(std::istream& in, bool one_indexed = false) {
    std::vector<Edge> edges;
    std::optional<unsigned> n_header;
    long long max_label = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "n") {
            long long n;
            if (!(ls >> n) || n < 0)
                throw ParseError("expected a vertex count after 'n'", lineno);
            n_header = unsigned(n);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after header", lineno);
            continue;
        }
        long long a, b;
        try {
            a = std::stoll(tok);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + tok + "'", lineno);
        }
        if (!(ls >> b)) throw ParseError("expected two labels per edge line", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens after edge", lineno);
        long long base = one_indexed ? 1 : 0;
        if (a < base || b < base)
            throw ParseError("vertex label below " + std::to_string(base), lineno);
        a -= base;
        b -= base;
        if (a == b) throw ParseError("loop at vertex " + std::to_string(a + base), lineno);
        edges.emplace_back(unsigned(std::min(a, b)), unsigned(std::max(a, b)));
        max_label = std::max({max_label, a, b});
    }
    unsigned n = n_header ? *n_header : unsigned(max_label + 1);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    try {
        return LabeledGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline LabeledGraph parse_edge_list(const std::string& text, bool one_indexed = false) {
    std::istringstream in(text);
    return parse_edge_list(in, one_indexed);
}

inline std::string render_edge_list(const LabeledGraph& g, bool one_indexed = false) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    unsigned base = one_indexed ? 1 : 0;
    for (const auto& [i, j] : g.edges())
        out += std::to_string(i + base) + " " + std::to_string(j + base) + "\n";
    return out;
}

} // namespace linstrand
