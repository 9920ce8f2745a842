#pragma once

// Independent brute-force oracles. None of these call into the library's
// search code; they only use Graph for adjacency lookups.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cliquelab/graph.hpp"

namespace oracle {

using cliquelab::Edge;
using cliquelab::Graph;
using cliquelab::VertexSet;

inline Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Graph whose edge set is the bits of `mask` over the pairs (u < v) in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), edges);
}

// graph6 written straight from the format description.
inline std::string graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out += char(63 + n);
    } else {
        out += char(126);
        for (int s : {12, 6, 0}) out += char(63 + ((n >> s) & 63));
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
        out += char(63 + v);
    }
    return out;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!g.adjacent(s[a], s[b])) return false;
    return true;
}

// Every size-k subset of `pool`, in lexicographic order.
inline void subsets(const VertexSet& pool, int k, const std::function<void(const VertexSet&)>& visit) {
    VertexSet cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            visit(cur);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline VertexSet all_vertices(int n) {
    VertexSet v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

inline std::vector<VertexSet> cliques(const Graph& g, int r) {
    std::vector<VertexSet> out;
    subsets(all_vertices(g.n()), r, [&](const VertexSet& s) {
        if (is_clique(g, s)) out.push_back(s);
    });
    return out;
}

inline bool has_clique(const Graph& g, const VertexSet& within, int r) {
    bool found = false;
    subsets(within, r, [&](const VertexSet& s) {
        if (!found && is_clique(g, s)) found = true;
    });
    return found;
}

// Largest induced K_ell-free subgraph by scanning every subset.
inline int alpha(const Graph& g, int ell) {
    const int n = g.n();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (!has_clique(g, s, ell)) best = size;
    }
    return best;
}

// Partition of all vertices into r-cliques, by trying every r-set that
// contains the lowest free vertex.
inline bool has_factor(const Graph& g, int r) {
    const int n = g.n();
    if (n % r) return false;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool()> rec = [&]() -> bool {
        int first = -1;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)]) {
                first = v;
                break;
            }
        if (first < 0) return true;
        VertexSet rest;
        for (int v = first + 1; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
        bool ok = false;
        subsets(rest, r - 1, [&](const VertexSet& s) {
            if (ok) return;
            VertexSet part = s;
            part.insert(part.begin(), first);
            if (!is_clique(g, part)) return;
            for (int v : part) used[static_cast<std::size_t>(v)] = 1;
            ok = rec();
            for (int v : part) used[static_cast<std::size_t>(v)] = 0;
        });
        return ok;
    };
    return rec();
}

// Maximum number of pairwise-disjoint sets, by include/exclude recursion.
inline std::size_t max_disjoint(const std::vector<VertexSet>& sets, int n) {
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::size_t best = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t taken) {
        best = std::max(best, taken);
        if (i == sets.size() || taken + (sets.size() - i) <= best) return;
        bool free = true;
        for (int v : sets[i]) free = free && !used[static_cast<std::size_t>(v)];
        if (free) {
            for (int v : sets[i]) used[static_cast<std::size_t>(v)] = 1;
            rec(i + 1, taken + 1);
            for (int v : sets[i]) used[static_cast<std::size_t>(v)] = 0;
        }
        rec(i + 1, taken);
    };
    rec(0, 0);
    return best;
}

inline int max_tiling(const Graph& g, int r) {
    return static_cast<int>(max_disjoint(cliques(g, r), g.n()));
}

inline int min_degree(const Graph& g) {
    int best = g.n();
    for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

} // namespace oracle
