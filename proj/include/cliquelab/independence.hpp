#pragma once

#include <cstdint>

#include "cliquelab/budget.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

// Largest n accepted by the exact l-independence solver.
inline constexpr int kAlphaExactLimit = 30;

// alpha_l(G): order of a largest induced K_l-free subgraph.
struct AlphaResult {
    int lower = 0;
    int upper = 0;
    VertexSet witness; // induces a K_l-free subgraph of size `lower`
    bool exact = false;
    SearchStats stats;

    int value() const { return lower; }
};

// Branch-and-bound on the vertices of a violating K_l. n <= kAlphaExactLimit.
AlphaResult alpha_ell_exact(const Graph& g, int ell);

struct AlphaThreshold {
    bool at_most = true;
    VertexSet witness; // K_l-free set of size > m when !at_most
    SearchStats stats;
};

// Decides alpha_l(G) <= m, cutting every branch that cannot exceed m.
AlphaThreshold alpha_ell_at_most(const Graph& g, int ell, int m);

struct AlphaEffort {
    int restarts = 16;
    std::uint64_t seed = 0;
};

// Randomized greedy lower bound; upper bound n minus a greedy packing of
// disjoint K_l's (each one forces a deletion).
AlphaResult alpha_ell_bounds(const Graph& g, int ell, const AlphaEffort& effort = {});

} // namespace cliquelab
