#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cliquelab/budget.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

// Vertex-disjoint r-cliques. `covered` is the sorted union of the parts.
struct Tiling {
    int r = 0;
    std::vector<VertexSet> parts;
    VertexSet covered;
    // false when the tiling comes from a heuristic or a budget-limited search
    // and is not certified maximum.
    bool exact = true;
    SearchStats stats;

    std::size_t size() const { return parts.size(); }
};

// Checks disjointness, clique-ness and |covered| = r * |parts|.
bool is_valid_tiling(const Graph& g, const Tiling& t);

enum class FactorOutcome { factor, no_factor, unknown };

const char* to_string(FactorOutcome o) noexcept;

struct FactorCertificate {
    FactorOutcome outcome = FactorOutcome::unknown;
    Tiling tiling; // spanning when outcome == factor
    std::string note;
    std::size_t candidates = 0;
    SearchStats stats;
};

struct FactorOptions {
    Budget budget;
    // Candidate cliques beyond this count make the search report unknown.
    std::size_t max_candidates = 2'000'000;
};

// Exact cover over the r-cliques: branch on the uncovered vertex with the
// fewest live candidates (lowest index on ties).
FactorCertificate has_kr_factor(const Graph& g, int r, const FactorOptions& options = {});

// Largest n for which max_kr_tiling runs its exact branch-and-bound.
inline constexpr int kTilingExactLimit = 40;

Tiling max_kr_tiling(const Graph& g, int r, const Budget& budget = {});

// Greedy maximal family of disjoint K_r's with exactly `a` vertices in X and
// r - a in Y: an a-clique W in X, then an (r-a)-clique among W's common
// neighbours in Y.
Tiling cross_tiling(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y, int r, int a);

// Vertices outside W that lie in no r-clique of G - W. Empty means every
// such vertex is covered by a K_r.
VertexSet cover_check(const Graph& g, int r, std::span<const Vertex> w = {});

struct PackingResult {
    std::vector<std::size_t> chosen; // indices into the candidate list
    bool exact = true;               // false when the budget ran out
    SearchStats stats;
};

// Maximum family of pairwise-disjoint sets from `sets` (over vertices
// 0..n-1). Stops as soon as `target` sets are found when target > 0.
PackingResult max_set_packing(int n, const std::vector<VertexSet>& sets, std::size_t target, const Budget& budget);

} // namespace cliquelab
