#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab {

struct CliqueList {
    int r = 0;
    // Each clique sorted ascending; list in lexicographic order.
    std::vector<VertexSet> cliques;
    bool truncated = false;
};

// All r-cliques of g in lexicographic order. With a cap, stops after `cap`
// cliques and sets `truncated` if more exist.
CliqueList enumerate_r_cliques(const Graph& g, int r, std::optional<std::size_t> cap = std::nullopt);

// Visits the size-`size` cliques whose vertices all lie in `pool` (sorted),
// lexicographically. The visitor returns false to stop early. Returns false
// iff the visit was stopped.
bool for_each_clique_in(const Graph& g, std::span<const Vertex> pool, int size,
                        const std::function<bool(std::span<const Vertex>)>& visit);

// First size-`size` clique inside `pool` (sorted), if any.
std::optional<VertexSet> find_clique_in(const Graph& g, std::span<const Vertex> pool, int size);

struct KlFreeResult {
    bool free = true;
    VertexSet witness; // a K_l when !free
};

KlFreeResult is_kl_free(const Graph& g, int ell);

// Sorted intersection of N(v) with a sorted pool.
VertexSet neighbors_within(const Graph& g, Vertex v, std::span<const Vertex> pool);

} // namespace cliquelab
