#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab {

enum class Family { multipartite, figure1, blowup, pruned, core_search, random_mindeg };

const char* to_string(Family f) noexcept;
Family parse_family(const std::string& name);

// Parameters that regenerate an instance. Fields a family does not use stay
// at their defaults.
struct ConstructionSpec {
    Family family = Family::multipartite;
    int n = 0;
    int r = 0;
    int ell = 0;
    double x = 0.0;
    double rho = 0.0; // assumed Ramsey-Turan density, supplied by the caller
    std::uint64_t seed = 0;
    std::vector<int> sizes;
    std::string core_recipe;
    double epsilon = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    std::string source_graph6; // input graph for blowup / pruned / figure1 core
};

struct NamedSet {
    std::string name;
    VertexSet members;
};

struct LabeledInstance {
    Graph graph;
    std::vector<NamedSet> designated;
    ConstructionSpec provenance;
    std::map<std::string, double> metrics;

    const VertexSet* find(const std::string& name) const;
};

LabeledInstance complete_multipartite(const std::vector<int>& sizes);

// x = 1 / (2 - rho), the degree-optimal choice for the figure-1 graph.
double default_x(double rho);

// floor(x n), tolerant of x n landing a hair below an integer.
int core_size(int n, double x);

// Apex 0 joined to the core (vertices 1..m); the remaining n-m-1 vertices
// form a clique complete to the core and non-adjacent to the apex.
// Refuses cores that contain a K_{r-1}.
LabeledInstance figure1(int n, int r, double x, const Graph& core);

// Balanced complete r-partite graph on n vertices (part sizes differ by <= 1).
LabeledInstance balanced_multipartite(int n, int parts);

// Starts from K_n and deletes edges in seeded random order whenever both ends
// keep degree >= ceil(fraction * n).
LabeledInstance random_min_degree(int n, double fraction, std::uint64_t seed);

// K_{r-1}-free cores for figure1:
//   edgeless  - no edges
//   turan     - balanced complete (r-2)-partite graph
//   c5-blowup - C_5 with every vertex blown up (triangle-free, for r >= 4)
//   random    - seeded random greedy K_{r-1}-free process
Graph figure1_core(const std::string& recipe, int m, int r, std::uint64_t seed);

// Every vertex becomes an independent class of size ceil(n/n') or
// floor(n/n'); classes of adjacent vertices are completely joined. The random
// choice of large classes is retried until delta(result) >= (delta(g)/n' - eps) n.
LabeledInstance blow_up(const Graph& g, int n, double epsilon, std::uint64_t seed, int max_retries = 256);

struct PruneResult {
    LabeledInstance instance; // survivor subgraph, relabeled 0..n'-1
    VertexSet survivors;      // host labels
    std::vector<Vertex> deletion_order;
    // n >= 8/eta: both conclusions are guaranteed and a violation is a bug.
    bool guaranteed = false;
};

// Deletes a minimum-degree vertex (lowest index first) while one has degree
// below (delta - eta)|G_i|.
PruneResult degree_prune(const Graph& g, double delta, double eta);

struct CoreSearchParams {
    int m = 0;
    int ell = 2;
    int forbid = 3;
    double target_mindeg = 0.0;
    int alpha_cap = -1; // < 0: no cap
    std::uint64_t seed = 0;
    std::uint64_t iterations = 20000;
    double initial_temperature = 1.0;
    double cooling = 0.9995;
};

struct CoreSearchResult {
    bool success = false;
    LabeledInstance instance; // best graph seen, verified when success
    int min_degree = 0;
    int alpha = 0;        // exact alpha_ell of the returned graph
    double energy = 0.0;  // 0 on success
    std::uint64_t iterations = 0;
    std::string reason;
};

// Simulated annealing over single-edge toggles that never create K_forbid.
// Energy: total degree deficit below ceil(target * m), plus the excess of
// alpha_ell over the cap.
CoreSearchResult kfree_core_search(const CoreSearchParams& params);

} // namespace cliquelab
