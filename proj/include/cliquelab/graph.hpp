#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquelab/bits.hpp"

namespace cliquelab {

using Vertex = int;
// Sorted, duplicate-free list of vertex indices within a host graph.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxGeneratedVertices = 100000;

// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
// Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Duplicate edges are collapsed. Throws on self-loops and out-of-range ends.
    Graph(int n, std::span<const Edge> edges);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph empty(int n) { return Graph(n); }
    static Graph petersen();

    int n() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    std::vector<Edge> edges() const;

    // Neighborhood rows as bitsets of width n().
    std::vector<Bits> adjacency_bits() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::int64_t edges_ = 0;
};

enum class GraphFormat { graph6, edge_list };

GraphFormat parse_format(std::string_view name);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string to_graph6(const Graph& g);
// Writes a header line with the vertex count followed by one "u v" per edge.
std::string to_edge_list(const Graph& g);
std::string serialize(const Graph& g, GraphFormat format);

int min_degree(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // original[i] is the host vertex that became vertex i.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

// Sorts, dedups and range-checks a vertex list against n.
VertexSet make_vertex_set(std::span<const Vertex> members, int n);

bool is_clique(const Graph& g, std::span<const Vertex> s);

} // namespace cliquelab
