#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquelab/budget.hpp"
#include "cliquelab/factor.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

// Ordered vertex partition V_1..V_k of 0..n-1 (disjoint, covering, nonempty parts).
class Partition {
public:
    Partition(int n, std::vector<VertexSet> parts);

    int n() const { return static_cast<int>(part_of_.size()); }
    int k() const { return static_cast<int>(parts_.size()); }
    const std::vector<VertexSet>& parts() const { return parts_; }
    int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }

private:
    std::vector<VertexSet> parts_;
    std::vector<int> part_of_;
};

using IndexVector = std::vector<int>;

// coords[i] = |S intersect V_i|.
IndexVector index_vector(std::span<const Vertex> s, const Partition& p);

// Subgroup of Z^k generated by a set of integer vectors, kept in row-echelon
// (Hermite-style) form so membership is decided by exact reduction.
class IntegerLattice {
public:
    explicit IntegerLattice(int k) : k_(k) {}
    static IntegerLattice generated_by(int k, const std::vector<IndexVector>& generators);

    int dimension() const { return k_; }
    // Rows have strictly increasing pivot columns with positive pivots, and
    // entries above each pivot reduced into [0, pivot).
    const std::vector<std::vector<std::int64_t>>& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }

    bool contains(std::span<const std::int64_t> v) const;
    bool contains(const IndexVector& v) const;

private:
    int k_;
    std::vector<std::vector<std::int64_t>> basis_;
};

std::vector<std::int64_t> transferral(int k, int i, int j);

struct CensusEntry {
    IndexVector index;
    std::vector<VertexSet> packing; // >= required disjoint r-cliques of this index
};

struct Census {
    int r = 0;
    std::size_t required = 0; // ceil(beta n)
    std::vector<CensusEntry> entries; // sorted by index vector
    // false if some index vector was undecided (greedy fell short and the
    // exact packing was skipped or ran out of budget).
    bool exact = true;
    std::vector<IndexVector> undecided;

    std::vector<IndexVector> vectors() const;
};

// I_P^beta(G): r-vectors realised by >= ceil(beta n) disjoint K_r's.
Census index_census(const Graph& g, const Partition& p, int r, double beta, const Budget& budget = {});

struct TransferralResult {
    bool pairwise = false; // some s, t in the census with s - t = u_i - u_j
    IndexVector s, t;
    bool in_lattice = false; // u_i - u_j in the lattice generated by the census
};

// i, j are 0-based part indices.
TransferralResult has_transferral(const std::vector<IndexVector>& census, int k, int i, int j);

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v) noexcept;

// |A| = r t and both G[A] and G[A u S] have K_r-factors.
Verdict verify_absorber(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> a, int r, int t,
                        const FactorOptions& options = {});

struct ReachableFamily {
    std::vector<VertexSet> sets;
    // false when a candidate cap or factor-search budget cut the greedy
    // extension short, so the family may not be maximal.
    bool maximal = true;
};

// Greedy family of disjoint K_r-reachable sets for {u, v} of sizes r s - 1,
// s = 1..t, each confirmed by two factor searches.
ReachableFamily reachable_packing(const Graph& g, Vertex u, Vertex v, int r, int t, const FactorOptions& options = {},
                                  std::size_t candidate_cap = 100000);

enum class AbsorbingStatus { holds, fails, holds_on_sample, unknown };

const char* to_string(AbsorbingStatus s) noexcept;

struct AbsorbingSample {
    std::uint64_t exhaustive_limit = 20000; // enumerate every R when the count is at most this
    std::uint64_t samples = 2000;
    std::uint64_t seed = 0;
};

struct AbsorbingCheck {
    AbsorbingStatus status = AbsorbingStatus::holds;
    VertexSet counterexample; // R when status == fails
    std::uint64_t checked = 0;
    std::uint64_t qualifying = 0; // number of admissible R (saturates at UINT64_MAX)
};

// Every R outside A with |R| <= xi n and r | |A u R| must leave G[A u R]
// with a K_r-factor.
AbsorbingCheck verify_absorbing_set(const Graph& g, std::span<const Vertex> a, int r, double xi,
                                    const AbsorbingSample& sample = {}, const FactorOptions& options = {});

} // namespace cliquelab
