#include "cliquelab/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "cliquelab/cliques.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(AbsorbingStatus s) noexcept {
    switch (s) {
    case AbsorbingStatus::holds: return "holds";
    case AbsorbingStatus::fails: return "fails";
    case AbsorbingStatus::holds_on_sample: return "holds-on-sample";
    case AbsorbingStatus::unknown: return "unknown";
    }
    return "unknown";
}

Partition::Partition(int n, std::vector<VertexSet> parts) : part_of_(static_cast<std::size_t>(n), -1) {
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw domain_error("partition part " + std::to_string(p) + " is empty");
        parts[p] = make_vertex_set(parts[p], n);
        for (Vertex v : parts[p]) {
            if (part_of_[static_cast<std::size_t>(v)] >= 0)
                throw domain_error("vertex " + std::to_string(v) + " appears in two partition parts");
            part_of_[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < n; ++v)
        if (part_of_[static_cast<std::size_t>(v)] < 0)
            throw domain_error("vertex " + std::to_string(v) + " is not covered by the partition");
    parts_ = std::move(parts);
}

IndexVector index_vector(std::span<const Vertex> s, const Partition& p) {
    IndexVector out(static_cast<std::size_t>(p.k()), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= p.n()) throw range_error("vertex " + std::to_string(v) + " outside the partitioned range");
        ++out[static_cast<std::size_t>(p.part_of(v))];
    }
    return out;
}

IntegerLattice IntegerLattice::generated_by(int k, const std::vector<IndexVector>& generators) {
    IntegerLattice lat(k);
    std::vector<std::vector<std::int64_t>> work;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != k) throw domain_error("lattice generator has wrong length");
        work.emplace_back(g.begin(), g.end());
    }
    for (int c = 0; c < k; ++c) {
        const auto col = static_cast<std::size_t>(c);
        // Euclid on column c across the remaining rows.
        while (true) {
            std::size_t pivot = work.size();
            for (std::size_t i = 0; i < work.size(); ++i)
                if (work[i][col] != 0 && (pivot == work.size() || std::llabs(work[i][col]) < std::llabs(work[pivot][col])))
                    pivot = i;
            if (pivot == work.size()) break;
            bool reduced_any = false;
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (i == pivot || work[i][col] == 0) continue;
                const std::int64_t q = work[i][col] / work[pivot][col];
                for (std::size_t j = 0; j < work[i].size(); ++j) work[i][j] -= q * work[pivot][j];
                reduced_any = true;
            }
            bool others_zero = true;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (i != pivot && work[i][col] != 0) others_zero = false;
            if (others_zero || !reduced_any) {
                auto row = std::move(work[pivot]);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(pivot));
                if (row[col] < 0)
                    for (auto& e : row) e = -e;
                lat.basis_.push_back(std::move(row));
                break;
            }
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t r = 0; r < lat.basis_.size(); ++r) {
        const auto& row = lat.basis_[r];
        const auto col = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](std::int64_t e) { return e != 0; }) - row.begin());
        const std::int64_t piv = row[col];
        for (std::size_t above = 0; above < r; ++above) {
            auto& other = lat.basis_[above];
            std::int64_t q = other[col] / piv;
            if (other[col] - q * piv < 0) --q;
            if (q != 0)
                for (std::size_t j = 0; j < other.size(); ++j) other[j] -= q * row[j];
        }
    }
    return lat;
}

bool IntegerLattice::contains(std::span<const std::int64_t> v) const {
    if (static_cast<int>(v.size()) != k_) throw domain_error("lattice membership query has wrong length");
    std::vector<std::int64_t> w(v.begin(), v.end());
    for (const auto& row : basis_) {
        const auto col = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](std::int64_t e) { return e != 0; }) - row.begin());
        if (w[col] % row[col] != 0) return false;
        const std::int64_t q = w[col] / row[col];
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * row[j];
    }
    return std::all_of(w.begin(), w.end(), [](std::int64_t e) { return e == 0; });
}

bool IntegerLattice::contains(const IndexVector& v) const {
    std::vector<std::int64_t> w(v.begin(), v.end());
    return contains(std::span<const std::int64_t>(w));
}

std::vector<std::int64_t> transferral(int k, int i, int j) {
    if (i < 0 || j < 0 || i >= k || j >= k) throw range_error("transferral index outside [0, k)");
    if (i == j) throw domain_error("transferral needs distinct indices");
    std::vector<std::int64_t> d(static_cast<std::size_t>(k), 0);
    d[static_cast<std::size_t>(i)] += 1;
    d[static_cast<std::size_t>(j)] -= 1;
    return d;
}

std::vector<IndexVector> Census::vectors() const {
    std::vector<IndexVector> out;
    for (const auto& e : entries) out.push_back(e.index);
    return out;
}

Census index_census(const Graph& g, const Partition& p, int r, double beta, const Budget& budget) {
    if (p.n() != g.n()) throw domain_error("partition does not match the graph's vertex count");
    if (r < 1) throw domain_error("clique order r must be >= 1");
    const double scaled = beta * g.n();
    if (!(scaled >= 1.0 - 1e-9)) throw domain_error("beta * n must be >= 1");

    constexpr std::size_t kCandidateCap = 2'000'000;
    constexpr std::size_t kExactPackingLimit = 10'000;

    Census census;
    census.r = r;
    census.required = static_cast<std::size_t>(std::ceil(scaled - 1e-9));

    CliqueList list = enumerate_r_cliques(g, r, kCandidateCap);
    if (list.truncated) census.exact = false;
    std::map<IndexVector, std::vector<VertexSet>> groups;
    for (auto& c : list.cliques) groups[index_vector(c, p)].push_back(std::move(c));

    for (auto& [index, cliques] : groups) {
        if (cliques.size() < census.required) continue;
        PackingResult packing;
        if (cliques.size() <= kExactPackingLimit) {
            packing = max_set_packing(g.n(), cliques, census.required, budget);
        } else {
            packing = max_set_packing(g.n(), cliques, census.required, Budget::nodes(1));
        }
        if (packing.chosen.size() >= census.required) {
            CensusEntry entry{index, {}};
            for (std::size_t i : packing.chosen) entry.packing.push_back(cliques[i]);
            census.entries.push_back(std::move(entry));
        } else if (!packing.exact || cliques.size() > kExactPackingLimit) {
            census.exact = false;
            census.undecided.push_back(index);
        }
    }
    return census;
}

TransferralResult has_transferral(const std::vector<IndexVector>& census, int k, int i, int j) {
    const auto d = transferral(k, i, j);
    TransferralResult res;
    for (const auto& s : census) {
        if (static_cast<int>(s.size()) != k) throw domain_error("census vector has wrong length");
        for (const auto& t : census) {
            bool match = true;
            for (std::size_t c = 0; c < d.size() && match; ++c) match = s[c] - t[c] == d[c];
            if (match) {
                res.pairwise = true;
                res.s = s;
                res.t = t;
                break;
            }
        }
        if (res.pairwise) break;
    }
    res.in_lattice = IntegerLattice::generated_by(k, census).contains(std::span<const std::int64_t>(d));
    return res;
}

namespace {

Verdict factor_verdict(const Graph& g, const VertexSet& members, int r, const FactorOptions& options) {
    auto sub = induced_subgraph(g, members);
    switch (has_kr_factor(sub.graph, r, options).outcome) {
    case FactorOutcome::factor: return Verdict::yes;
    case FactorOutcome::no_factor: return Verdict::no;
    case FactorOutcome::unknown: return Verdict::unknown;
    }
    return Verdict::unknown;
}

VertexSet merge(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

Verdict verify_absorber(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> a, int r, int t,
                        const FactorOptions& options) {
    if (r < 2) throw domain_error("absorbers need r >= 2");
    if (t < 1) throw domain_error("absorbers need t >= 1");
    const VertexSet sset = make_vertex_set(s, g.n());
    const VertexSet aset = make_vertex_set(a, g.n());
    if (static_cast<int>(sset.size()) != r || sset.size() != s.size())
        throw domain_error("S must consist of exactly r distinct vertices");
    if (minus(sset, aset).size() != sset.size()) throw domain_error("A and S must be disjoint");
    if (static_cast<long long>(aset.size()) != static_cast<long long>(r) * t) return Verdict::no;

    const Verdict alone = factor_verdict(g, aset, r, options);
    if (alone == Verdict::no) return Verdict::no;
    const Verdict with_s = factor_verdict(g, merge(aset, sset), r, options);
    if (with_s == Verdict::no) return Verdict::no;
    return alone == Verdict::yes && with_s == Verdict::yes ? Verdict::yes : Verdict::unknown;
}

namespace {

// Enumerates S = Q u C_1 u ... u C_{s-1} with Q a K_{r-1} in N(u) and the C_i
// disjoint K_r's (ordered by least vertex); these are exactly the sets for
// which G[{u} u S] has a K_r-factor.
class ReachSearch {
public:
    ReachSearch(const Graph& g, Vertex u, Vertex v, int r, const FactorOptions& options, std::size_t cap)
        : g_(g), u_(u), v_(v), r_(r), options_(options), cap_(cap) {}

    std::optional<VertexSet> find(const VertexSet& free_vertices, int s) {
        examined_ = 0;
        capped_ = false;
        std::optional<VertexSet> found;
        const VertexSet nu = neighbors_within(g_, u_, free_vertices);
        for_each_clique_in(g_, nu, r_ - 1, [&](std::span<const Vertex> q) {
            VertexSet base(q.begin(), q.end());
            found = extend(base, minus(free_vertices, base), s - 1, -1);
            return !found && !capped_;
        });
        return found;
    }

    bool capped() const { return capped_; }
    bool saw_unknown() const { return unknown_; }

private:
    std::optional<VertexSet> extend(const VertexSet& chosen, const VertexSet& pool, int remaining, Vertex floor) {
        if (remaining == 0) {
            if (++examined_ > cap_) {
                capped_ = true;
                return std::nullopt;
            }
            return accept(chosen) ? std::optional<VertexSet>(chosen) : std::nullopt;
        }
        VertexSet above;
        for (Vertex w : pool)
            if (w > floor) above.push_back(w);
        std::optional<VertexSet> found;
        for_each_clique_in(g_, above, r_, [&](std::span<const Vertex> c) {
            VertexSet clique(c.begin(), c.end());
            found = extend(merge(chosen, clique), minus(pool, clique), remaining - 1, clique.front());
            return !found && !capped_;
        });
        return found;
    }

    bool accept(const VertexSet& s) {
        VertexSet with_v = s;
        with_v.insert(std::upper_bound(with_v.begin(), with_v.end(), v_), v_);
        const Verdict v_side = factor_verdict(g_, with_v, r_, options_);
        if (v_side != Verdict::yes) {
            if (v_side == Verdict::unknown) unknown_ = true;
            return false;
        }
        VertexSet with_u = s;
        with_u.insert(std::upper_bound(with_u.begin(), with_u.end(), u_), u_);
        const Verdict u_side = factor_verdict(g_, with_u, r_, options_);
        if (u_side == Verdict::unknown) unknown_ = true;
        return u_side == Verdict::yes;
    }

    const Graph& g_;
    Vertex u_, v_;
    int r_;
    const FactorOptions& options_;
    std::size_t cap_;
    std::size_t examined_ = 0;
    bool capped_ = false;
    bool unknown_ = false;
};

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t exact = 1;
    bool overflow = false;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (!overflow) {
            // exact * (n-k+i) / i stays integral at every step.
            unsigned __int128 wide = static_cast<unsigned __int128>(exact) * (n - k + i);
            wide /= i;
            if (wide > std::numeric_limits<std::uint64_t>::max()) overflow = true;
            else exact = static_cast<std::uint64_t>(wide);
        }
    }
    return overflow ? std::numeric_limits<std::uint64_t>::max() : exact;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

} // namespace

ReachableFamily reachable_packing(const Graph& g, Vertex u, Vertex v, int r, int t, const FactorOptions& options,
                                  std::size_t candidate_cap) {
    if (r < 2) throw domain_error("reachability needs r >= 2");
    if (t < 1) throw domain_error("reachability needs t >= 1");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw range_error("u, v must be vertices of the graph");
    if (u == v) throw domain_error("u and v must be distinct");

    ReachableFamily family;
    VertexSet free_vertices;
    for (int w = 0; w < g.n(); ++w)
        if (w != u && w != v) free_vertices.push_back(w);

    ReachSearch search(g, u, v, r, options, candidate_cap);
    for (int s = 1; s <= t; ++s) {
        while (static_cast<int>(free_vertices.size()) >= r * s - 1) {
            auto found = search.find(free_vertices, s);
            if (search.capped() || search.saw_unknown()) family.maximal = false;
            if (!found) break;
            free_vertices = minus(free_vertices, *found);
            family.sets.push_back(std::move(*found));
        }
    }
    return family;
}

AbsorbingCheck verify_absorbing_set(const Graph& g, std::span<const Vertex> a, int r, double xi,
                                    const AbsorbingSample& sample, const FactorOptions& options) {
    if (r < 2) throw domain_error("absorbing sets need r >= 2");
    if (!(xi >= 0.0 && xi <= 1.0)) throw domain_error("xi must lie in [0, 1]");
    const VertexSet aset = make_vertex_set(a, g.n());
    VertexSet outside;
    for (int w = 0; w < g.n(); ++w)
        if (!std::binary_search(aset.begin(), aset.end(), w)) outside.push_back(w);

    const auto max_r = std::min<std::size_t>(outside.size(), static_cast<std::size_t>(std::floor(xi * g.n() + 1e-9)));
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s <= max_r; ++s)
        if ((aset.size() + s) % static_cast<std::size_t>(r) == 0) sizes.push_back(s);

    AbsorbingCheck res;
    for (std::size_t s : sizes) res.qualifying = saturating_add(res.qualifying, saturating_binomial(outside.size(), s));

    bool unknown = false;
    auto check = [&](const VertexSet& rset) -> bool {
        ++res.checked;
        const Verdict verdict = factor_verdict(g, merge(aset, rset), r, options);
        if (verdict == Verdict::no) {
            res.status = AbsorbingStatus::fails;
            res.counterexample = rset;
            return false;
        }
        if (verdict == Verdict::unknown) unknown = true;
        return true;
    };

    if (res.qualifying <= sample.exhaustive_limit) {
        for (std::size_t s : sizes) {
            std::vector<std::size_t> idx(s);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                VertexSet rset;
                for (std::size_t i : idx) rset.push_back(outside[i]);
                if (!check(rset)) return res;
                // next combination
                std::size_t pos = s;
                while (pos > 0 && idx[pos - 1] == outside.size() - s + pos - 1) --pos;
                if (pos == 0) break;
                ++idx[pos - 1];
                for (std::size_t q = pos; q < s; ++q) idx[q] = idx[q - 1] + 1;
            }
        }
        res.status = unknown ? AbsorbingStatus::unknown : AbsorbingStatus::holds;
        return res;
    }

    Rng rng = make_rng(sample.seed);
    std::uniform_int_distribution<std::size_t> pick_size(0, sizes.size() - 1);
    VertexSet pool = outside;
    for (std::uint64_t k = 0; k < sample.samples; ++k) {
        const std::size_t s = sizes[pick_size(rng)];
        for (std::size_t i = 0; i < s; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        VertexSet rset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
        std::sort(rset.begin(), rset.end());
        if (!check(rset)) return res;
    }
    res.status = unknown ? AbsorbingStatus::unknown : AbsorbingStatus::holds_on_sample;
    return res;
}

} // namespace cliquelab
