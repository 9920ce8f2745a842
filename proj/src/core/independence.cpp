#include "cliquelab/independence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cliquelab/cliques.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

namespace {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask bit(int v) { return Mask{1} << v; }

VertexSet mask_to_set(Mask m) {
    VertexSet out;
    for (; m; m &= m - 1) out.push_back(lowest(m));
    return out;
}

// Exact search over "kept" vertex masks. A K_l inside the kept set must lose
// one of its unforced vertices; branch i deletes the i-th unforced vertex and
// forces the earlier ones to stay.
class AlphaSearch {
public:
    AlphaSearch(const Graph& g, int ell) : n_(g.n()), ell_(ell), adj_(static_cast<std::size_t>(g.n()), 0) {
        for (int v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= bit(w);
    }

    // Searches for a K_l-free set of size > floor; stops at the first one when
    // `first_only`, otherwise maximizes.
    void run(int floor, Mask floor_witness, bool first_only) {
        best_ = floor;
        best_set_ = floor_witness;
        first_only_ = first_only;
        const Mask all = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
        branch(all, 0);
    }

    int best() const { return best_; }
    Mask best_set() const { return best_set_; }
    std::uint64_t nodes() const { return nodes_; }
    bool improved() const { return improved_; }

private:
    // Finds a K_l in `kept`, preferring one with the fewest unforced members.
    // Returns 0 when `kept` is K_l-free.
    Mask pick_clique(Mask kept, Mask forced) const {
        Mask best = 0;
        int best_free = ell_ + 1;
        int budget = 64;
        pick_rec(kept, 0, 0, forced, best, best_free, budget);
        return best;
    }

    void pick_rec(Mask cand, Mask chosen, int size, Mask forced, Mask& best, int& best_free, int& budget) const {
        if (size == ell_) {
            int free_count = popcount(chosen & ~forced);
            if (free_count < best_free) {
                best_free = free_count;
                best = chosen;
            }
            --budget;
            return;
        }
        if (popcount(cand) < ell_ - size) return;
        // Forced vertices first, so cliques with few free members surface early.
        Mask order[2] = {cand & forced, cand & ~forced};
        Mask remaining = cand;
        for (Mask part : order) {
            for (Mask m = part; m; m &= m - 1) {
                if (budget <= 0 || best_free <= 1) return;
                int v = lowest(m);
                remaining &= ~bit(v);
                pick_rec(remaining & adj_[static_cast<std::size_t>(v)], chosen | bit(v), size + 1, forced, best, best_free,
                         budget);
                if (popcount(remaining) < ell_ - size) return;
            }
        }
    }

    bool find_clique(Mask cand, int need, Mask& out) const {
        if (need == 0) return true;
        for (Mask m = cand; m; m &= m - 1) {
            if (popcount(m) < need) return false;
            int v = lowest(m);
            Mask next = (m & ~bit(v)) & adj_[static_cast<std::size_t>(v)];
            if (find_clique(next, need - 1, out)) {
                out |= bit(v);
                return true;
            }
        }
        return false;
    }

    // Disjoint K_l's within kept; each needs its own deletion. Returns -1 if
    // some clique is made entirely of forced vertices.
    int packing_bound(Mask kept, Mask forced) const {
        int count = 0;
        Mask pool = kept;
        while (true) {
            Mask c = 0;
            if (!find_clique(pool, ell_, c)) break;
            if ((c & ~forced) == 0) return -1;
            ++count;
            pool &= ~c;
        }
        return count;
    }

    void branch(Mask kept, Mask forced) {
        if (done_) return;
        ++nodes_;
        const int size = popcount(kept);
        if (size <= best_) return;
        Mask clique = pick_clique(kept, forced);
        if (clique == 0) {
            best_ = size;
            best_set_ = kept;
            improved_ = true;
            if (first_only_) done_ = true;
            return;
        }
        Mask free_members = clique & ~forced;
        if (free_members == 0) return;
        int deletions = packing_bound(kept, forced);
        if (deletions < 0 || size - std::max(deletions, 1) <= best_) return;

        // Delete high-degree members first.
        std::vector<int> order = mask_to_set(free_members);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return popcount(adj_[static_cast<std::size_t>(a)] & kept) > popcount(adj_[static_cast<std::size_t>(b)] & kept);
        });
        Mask newly_forced = 0;
        for (int v : order) {
            branch(kept & ~bit(v), forced | newly_forced);
            if (done_) return;
            newly_forced |= bit(v);
        }
    }

    int n_;
    int ell_;
    std::vector<Mask> adj_;
    int best_ = 0;
    Mask best_set_ = 0;
    bool first_only_ = false;
    bool done_ = false;
    bool improved_ = false;
    std::uint64_t nodes_ = 0;
};

void check_exact_args(const Graph& g, int ell) {
    if (ell < 2) throw domain_error("l-independence needs l >= 2");
    if (g.n() > kAlphaExactLimit)
        throw PreconditionError("exact alpha_l is limited to n <= " + std::to_string(kAlphaExactLimit) + " (n = " +
                                std::to_string(g.n()) + "); use bounds mode");
}

bool creates_kl(const Graph& g, Vertex v, const VertexSet& members, int ell) {
    VertexSet nb = neighbors_within(g, v, members);
    return static_cast<int>(nb.size()) >= ell - 1 && find_clique_in(g, nb, ell - 1).has_value();
}

VertexSet greedy_kl_free(const Graph& g, int ell, const std::vector<Vertex>& order) {
    VertexSet members;
    for (Vertex v : order) {
        if (creates_kl(g, v, members, ell)) continue;
        members.insert(std::upper_bound(members.begin(), members.end(), v), v);
    }
    return members;
}

std::vector<Vertex> degree_order(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    return order;
}

int greedy_kl_packing(const Graph& g, int ell) {
    VertexSet unused(static_cast<std::size_t>(g.n()));
    std::iota(unused.begin(), unused.end(), 0);
    int count = 0;
    for (Vertex v : degree_order(g)) {
        if (!std::binary_search(unused.begin(), unused.end(), v)) continue;
        auto clique = find_clique_in(g, neighbors_within(g, v, unused), ell - 1);
        if (!clique) continue;
        clique->push_back(v);
        for (Vertex w : *clique) unused.erase(std::lower_bound(unused.begin(), unused.end(), w));
        ++count;
    }
    return count;
}

Mask set_to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) m |= bit(v);
    return m;
}

} // namespace

AlphaResult alpha_ell_exact(const Graph& g, int ell) {
    check_exact_args(g, ell);
    BudgetMeter meter(Budget::unlimited());
    AlphaResult res;
    res.exact = true;
    if (ell > g.n()) {
        res.lower = res.upper = g.n();
        res.witness = mask_to_set(g.n() == 0 ? 0 : (bit(g.n()) - 1));
        return res;
    }
    VertexSet seed = greedy_kl_free(g, ell, degree_order(g));
    AlphaSearch search(g, ell);
    search.run(static_cast<int>(seed.size()), set_to_mask(seed), false);
    res.lower = res.upper = search.best();
    res.witness = mask_to_set(search.best_set());
    res.stats = {search.nodes(), meter.elapsed_ms()};
    return res;
}

AlphaThreshold alpha_ell_at_most(const Graph& g, int ell, int m) {
    check_exact_args(g, ell);
    BudgetMeter meter(Budget::unlimited());
    AlphaThreshold res;
    if (m >= g.n()) return res;
    VertexSet seed = greedy_kl_free(g, ell, degree_order(g));
    if (static_cast<int>(seed.size()) > m) {
        res.at_most = false;
        res.witness = std::move(seed);
        return res;
    }
    if (ell > g.n()) {
        res.at_most = false;
        res.witness = mask_to_set(bit(g.n()) - 1);
        return res;
    }
    AlphaSearch search(g, ell);
    search.run(std::max(m, 0), 0, true);
    if (search.improved()) {
        res.at_most = false;
        res.witness = mask_to_set(search.best_set());
    }
    res.stats = {search.nodes(), meter.elapsed_ms()};
    return res;
}

AlphaResult alpha_ell_bounds(const Graph& g, int ell, const AlphaEffort& effort) {
    if (ell < 2) throw domain_error("l-independence needs l >= 2");
    BudgetMeter meter(Budget::unlimited());
    AlphaResult res;
    res.exact = false;
    const int n = g.n();
    if (ell > n) {
        res.lower = res.upper = n;
        res.witness.resize(static_cast<std::size_t>(n));
        std::iota(res.witness.begin(), res.witness.end(), 0);
        return res;
    }

    res.witness = greedy_kl_free(g, ell, degree_order(g));
    for (int k = 0; k < effort.restarts; ++k) {
        Rng rng(derive_seed(effort.seed, static_cast<std::uint64_t>(k)));
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        VertexSet candidate = greedy_kl_free(g, ell, order);
        if (candidate.size() > res.witness.size()) res.witness = std::move(candidate);
    }
    res.lower = static_cast<int>(res.witness.size());
    res.upper = n - greedy_kl_packing(g, ell);
    res.stats = {static_cast<std::uint64_t>(effort.restarts + 1), meter.elapsed_ms()};
    return res;
}

} // namespace cliquelab
