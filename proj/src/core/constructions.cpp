#include "cliquelab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "cliquelab/cliques.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/independence.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

namespace {

constexpr std::int64_t kMaxGeneratedEdges = 20'000'000;
constexpr double kSlack = 1e-9;

void check_generated_size(std::int64_t n, std::int64_t edges) {
    if (n > kMaxGeneratedVertices)
        throw domain_error("generated graphs are limited to " + std::to_string(kMaxGeneratedVertices) + " vertices");
    if (edges > kMaxGeneratedEdges)
        throw domain_error("generated graph would have " + std::to_string(edges) + " edges (limit " +
                           std::to_string(kMaxGeneratedEdges) + ")");
}

bool bits_have_clique(const std::vector<Bits>& adj, const Bits& cand, int need) {
    if (need <= 0) return true;
    if (static_cast<int>(cand.count()) < need) return false;
    Bits rest = cand;
    for (std::size_t v = rest.first(); v < rest.width(); v = rest.next(v + 1)) {
        rest.reset(v);
        if (bits_have_clique(adj, rest & adj[v], need - 1)) return true;
        if (static_cast<int>(rest.count()) < need) return false;
    }
    return false;
}

VertexSet range_set(int from, int to) {
    VertexSet s(static_cast<std::size_t>(std::max(0, to - from)));
    std::iota(s.begin(), s.end(), from);
    return s;
}

} // namespace

const char* to_string(Family f) noexcept {
    switch (f) {
    case Family::multipartite: return "multipartite";
    case Family::figure1: return "figure1";
    case Family::blowup: return "blowup";
    case Family::pruned: return "pruned";
    case Family::core_search: return "core-search";
    case Family::random_mindeg: return "random-mindeg";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    if (name == "multipartite") return Family::multipartite;
    if (name == "figure1") return Family::figure1;
    if (name == "blowup" || name == "blow-up") return Family::blowup;
    if (name == "pruned" || name == "prune") return Family::pruned;
    if (name == "core-search" || name == "core_search") return Family::core_search;
    if (name == "random-mindeg" || name == "random_mindeg") return Family::random_mindeg;
    throw domain_error("unknown construction family '" + name + "'");
}

const VertexSet* LabeledInstance::find(const std::string& name) const {
    for (const auto& s : designated)
        if (s.name == name) return &s.members;
    return nullptr;
}

LabeledInstance complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw domain_error("complete multipartite graph needs at least one part");
    std::int64_t n = 0;
    for (int s : sizes) {
        if (s < 1) throw domain_error("part sizes must be >= 1");
        n += s;
    }
    std::int64_t edges = n * (n - 1) / 2;
    for (int s : sizes) edges -= std::int64_t{s} * (s - 1) / 2;
    check_generated_size(n, edges);

    LabeledInstance inst;
    std::vector<int> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    int start = 0;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        inst.designated.push_back({"part" + std::to_string(p), range_set(start, start + sizes[p])});
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
        start += sizes[p];
    }
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(edges));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) e.emplace_back(u, v);
    inst.graph = Graph(static_cast<int>(n), e);
    inst.provenance.family = Family::multipartite;
    inst.provenance.n = static_cast<int>(n);
    inst.provenance.r = static_cast<int>(sizes.size());
    inst.provenance.sizes = sizes;
    return inst;
}

LabeledInstance balanced_multipartite(int n, int parts) {
    if (parts < 1 || n < parts) throw domain_error("balanced multipartite graph needs 1 <= parts <= n");
    std::vector<int> sizes(static_cast<std::size_t>(parts), n / parts);
    for (int p = 0; p < n % parts; ++p) ++sizes[static_cast<std::size_t>(p)];
    return complete_multipartite(sizes);
}

LabeledInstance random_min_degree(int n, double fraction, std::uint64_t seed) {
    if (n < 1) throw domain_error("random graph needs n >= 1");
    if (!(fraction >= 0.0 && fraction <= 1.0)) throw domain_error("degree fraction must lie in [0, 1]");
    check_generated_size(n, std::int64_t{n} * (n - 1) / 2);
    const int floor_degree = static_cast<int>(std::ceil(fraction * n - kSlack));
    if (floor_degree > n - 1)
        throw domain_error("minimum degree " + std::to_string(floor_degree) + " impossible on " + std::to_string(n) + " vertices");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    Rng rng = make_rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<int> deg(static_cast<std::size_t>(n), n - 1);
    std::vector<Edge> kept;
    for (auto [u, v] : pairs) {
        if (deg[static_cast<std::size_t>(u)] > floor_degree && deg[static_cast<std::size_t>(v)] > floor_degree) {
            --deg[static_cast<std::size_t>(u)];
            --deg[static_cast<std::size_t>(v)];
        } else {
            kept.emplace_back(u, v);
        }
    }
    LabeledInstance inst;
    inst.graph = Graph(n, kept);
    inst.provenance.family = Family::random_mindeg;
    inst.provenance.n = n;
    inst.provenance.delta = fraction;
    inst.provenance.seed = seed;
    return inst;
}

double default_x(double rho) {
    if (!(rho >= 0.0 && rho < 1.0)) throw domain_error("rho must lie in [0, 1)");
    return 1.0 / (2.0 - rho);
}

int core_size(int n, double x) { return static_cast<int>(std::floor(x * n + kSlack)); }

LabeledInstance figure1(int n, int r, double x, const Graph& core) {
    if (r < 3) throw domain_error("figure1 needs r >= 3");
    if (!(x > 0.0 && x <= 1.0)) throw domain_error("x must lie in (0, 1]");
    const int m = core_size(n, x);
    if (m + 1 > n) throw domain_error("floor(x n) + 1 = " + std::to_string(m + 1) + " exceeds n = " + std::to_string(n));
    if (core.n() != m)
        throw domain_error("core has " + std::to_string(core.n()) + " vertices, expected floor(x n) = " + std::to_string(m));
    if (auto kf = is_kl_free(core, r - 1); !kf.free) {
        std::vector<int> witness;
        for (Vertex v : kf.witness) witness.push_back(v + 1);
        throw PreconditionError("core contains a K_" + std::to_string(r - 1), witness);
    }
    const std::int64_t rest = n - m - 1;
    check_generated_size(n, m + core.edge_count() + rest * (rest - 1) / 2 + rest * m);

    std::vector<Edge> e;
    for (int c = 1; c <= m; ++c) e.emplace_back(0, c);
    for (auto [u, v] : core.edges()) e.emplace_back(u + 1, v + 1);
    for (int a = m + 1; a < n; ++a) {
        for (int c = 1; c <= m; ++c) e.emplace_back(c, a);
        for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
    }

    LabeledInstance inst;
    inst.graph = Graph(n, e);
    inst.designated = {{"apex", {0}}, {"core", range_set(1, m + 1)}, {"clique", range_set(m + 1, n)}};
    inst.provenance.family = Family::figure1;
    inst.provenance.n = n;
    inst.provenance.r = r;
    inst.provenance.x = x;
    inst.provenance.source_graph6 = to_graph6(core);
    return inst;
}

Graph figure1_core(const std::string& recipe, int m, int r, std::uint64_t seed) {
    if (m < 0) throw domain_error("core size must be >= 0");
    if (recipe == "edgeless") return Graph(m);
    if (recipe == "turan") {
        const int parts = std::max(1, r - 2);
        std::vector<Edge> e;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (u % parts != v % parts) e.emplace_back(u, v);
        return Graph(m, e);
    }
    if (recipe == "c5-blowup") {
        std::vector<Edge> e;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) {
                const int d = std::abs(u % 5 - v % 5);
                if (d == 1 || d == 4) e.emplace_back(u, v);
            }
        return Graph(m, e);
    }
    if (recipe == "random") {
        // Random greedy K_{r-1}-free process over a seeded pair order.
        std::vector<Edge> pairs;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
        Rng rng = make_rng(seed);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        const int forbid = r - 1;
        std::vector<Bits> adj(static_cast<std::size_t>(m), Bits(static_cast<std::size_t>(m)));
        std::vector<Edge> kept;
        if (forbid > 2) {
            for (auto [u, v] : pairs) {
                Bits common = adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)];
                if (bits_have_clique(adj, common, forbid - 2)) continue;
                adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
                adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
                kept.emplace_back(u, v);
            }
        }
        return Graph(m, kept);
    }
    throw domain_error("unknown core recipe '" + recipe + "'");
}

LabeledInstance blow_up(const Graph& g, int n, double epsilon, std::uint64_t seed, int max_retries) {
    const int base = g.n();
    if (base < 1) throw domain_error("blow-up source graph must be nonempty");
    if (n < base) throw domain_error("target n = " + std::to_string(n) + " is below n' = " + std::to_string(base));
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw domain_error("epsilon must lie in [0, 1)");
    if (max_retries < 1) throw domain_error("retry budget must be >= 1");

    const int q = n / base;
    const int big = n % base; // p n' classes of size q + 1
    const int delta = min_degree(g);
    const double bound = (double(delta) / base - epsilon) * n;

    const std::int64_t widest = q + (big > 0 ? 1 : 0);
    check_generated_size(n, g.edge_count() * widest * widest);

    std::vector<int> sizes(static_cast<std::size_t>(base), q);
    int attempts = 0;
    int best_min = -1;
    std::vector<int> best_sizes;
    const int tries = big == 0 ? 1 : max_retries;
    for (; attempts < tries;) {
        ++attempts;
        std::fill(sizes.begin(), sizes.end(), q);
        if (big > 0) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempts - 1)));
            std::vector<int> order(static_cast<std::size_t>(base));
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            for (int k = 0; k < big; ++k) ++sizes[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        }
        int result_min = n;
        for (int v = 0; v < base; ++v) {
            int d = 0;
            for (Vertex u : g.neighbors(v)) d += sizes[static_cast<std::size_t>(u)];
            result_min = std::min(result_min, d);
        }
        if (result_min > best_min) {
            best_min = result_min;
            best_sizes = sizes;
        }
        if (double(result_min) >= bound - kSlack) break;
    }
    if (double(best_min) < bound - kSlack)
        throw Error(ErrorKind::budget, "blow-up retries exhausted after " + std::to_string(attempts) +
                                           " attempts; best minimum degree " + std::to_string(best_min) +
                                           " < bound " + std::to_string(bound) + " (epsilon too small for n, n')");

    LabeledInstance inst;
    std::vector<int> start(static_cast<std::size_t>(base) + 1, 0);
    for (int v = 0; v < base; ++v)
        start[static_cast<std::size_t>(v) + 1] = start[static_cast<std::size_t>(v)] + best_sizes[static_cast<std::size_t>(v)];
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        for (int a = start[static_cast<std::size_t>(u)]; a < start[static_cast<std::size_t>(u) + 1]; ++a)
            for (int b = start[static_cast<std::size_t>(v)]; b < start[static_cast<std::size_t>(v) + 1]; ++b)
                e.emplace_back(a, b);
    inst.graph = Graph(n, e);
    for (int v = 0; v < base; ++v)
        inst.designated.push_back(
            {"class" + std::to_string(v), range_set(start[static_cast<std::size_t>(v)], start[static_cast<std::size_t>(v) + 1])});
    inst.provenance.family = Family::blowup;
    inst.provenance.n = n;
    inst.provenance.epsilon = epsilon;
    inst.provenance.seed = seed;
    inst.provenance.source_graph6 = to_graph6(g);
    inst.metrics["attempts"] = attempts;
    inst.metrics["min_degree"] = best_min;
    inst.metrics["degree_bound"] = bound;
    return inst;
}

PruneResult degree_prune(const Graph& g, double delta, double eta) {
    const int n = g.n();
    if (n < 1) throw domain_error("degree pruning needs a nonempty graph");
    if (!(delta > 0.0 && delta <= 1.0)) throw domain_error("delta must lie in (0, 1]");
    if (!(eta > 0.0 && eta < delta / 2.0)) throw domain_error("eta must lie in (0, delta/2)");
    const double pairs = double(n) * (n - 1) / 2.0;
    if (double(g.edge_count()) < delta * pairs - kSlack * std::max(1.0, pairs))
        throw PreconditionError("graph has " + std::to_string(g.edge_count()) + " edges, fewer than delta * C(n,2) = " +
                                std::to_string(delta * pairs));

    const double ratio = delta - eta;
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int size = n;

    PruneResult res;
    while (size > 0) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)] && (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                pick = v;
        if (double(deg[static_cast<std::size_t>(pick)]) >= ratio * size - kSlack) break;
        alive[static_cast<std::size_t>(pick)] = 0;
        --size;
        res.deletion_order.push_back(pick);
        for (Vertex w : g.neighbors(pick)) --deg[static_cast<std::size_t>(w)];
    }

    res.guaranteed = double(n) >= 8.0 / eta - kSlack;
    if (size == 0) throw internal_error("degree pruning emptied the graph; please report this instance");
    if (res.guaranteed && double(size) < eta * n / 4.0 - kSlack)
        throw internal_error("degree pruning left n' = " + std::to_string(size) + " < eta n / 4; please report this instance");

    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) res.survivors.push_back(v);
    auto sub = induced_subgraph(g, res.survivors);
    res.instance.graph = std::move(sub.graph);
    res.instance.designated = {{"survivors", res.survivors}};
    VertexSet deleted = res.deletion_order;
    std::sort(deleted.begin(), deleted.end());
    res.instance.designated.push_back({"deleted", std::move(deleted)});
    res.instance.provenance.family = Family::pruned;
    res.instance.provenance.n = n;
    res.instance.provenance.delta = delta;
    res.instance.provenance.eta = eta;
    res.instance.provenance.source_graph6 = to_graph6(g);
    res.instance.metrics["n_prime"] = size;
    res.instance.metrics["min_degree"] = min_degree(res.instance.graph);
    return res;
}

namespace {

using Mask = std::uint64_t;

bool mask_has_clique(const std::vector<Mask>& adj, Mask cand, int need) {
    if (need <= 0) return true;
    for (Mask m = cand; m; m &= m - 1) {
        if (std::popcount(m) < need) return false;
        const int v = std::countr_zero(m);
        if (mask_has_clique(adj, (m & (m - 1)) & adj[static_cast<std::size_t>(v)], need - 1)) return true;
    }
    return false;
}

class CoreAnnealer {
public:
    explicit CoreAnnealer(const CoreSearchParams& p)
        : p_(p), adj_(static_cast<std::size_t>(p.m), 0),
          target_(static_cast<int>(std::ceil(p.target_mindeg * p.m - kSlack))) {
        order_.resize(static_cast<std::size_t>(p.m));
    }

    int target() const { return target_; }

    Graph graph() const {
        std::vector<Edge> e;
        for (int u = 0; u < p_.m; ++u)
            for (Mask m = adj_[static_cast<std::size_t>(u)] >> (u + 1); m; m &= m - 1)
                e.emplace_back(u, u + 1 + std::countr_zero(m));
        return Graph(p_.m, e);
    }

    double energy() {
        double deficit = 0;
        for (int v = 0; v < p_.m; ++v) deficit += std::max(0, target_ - std::popcount(adj_[static_cast<std::size_t>(v)]));
        if (p_.alpha_cap < 0) return deficit;
        const int excess = std::max(0, greedy_alpha() - p_.alpha_cap);
        if (deficit + excess > 0) return deficit + excess;
        AlphaThreshold exact = alpha_ell_at_most(graph(), p_.ell, p_.alpha_cap);
        return exact.at_most ? 0.0 : double(static_cast<int>(exact.witness.size()) - p_.alpha_cap);
    }

    // Toggles u-v unless adding it would create K_forbid. Returns false when
    // the move is rejected outright.
    bool toggle(int u, int v) {
        const Mask bu = Mask{1} << u, bv = Mask{1} << v;
        if (adj_[static_cast<std::size_t>(u)] & bv) {
            adj_[static_cast<std::size_t>(u)] &= ~bv;
            adj_[static_cast<std::size_t>(v)] &= ~bu;
            return true;
        }
        if (mask_has_clique(adj_, adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)], p_.forbid - 2))
            return false;
        adj_[static_cast<std::size_t>(u)] |= bv;
        adj_[static_cast<std::size_t>(v)] |= bu;
        return true;
    }

    void undo(int u, int v) {
        adj_[static_cast<std::size_t>(u)] ^= Mask{1} << v;
        adj_[static_cast<std::size_t>(v)] ^= Mask{1} << u;
    }

    std::vector<Mask> snapshot() const { return adj_; }
    void restore(const std::vector<Mask>& s) { adj_ = s; }

private:
    // Lower bound on alpha_ell: greedy over vertices by ascending degree.
    int greedy_alpha() {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return std::popcount(adj_[static_cast<std::size_t>(a)]) < std::popcount(adj_[static_cast<std::size_t>(b)]);
        });
        Mask chosen = 0;
        for (int v : order_)
            if (!mask_has_clique(adj_, adj_[static_cast<std::size_t>(v)] & chosen, p_.ell - 1)) chosen |= Mask{1} << v;
        return std::popcount(chosen);
    }

    CoreSearchParams p_;
    std::vector<Mask> adj_;
    std::vector<int> order_;
    int target_;
};

} // namespace

CoreSearchResult kfree_core_search(const CoreSearchParams& p) {
    if (p.forbid < 2) throw domain_error("forbidden clique order must be >= 2");
    if (p.ell < 2) throw domain_error("l must be >= 2");
    if (p.m < 1 || p.m > kAlphaExactLimit)
        throw domain_error("core search size m must lie in [1, " + std::to_string(kAlphaExactLimit) + "]");
    if (!(p.target_mindeg >= 0.0 && p.target_mindeg <= 1.0)) throw domain_error("target minimum degree must lie in [0, 1]");
    if (!(p.cooling > 0.0 && p.cooling <= 1.0)) throw domain_error("cooling factor must lie in (0, 1]");

    CoreAnnealer state(p);
    CoreSearchResult res;
    auto finish = [&](const Graph& g) {
        res.instance.graph = g;
        res.instance.provenance.family = Family::core_search;
        res.instance.provenance.n = p.m;
        res.instance.provenance.ell = p.ell;
        res.instance.provenance.r = p.forbid + 1;
        res.instance.provenance.seed = p.seed;
        res.instance.metrics["target_mindeg"] = p.target_mindeg;
        res.instance.metrics["alpha_cap"] = p.alpha_cap;
        res.instance.metrics["iterations"] = double(res.iterations);
        res.min_degree = min_degree(g);
        res.alpha = alpha_ell_exact(g, p.ell).value();
        res.instance.metrics["min_degree"] = res.min_degree;
        res.instance.metrics["alpha"] = res.alpha;
    };

    if (state.target() > p.m - 1 || (p.forbid == 2 && state.target() > 0)) {
        res.reason = "target minimum degree is unattainable for a K_" + std::to_string(p.forbid) + "-free graph on " +
                     std::to_string(p.m) + " vertices";
        res.energy = state.energy();
        finish(state.graph());
        return res;
    }

    Rng rng = make_rng(p.seed);
    std::uniform_int_distribution<int> pick(0, p.m - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double current = state.energy();
    double best = current;
    auto best_state = state.snapshot();
    double temperature = p.initial_temperature;

    while (best > 0.0 && res.iterations < p.iterations && p.m >= 2) {
        ++res.iterations;
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (!state.toggle(u, v)) continue;
        const double next = state.energy();
        const double delta = next - current;
        if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
            current = next;
            if (current < best) {
                best = current;
                best_state = state.snapshot();
            }
        } else {
            state.undo(u, v);
        }
        temperature = std::max(0.01, temperature * p.cooling);
    }

    state.restore(best_state);
    res.energy = best;
    const Graph g = state.graph();
    finish(g);
    if (best > 0.0) {
        res.reason = "budget of " + std::to_string(p.iterations) + " iterations exhausted; best energy " +
                     std::to_string(best);
        return res;
    }
    // Self-verification of the accepted graph.
    if (!is_kl_free(g, p.forbid).free || res.min_degree < state.target() ||
        (p.alpha_cap >= 0 && res.alpha > p.alpha_cap))
        throw internal_error("core search accepted a graph that fails verification");
    res.success = true;
    return res;
}

} // namespace cliquelab
