#include "cliquelab/cliques.hpp"

#include <algorithm>
#include <iterator>

#include "cliquelab/error.hpp"

namespace cliquelab {

VertexSet neighbors_within(const Graph& g, Vertex v, std::span<const Vertex> pool) {
    VertexSet out;
    const auto& nb = g.neighbors(v);
    std::set_intersection(nb.begin(), nb.end(), pool.begin(), pool.end(), std::back_inserter(out));
    return out;
}

namespace {

// Depth-first extension over candidates greater than the last chosen vertex,
// which yields cliques in lexicographic order.
class CliqueWalker {
public:
    CliqueWalker(const Graph& g, int size, const std::function<bool(std::span<const Vertex>)>& visit)
        : g_(g), size_(size), visit_(visit) {
        current_.reserve(static_cast<std::size_t>(size));
    }

    bool run(std::span<const Vertex> pool) {
        if (size_ <= 0) return visit_(current_);
        return extend(VertexSet(pool.begin(), pool.end()));
    }

private:
    bool extend(const VertexSet& cand) {
        const std::size_t need = static_cast<std::size_t>(size_) - current_.size();
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (cand.size() - i < need) return true;
            const Vertex v = cand[i];
            if (g_.degree(v) < size_ - 1) continue;
            current_.push_back(v);
            bool keep_going;
            if (need == 1) {
                keep_going = visit_(current_);
            } else {
                VertexSet next = neighbors_within(g_, v, std::span<const Vertex>(cand).subspan(i + 1));
                keep_going = next.size() + 1 < need ? true : extend(next);
            }
            current_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    int size_;
    const std::function<bool(std::span<const Vertex>)>& visit_;
    VertexSet current_;
};

} // namespace

bool for_each_clique_in(const Graph& g, std::span<const Vertex> pool, int size,
                        const std::function<bool(std::span<const Vertex>)>& visit) {
    if (size > static_cast<int>(pool.size())) return true;
    return CliqueWalker(g, size, visit).run(pool);
}

std::optional<VertexSet> find_clique_in(const Graph& g, std::span<const Vertex> pool, int size) {
    std::optional<VertexSet> found;
    for_each_clique_in(g, pool, size, [&](std::span<const Vertex> c) {
        found.emplace(c.begin(), c.end());
        return false;
    });
    return found;
}

CliqueList enumerate_r_cliques(const Graph& g, int r, std::optional<std::size_t> cap) {
    if (r < 1) throw domain_error("clique order r must be >= 1");
    if (cap && *cap < 1) throw domain_error("clique cap must be >= 1");
    CliqueList out;
    out.r = r;
    if (r > g.n()) return out;

    VertexSet all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;

    for_each_clique_in(g, all, r, [&](std::span<const Vertex> c) {
        if (cap && out.cliques.size() == *cap) {
            out.truncated = true;
            return false;
        }
        out.cliques.emplace_back(c.begin(), c.end());
        return true;
    });
    return out;
}

KlFreeResult is_kl_free(const Graph& g, int ell) {
    if (ell < 1) throw domain_error("clique order l must be >= 1");
    auto list = enumerate_r_cliques(g, ell, 1);
    KlFreeResult res;
    if (!list.cliques.empty()) {
        res.free = false;
        res.witness = std::move(list.cliques.front());
    }
    return res;
}

} // namespace cliquelab
