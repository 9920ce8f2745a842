#include "cliquelab/factor.hpp"

#include <algorithm>
#include <numeric>

#include "cliquelab/cliques.hpp"
#include "cliquelab/error.hpp"

namespace cliquelab {

const char* to_string(FactorOutcome o) noexcept {
    switch (o) {
    case FactorOutcome::factor: return "factor";
    case FactorOutcome::no_factor: return "no-factor";
    case FactorOutcome::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

void finish_tiling(Tiling& t) {
    std::sort(t.parts.begin(), t.parts.end());
    t.covered.clear();
    for (const auto& p : t.parts) t.covered.insert(t.covered.end(), p.begin(), p.end());
    std::sort(t.covered.begin(), t.covered.end());
}

// Dancing-links exact cover: columns are vertices, rows are candidate cliques.
class ExactCover {
public:
    ExactCover(int columns, const std::vector<VertexSet>& rows) {
        const auto cols = static_cast<std::size_t>(columns);
        std::size_t total = 1 + cols;
        for (const auto& r : rows) total += r.size();
        left_.resize(total);
        right_.resize(total);
        up_.resize(total);
        down_.resize(total);
        column_.resize(total);
        row_.resize(total, -1);
        size_.assign(cols + 1, 0);

        for (std::size_t c = 0; c <= cols; ++c) {
            left_[c] = c == 0 ? static_cast<int>(cols) : static_cast<int>(c - 1);
            right_[c] = c == cols ? 0 : static_cast<int>(c + 1);
            up_[c] = down_[c] = static_cast<int>(c);
            column_[c] = static_cast<int>(c);
        }
        int next = static_cast<int>(cols) + 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int first = -1;
            for (Vertex v : rows[r]) {
                const int c = v + 1;
                const int node = next++;
                column_[static_cast<std::size_t>(node)] = c;
                row_[static_cast<std::size_t>(node)] = static_cast<int>(r);
                up_[static_cast<std::size_t>(node)] = up_[static_cast<std::size_t>(c)];
                down_[static_cast<std::size_t>(node)] = c;
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(c)])] = node;
                up_[static_cast<std::size_t>(c)] = node;
                ++size_[static_cast<std::size_t>(c)];
                if (first < 0) {
                    first = node;
                    left_[static_cast<std::size_t>(node)] = right_[static_cast<std::size_t>(node)] = node;
                } else {
                    left_[static_cast<std::size_t>(node)] = left_[static_cast<std::size_t>(first)];
                    right_[static_cast<std::size_t>(node)] = first;
                    right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(first)])] = node;
                    left_[static_cast<std::size_t>(first)] = node;
                }
            }
        }
    }

    // true: cover found (in solution()); false: none exists or budget spent.
    bool solve(BudgetMeter& meter) {
        meter_ = &meter;
        solution_.clear();
        return search();
    }

    const std::vector<int>& solution() const { return solution_; }

private:
    int& L(int i) { return left_[static_cast<std::size_t>(i)]; }
    int& R(int i) { return right_[static_cast<std::size_t>(i)]; }
    int& U(int i) { return up_[static_cast<std::size_t>(i)]; }
    int& D(int i) { return down_[static_cast<std::size_t>(i)]; }
    int C(int i) const { return column_[static_cast<std::size_t>(i)]; }
    int& S(int c) { return size_[static_cast<std::size_t>(c)]; }

    void cover(int c) {
        R(L(c)) = R(c);
        L(R(c)) = L(c);
        for (int i = D(c); i != c; i = D(i))
            for (int j = R(i); j != i; j = R(j)) {
                D(U(j)) = D(j);
                U(D(j)) = U(j);
                --S(C(j));
            }
    }

    void uncover(int c) {
        for (int i = U(c); i != c; i = U(i))
            for (int j = L(i); j != i; j = L(j)) {
                ++S(C(j));
                D(U(j)) = j;
                U(D(j)) = j;
            }
        R(L(c)) = c;
        L(R(c)) = c;
    }

    bool search() {
        if (R(0) == 0) return true;
        int best = R(0);
        for (int c = R(best); c != 0; c = R(c))
            if (S(c) < S(best)) best = c;
        if (S(best) == 0) return false;

        cover(best);
        for (int r = D(best); r != best; r = D(r)) {
            if (!meter_->tick()) break;
            solution_.push_back(row_[static_cast<std::size_t>(r)]);
            for (int j = R(r); j != r; j = R(j)) cover(C(j));
            if (search()) return true;
            for (int j = L(r); j != r; j = L(j)) uncover(C(j));
            solution_.pop_back();
            if (meter_->exhausted()) break;
        }
        uncover(best);
        return false;
    }

    std::vector<int> left_, right_, up_, down_, column_, row_, size_;
    std::vector<int> solution_;
    BudgetMeter* meter_ = nullptr;
};

// Disjoint-set packing by branching on the lowest live vertex: either one of
// its live sets is taken, or the vertex is left out.
class PackingSearch {
public:
    PackingSearch(int n, const std::vector<VertexSet>& sets, std::size_t target, BudgetMeter& meter)
        : n_(n), sets_(sets), target_(target), meter_(meter), by_vertex_(static_cast<std::size_t>(n)) {
        masks_.reserve(sets.size());
        min_size_ = sets.empty() ? 1 : sets.front().size();
        for (std::size_t i = 0; i < sets.size(); ++i) {
            Bits m(static_cast<std::size_t>(n));
            for (Vertex v : sets[i]) {
                m.set(static_cast<std::size_t>(v));
                by_vertex_[static_cast<std::size_t>(v)].push_back(i);
            }
            masks_.push_back(std::move(m));
            min_size_ = std::min(min_size_, sets[i].size());
        }
        if (min_size_ == 0) min_size_ = 1;
    }

    void seed(std::vector<std::size_t> chosen) {
        if (chosen.size() > best_.size()) best_ = std::move(chosen);
    }

    void run() {
        if (target_ > 0 && best_.size() >= target_) return;
        Bits blocked(static_cast<std::size_t>(n_));
        std::vector<std::size_t> chosen;
        branch(blocked, chosen);
    }

    const std::vector<std::size_t>& best() const { return best_; }
    bool complete() const { return !meter_.exhausted(); }

private:
    bool live(std::size_t i, const Bits& blocked) const { return !masks_[i].intersects(blocked); }

    void branch(Bits& blocked, std::vector<std::size_t>& chosen) {
        if (done_ || !meter_.tick()) return;

        Bits coverable(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < masks_.size(); ++i)
            if (live(i, blocked)) coverable |= masks_[i];
        const std::size_t bound = chosen.size() + coverable.count() / min_size_;
        if (bound <= best_.size()) return;

        const std::size_t v = coverable.first();
        if (v == coverable.width()) {
            if (chosen.size() > best_.size()) {
                best_ = chosen;
                if (target_ > 0 && best_.size() >= target_) done_ = true;
            }
            return;
        }
        for (std::size_t i : by_vertex_[v]) {
            if (!live(i, blocked)) continue;
            Bits next = blocked | masks_[i];
            chosen.push_back(i);
            branch(next, chosen);
            chosen.pop_back();
            if (done_ || meter_.exhausted()) return;
        }
        Bits skip = blocked;
        skip.set(v);
        branch(skip, chosen);
    }

    int n_;
    const std::vector<VertexSet>& sets_;
    std::size_t target_;
    BudgetMeter& meter_;
    std::vector<Bits> masks_;
    std::vector<std::vector<std::size_t>> by_vertex_;
    std::size_t min_size_ = 1;
    std::vector<std::size_t> best_;
    bool done_ = false;
};

std::vector<std::size_t> greedy_packing(int n, const std::vector<VertexSet>& sets) {
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (std::any_of(sets[i].begin(), sets[i].end(), [&](Vertex v) { return used[static_cast<std::size_t>(v)]; }))
            continue;
        for (Vertex v : sets[i]) used[static_cast<std::size_t>(v)] = 1;
        chosen.push_back(i);
    }
    return chosen;
}

VertexSet all_vertices(int n) {
    VertexSet s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Greedy tiling (low-degree vertices first) followed by 1-for-2 swaps.
Tiling heuristic_tiling(const Graph& g, int r, BudgetMeter& meter) {
    Tiling t;
    t.r = r;
    t.exact = false;
    VertexSet free_vertices = all_vertices(g.n());
    std::vector<Vertex> order = free_vertices;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

    for (Vertex v : order) {
        if (!std::binary_search(free_vertices.begin(), free_vertices.end(), v)) continue;
        auto rest = find_clique_in(g, neighbors_within(g, v, free_vertices), r - 1);
        if (!rest) continue;
        rest->insert(std::upper_bound(rest->begin(), rest->end(), v), v);
        free_vertices = set_difference(free_vertices, *rest);
        t.parts.push_back(std::move(*rest));
    }

    // Any new clique must meet the removed part, since the free vertices
    // span no K_r after the greedy pass.
    bool improved = true;
    while (improved && meter.tick()) {
        improved = false;
        for (std::size_t p = 0; p < t.parts.size() && !improved; ++p) {
            const VertexSet pool = set_union(free_vertices, t.parts[p]);
            std::size_t examined = 0;
            for_each_clique_in(g, pool, r, [&](std::span<const Vertex> k1) {
                if (++examined > 20000) return false;
                VertexSet first(k1.begin(), k1.end());
                auto second = find_clique_in(g, set_difference(pool, first), r);
                if (!second) return true;
                t.parts[p] = std::move(first);
                t.parts.push_back(std::move(*second));
                improved = true;
                return false;
            });
            if (improved) {
                VertexSet used;
                for (const auto& part : t.parts) used = set_union(used, part);
                free_vertices = set_difference(all_vertices(g.n()), used);
            }
        }
    }
    finish_tiling(t);
    return t;
}

} // namespace

bool is_valid_tiling(const Graph& g, const Tiling& t) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::size_t total = 0;
    for (const auto& p : t.parts) {
        if (static_cast<int>(p.size()) != t.r || !is_clique(g, p)) return false;
        for (Vertex v : p) {
            if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
            ++total;
        }
    }
    if (t.covered.size() != total) return false;
    for (Vertex v : t.covered)
        if (v < 0 || v >= g.n() || !seen[static_cast<std::size_t>(v)]) return false;
    return true;
}

PackingResult max_set_packing(int n, const std::vector<VertexSet>& sets, std::size_t target, const Budget& budget) {
    BudgetMeter meter(budget);
    PackingSearch search(n, sets, target, meter);
    search.seed(greedy_packing(n, sets));
    search.run();
    PackingResult res;
    res.chosen = search.best();
    res.exact = search.complete();
    res.stats = meter.stats();
    return res;
}

FactorCertificate has_kr_factor(const Graph& g, int r, const FactorOptions& options) {
    if (r < 2) throw domain_error("factor search needs r >= 2");
    BudgetMeter meter(options.budget);
    FactorCertificate cert;
    cert.tiling.r = r;
    const int n = g.n();

    if (n % r != 0) {
        cert.outcome = FactorOutcome::no_factor;
        cert.note = "r = " + std::to_string(r) + " does not divide n = " + std::to_string(n);
        cert.stats = meter.stats();
        return cert;
    }

    CliqueList list = enumerate_r_cliques(g, r, options.max_candidates);
    cert.candidates = list.cliques.size();
    if (list.truncated) {
        cert.outcome = FactorOutcome::unknown;
        cert.note = "candidate clique list exceeded " + std::to_string(options.max_candidates);
        cert.stats = meter.stats();
        return cert;
    }

    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (const auto& c : list.cliques)
        for (Vertex v : c) ++hits[static_cast<std::size_t>(v)];
    for (int v = 0; v < n; ++v) {
        if (hits[static_cast<std::size_t>(v)] == 0) {
            cert.outcome = FactorOutcome::no_factor;
            cert.note = "vertex " + std::to_string(v) + " lies in no K_" + std::to_string(r);
            cert.stats = meter.stats();
            return cert;
        }
    }

    ExactCover dlx(n, list.cliques);
    if (dlx.solve(meter)) {
        cert.outcome = FactorOutcome::factor;
        for (int row : dlx.solution()) cert.tiling.parts.push_back(list.cliques[static_cast<std::size_t>(row)]);
        finish_tiling(cert.tiling);
    } else if (meter.exhausted()) {
        cert.outcome = FactorOutcome::unknown;
        cert.note = "search budget exhausted";
    } else {
        cert.outcome = FactorOutcome::no_factor;
        cert.note = "exhaustive search found no exact cover";
    }
    cert.stats = meter.stats();
    cert.tiling.stats = cert.stats;
    return cert;
}

Tiling max_kr_tiling(const Graph& g, int r, const Budget& budget) {
    if (r < 2) throw domain_error("tiling needs r >= 2");
    BudgetMeter meter(budget);
    Tiling best = heuristic_tiling(g, r, meter);
    const std::size_t ceiling = static_cast<std::size_t>(g.n() / r);

    if (best.size() == ceiling) {
        best.exact = true;
    } else if (g.n() <= kTilingExactLimit && !meter.exhausted()) {
        constexpr std::size_t kMaxExactCandidates = 200'000;
        CliqueList list = enumerate_r_cliques(g, r, kMaxExactCandidates);
        if (!list.truncated) {
            PackingSearch search(g.n(), list.cliques, 0, meter);
            // Seed with the heuristic solution so the bound starts tight.
            std::vector<std::size_t> seeded;
            for (const auto& part : best.parts) {
                auto it = std::lower_bound(list.cliques.begin(), list.cliques.end(), part);
                seeded.push_back(static_cast<std::size_t>(it - list.cliques.begin()));
            }
            search.seed(seeded);
            search.run();
            if (search.best().size() > best.size()) {
                best.parts.clear();
                for (std::size_t i : search.best()) best.parts.push_back(list.cliques[i]);
                finish_tiling(best);
            }
            best.exact = search.complete();
        }
    }
    best.stats = meter.stats();
    return best;
}

Tiling cross_tiling(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y, int r, int a) {
    if (r < 1) throw domain_error("cross tiling needs r >= 1");
    if (a < 0 || a > r) throw domain_error("split a must lie in [0, r]");
    VertexSet free_x = make_vertex_set(x, g.n());
    VertexSet free_y = make_vertex_set(y, g.n());
    VertexSet overlap;
    std::set_intersection(free_x.begin(), free_x.end(), free_y.begin(), free_y.end(), std::back_inserter(overlap));
    if (!overlap.empty()) throw domain_error("X and Y must be disjoint");

    Tiling t;
    t.r = r;
    t.exact = false;
    while (true) {
        std::optional<VertexSet> found;
        for_each_clique_in(g, free_x, a, [&](std::span<const Vertex> w) {
            VertexSet common = free_y;
            for (Vertex v : w) common = neighbors_within(g, v, common);
            auto rest = find_clique_in(g, common, r - a);
            if (!rest) return true;
            VertexSet part(w.begin(), w.end());
            part.insert(part.end(), rest->begin(), rest->end());
            found = std::move(part);
            return false;
        });
        if (!found) break;
        VertexSet part = std::move(*found);
        std::sort(part.begin(), part.end());
        free_x = set_difference(free_x, part);
        free_y = set_difference(free_y, part);
        t.parts.push_back(std::move(part));
    }
    finish_tiling(t);
    return t;
}

VertexSet cover_check(const Graph& g, int r, std::span<const Vertex> w) {
    if (r < 1) throw domain_error("cover check needs r >= 1");
    const VertexSet removed = make_vertex_set(w, g.n());
    const VertexSet pool = set_difference(all_vertices(g.n()), removed);
    VertexSet uncovered;
    for (Vertex u : pool) {
        if (!find_clique_in(g, neighbors_within(g, u, pool), r - 1)) uncovered.push_back(u);
    }
    return uncovered;
}

} // namespace cliquelab
