#include <doctest.h>

#include <cmath>

#include "cliquelab/cliques.hpp"
#include "cliquelab/constructions.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/factor.hpp"
#include "cliquelab/independence.hpp"
#include "support.hpp"

using namespace cliquelab;

namespace {

// C_5 with every vertex replaced by an independent set of `size` vertices,
// built directly from the definition.
Graph c5_blowup(int size) {
    std::vector<Edge> e;
    const int n = 5 * size;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int d = (v / size - u / size + 5) % 5;
            if (d == 1 || d == 4) e.emplace_back(u, v);
        }
    return Graph(n, e);
}

} // namespace

TEST_CASE("complete multipartite graphs") {
    LabeledInstance a = complete_multipartite({3, 3, 3});
    CHECK(a.graph.n() == 9);
    CHECK(min_degree(a.graph) == 6);
    REQUIRE(a.find("part1") != nullptr);
    CHECK(*a.find("part1") == VertexSet{3, 4, 5});
    CHECK(complete_multipartite({1, 1, 1, 1}).graph == Graph::complete(4));
    CHECK(min_degree(complete_multipartite({2, 4, 3}).graph) == 5);
    CHECK_THROWS_AS(complete_multipartite({}), Error);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), Error);
}

TEST_CASE("figure1 with an edgeless core, r = 3") {
    LabeledInstance inst = figure1(20, 3, 0.5, Graph(10));
    const Graph& g = inst.graph;
    CHECK(g.degree(0) == 10);
    CHECK(cover_check(g, 3) == VertexSet{0});
    CHECK(*inst.find("apex") == VertexSet{0});
    CHECK(inst.find("core")->size() == 10);
    CHECK(inst.find("clique")->size() == 9);
}

TEST_CASE("figure1 with a C5 blow-up core, r = 4") {
    LabeledInstance inst = figure1(20, 4, 0.5, c5_blowup(2));
    CHECK(cover_check(inst.graph, 4) == VertexSet{0});
    CHECK(has_kr_factor(inst.graph, 4).outcome == FactorOutcome::no_factor);
}

TEST_CASE("figure1 refuses a core containing K_{r-1} with a witness") {
    try {
        figure1(20, 4, 0.5, Graph::complete(10));
        FAIL("accepted a core with triangles");
    } catch (const PreconditionError& e) {
        CHECK(e.witness().size() == 3);
    }
    CHECK_THROWS_AS(figure1(20, 3, 0.5, Graph(9)), Error);
    CHECK_THROWS_AS(figure1(10, 3, 1.0, Graph(10)), Error);
}

TEST_CASE("figure1 degree accounting and core recipes") {
    for (const char* recipe : {"edgeless", "turan", "c5-blowup", "random"}) {
        for (int r : {3, 4, 5}) {
            if (std::string(recipe) == "c5-blowup" && r < 4) continue;
            for (int n : {20, 31}) {
                const double x = 0.55;
                const int m = core_size(n, x);
                Graph core = figure1_core(recipe, m, r, 9);
                CHECK(core.n() == m);
                CHECK(is_kl_free(core, r - 1).free);
                const Graph g = figure1(n, r, x, core).graph;
                CHECK(g.degree(0) == m);
                for (int v = m + 1; v < n; ++v) CHECK(g.degree(v) == n - 2);
                for (int v = 1; v <= m; ++v) CHECK(g.degree(v) == n - m + core.degree(v - 1));
                CHECK(cover_check(g, r) == VertexSet{0});
            }
        }
    }
    CHECK(figure1_core("random", 15, 4, 3) == figure1_core("random", 15, 4, 3));
    CHECK(default_x(0.0) == doctest::Approx(0.5));
    CHECK(default_x(0.5) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("blow-up examples") {
    LabeledInstance k333 = blow_up(Graph::complete(3), 9, 0.0, 1);
    CHECK(k333.graph == complete_multipartite({3, 3, 3}).graph);
    CHECK(min_degree(k333.graph) == 6);
    CHECK(min_degree(blow_up(Graph::cycle(5), 10, 0.0, 1).graph) == 4);

    // With three classes on 10 vertices the best possible minimum degree is 6,
    // below (2/3 - 0.05) * 10, so that epsilon must be refused.
    try {
        blow_up(Graph::complete(3), 10, 0.05, 4);
        FAIL("accepted an unattainable bound");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::budget);
    }
    LabeledInstance odd = blow_up(Graph::complete(3), 10, 0.1, 4);
    std::vector<std::size_t> sizes;
    for (int v = 0; v < 3; ++v) sizes.push_back(odd.find("class" + std::to_string(v))->size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{3, 3, 4});
    CHECK(min_degree(odd.graph) == 6);
    CHECK(6 >= (2.0 / 3.0 - 0.1) * 10);
}

TEST_CASE("blow-up classes are independent and joined exactly along edges") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = oracle::random_graph(6, 0.6, seed);
        if (g.edge_count() == 0) continue;
        const int n = 17 + static_cast<int>(seed % 5);
        LabeledInstance inst;
        try {
            inst = blow_up(g, n, 0.2, seed);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::budget);
            continue;
        }
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < 6; ++v)
            for (Vertex w : *inst.find("class" + std::to_string(v))) owner[static_cast<std::size_t>(w)] = v;
        for (int a = 0; a < n; ++a) {
            CHECK(owner[static_cast<std::size_t>(a)] >= 0);
            for (int b = a + 1; b < n; ++b) {
                const int oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
                CHECK(inst.graph.adjacent(a, b) == (oa != ob && g.adjacent(oa, ob)));
            }
        }
        CHECK(min_degree(inst.graph) >= (double(min_degree(g)) / 6 - 0.2) * n - 1e-9);
    }
}

TEST_CASE("degree pruning examples") {
    PruneResult k20 = degree_prune(Graph::complete(20), 1.0, 0.1);
    CHECK(k20.instance.graph == Graph::complete(20));
    CHECK(k20.deletion_order.empty());
    CHECK_FALSE(k20.guaranteed);
    CHECK(degree_prune(Graph::complete(100), 1.0, 0.1).guaranteed);

    const Graph two_k5 = oracle::disjoint_union(Graph::complete(5), Graph::complete(5));
    PruneResult same = degree_prune(two_k5, 20.0 / 45.0, 0.2);
    CHECK(same.instance.graph == two_k5);

    const Graph k5_isolate = oracle::disjoint_union(Graph::complete(5), Graph(1));
    PruneResult one = degree_prune(k5_isolate, 2.0 / 3.0, 0.1);
    CHECK(one.deletion_order == std::vector<Vertex>{5});
    CHECK(one.instance.graph == Graph::complete(5));
    CHECK_FALSE(one.guaranteed);

    CHECK_THROWS_AS(degree_prune(Graph::cycle(6), 0.9, 0.1), PreconditionError);
    CHECK_THROWS_AS(degree_prune(Graph::complete(5), 0.5, 0.3), Error);
}

TEST_CASE("degree pruning conclusions on random inputs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 40 + static_cast<int>(seed % 20);
        Graph g = oracle::random_graph(n, 0.3 + 0.01 * static_cast<double>(seed % 40), seed);
        const double delta = double(g.edge_count()) / (double(n) * (n - 1) / 2.0);
        const double eta = delta * (0.1 + 0.01 * static_cast<double>(seed % 35));
        PruneResult res = degree_prune(g, delta, eta);
        const int np = res.instance.graph.n();
        CHECK(np == n - static_cast<int>(res.deletion_order.size()));
        CHECK(double(min_degree(res.instance.graph)) >= (delta - eta) * np - 1e-9);
        CHECK(double(np) >= eta * n / 4.0 - 1e-9);
        CHECK(induced_subgraph(g, res.survivors).graph == res.instance.graph);
    }
}

TEST_CASE("K_forbid-free core search") {
    CoreSearchParams edgeless;
    edgeless.m = 10;
    edgeless.forbid = 2;
    CoreSearchResult e = kfree_core_search(edgeless);
    CHECK(e.success);
    CHECK(e.instance.graph.edge_count() == 0);
    CHECK(e.min_degree == 0);

    const Graph witness = c5_blowup(2);
    CHECK(min_degree(witness) == 4);
    CHECK(is_kl_free(witness, 3).free);
    CHECK(oracle::alpha(witness, 2) == 4);

    CoreSearchParams ten;
    ten.m = 10;
    ten.forbid = 3;
    ten.target_mindeg = 0.3;
    ten.alpha_cap = 4;
    ten.seed = 1;
    CoreSearchResult found = kfree_core_search(ten);
    CHECK(found.success);
    CHECK(is_kl_free(found.instance.graph, 3).free);
    CHECK(found.min_degree >= 3);
    CHECK(oracle::alpha(found.instance.graph, 2) <= 4);

    // Every triangle-free graph on 6 vertices has an independent 3-set.
    bool any_small_alpha = false;
    for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
        Graph g = oracle::graph_from_mask(6, mask);
        if (oracle::cliques(g, 3).empty() && oracle::alpha(g, 2) <= 2) any_small_alpha = true;
    }
    CHECK_FALSE(any_small_alpha);

    CoreSearchParams six;
    six.m = 6;
    six.forbid = 3;
    six.alpha_cap = 2;
    six.iterations = 3000;
    CoreSearchResult fail = kfree_core_search(six);
    CHECK_FALSE(fail.success);
    CHECK_FALSE(fail.reason.empty());
}

TEST_CASE("random minimum-degree graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        LabeledInstance inst = random_min_degree(12, 2.0 / 3.0, seed);
        CHECK(min_degree(inst.graph) >= 8);
        CHECK(random_min_degree(12, 2.0 / 3.0, seed).graph == inst.graph);
    }
    CHECK_THROWS_AS(random_min_degree(5, 1.5, 0), Error);
}

TEST_CASE("families round-trip through their names") {
    for (Family f : {Family::multipartite, Family::figure1, Family::blowup, Family::pruned, Family::core_search,
                     Family::random_mindeg})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("spherical"), Error);
}
