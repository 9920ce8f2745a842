#include <doctest.h>

#include "cliquelab/cliques.hpp"
#include "cliquelab/constructions.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/independence.hpp"
#include "support.hpp"

using namespace cliquelab;

namespace {

void check_witness(const Graph& g, int ell, const AlphaResult& res) {
    CHECK(static_cast<int>(res.witness.size()) == res.lower);
    CHECK(is_kl_free(induced_subgraph(g, res.witness).graph, ell).free);
    CHECK(res.lower <= res.upper);
}

} // namespace

TEST_CASE("exact alpha on small named graphs") {
    CHECK(alpha_ell_exact(Graph::complete(9), 3).value() == 2);
    CHECK(alpha_ell_exact(complete_multipartite({4, 4}).graph, 3).value() == 8);
    CHECK(alpha_ell_exact(Graph::cycle(5), 2).value() == 2);
    CHECK(oracle::alpha(Graph::cycle(5), 2) == 2);
    CHECK(alpha_ell_exact(Graph::petersen(), 2).value() == 4);
    CHECK(oracle::alpha(Graph::petersen(), 2) == 4);
    AlphaResult r = alpha_ell_exact(Graph::petersen(), 2);
    CHECK(r.exact);
    CHECK(r.lower == r.upper);
    check_witness(Graph::petersen(), 2, r);
}

TEST_CASE("alpha_l of K_n is l - 1") {
    for (int n = 2; n <= 12; ++n)
        for (int ell = 2; ell <= n; ++ell) CHECK(alpha_ell_exact(Graph::complete(n), ell).value() == ell - 1);
}

TEST_CASE("exact alpha matches brute force, witnesses are maximal") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 6 + static_cast<int>(seed % 10);
        Graph g = oracle::random_graph(n, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
        for (int ell = 2; ell <= 4; ++ell) {
            AlphaResult res = alpha_ell_exact(g, ell);
            CHECK(res.value() == oracle::alpha(g, ell));
            check_witness(g, ell, res);
            for (int v = 0; v < n; ++v) {
                if (std::binary_search(res.witness.begin(), res.witness.end(), v)) continue;
                VertexSet bigger = res.witness;
                bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
                CHECK_FALSE(is_kl_free(induced_subgraph(g, bigger).graph, ell).free);
            }
        }
    }
}

TEST_CASE("exact mode refuses large graphs; l < 2 refused") {
    CHECK_THROWS_AS(alpha_ell_exact(Graph::complete(31), 2), PreconditionError);
    CHECK_THROWS_AS(alpha_ell_exact(Graph::complete(5), 1), Error);
    CHECK_THROWS_AS(alpha_ell_bounds(Graph::complete(5), 1), Error);
}

TEST_CASE("bounds mode brackets the exact value") {
    AlphaResult k9 = alpha_ell_bounds(Graph::complete(9), 3);
    CHECK(k9.lower >= 2);
    CHECK(k9.lower <= 2);
    CHECK(k9.upper >= 2);
    CHECK_FALSE(k9.exact);

    const Graph bip = complete_multipartite({5, 6}).graph;
    AlphaResult tf = alpha_ell_bounds(bip, 3);
    CHECK(tf.lower == 11);
    CHECK(tf.upper == 11);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = oracle::random_graph(20, 0.5, seed);
        AlphaResult b = alpha_ell_bounds(g, 2, {8, seed});
        const int exact = alpha_ell_exact(g, 2).value();
        CHECK(b.lower <= exact);
        CHECK(exact <= b.upper);
        check_witness(g, 2, b);
    }
}

TEST_CASE("bounds mode is a pure function of the seed") {
    Graph g = oracle::random_graph(60, 0.5, 7);
    AlphaResult a = alpha_ell_bounds(g, 3, {8, 42});
    AlphaResult b = alpha_ell_bounds(g, 3, {8, 42});
    CHECK(a.witness == b.witness);
    CHECK(a.upper == b.upper);
}

TEST_CASE("threshold predicate agrees with the exact value") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = oracle::random_graph(14, 0.5, seed + 500);
        for (int ell = 2; ell <= 3; ++ell) {
            const int a = alpha_ell_exact(g, ell).value();
            for (int m = 0; m <= 14; ++m) {
                AlphaThreshold t = alpha_ell_at_most(g, ell, m);
                CHECK(t.at_most == (a <= m));
                if (!t.at_most) {
                    CHECK(static_cast<int>(t.witness.size()) > m);
                    CHECK(is_kl_free(induced_subgraph(g, t.witness).graph, ell).free);
                }
            }
        }
    }
}
