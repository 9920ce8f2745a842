#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cliquelab/cliquelab.h"

using nlohmann::json;

namespace {

// Owns a string returned by the library.
struct Owned {
    char* p = nullptr;
    ~Owned() { clq_string_free(p); }
    json parse() const { return json::parse(p); }
};

struct GraphHandle {
    clq_graph* g = nullptr;
    ~GraphHandle() { clq_graph_free(g); }
};

clq_graph* parse(const std::string& text, const char* format) {
    clq_graph* g = nullptr;
    REQUIRE(clq_graph_parse(text.data(), text.size(), format, &g) == CLQ_OK);
    return g;
}

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(clq_version()).size() > 0);
    CHECK(std::string(clq_status_name(CLQ_OK)) == "ok");
    CHECK(std::string(clq_status_name(CLQ_ERR_BUDGET)) == "budget");
}

TEST_CASE("graph handles") {
    GraphHandle h{parse("3\n0 1\n1 2\n", "edge-list")};
    CHECK(clq_graph_order(h.g) == 3);
    CHECK(clq_graph_size(h.g) == 2);
    CHECK(clq_graph_adjacent(h.g, 0, 1) == 1);
    CHECK(clq_graph_adjacent(h.g, 0, 2) == 0);
    int delta = -1;
    CHECK(clq_graph_min_degree(h.g, &delta) == CLQ_OK);
    CHECK(delta == 1);
    Owned g6;
    CHECK(clq_graph_serialize(h.g, "graph6", &g6.p) == CLQ_OK);
    CHECK(std::string(g6.p) == "Bg");

    const int pairs[] = {0, 1, 1, 2, 2, 0};
    GraphHandle tri;
    CHECK(clq_graph_from_edges(3, pairs, 3, &tri.g) == CLQ_OK);
    CHECK(clq_graph_size(tri.g) == 3);
}

TEST_CASE("errors come back as codes with a message") {
    clq_graph* g = nullptr;
    const std::string loop = "2\n0 0\n";
    CHECK(clq_graph_parse(loop.data(), loop.size(), "edge-list", &g) == CLQ_ERR_SELF_LOOP);
    CHECK(g == nullptr);
    const std::string range = "2\n0 5\n";
    CHECK(clq_graph_parse(range.data(), range.size(), "edge-list", &g) == CLQ_ERR_RANGE);
    const std::string junk = "0 x\n";
    CHECK(clq_graph_parse(junk.data(), junk.size(), "edge-list", &g) == CLQ_ERR_PARSE);
    CHECK(std::string(clq_last_error()).size() > 0);
    CHECK(clq_graph_parse(junk.data(), junk.size(), "dot", &g) == CLQ_ERR_DOMAIN);

    GraphHandle h{parse("D~{", "graph6")};
    Owned out;
    CHECK(clq_factor(h.g, "{\"r\": 1}", &out.p) == CLQ_ERR_DOMAIN);
    CHECK(clq_factor(h.g, "{not json", &out.p) == CLQ_ERR_PARSE);
    CHECK(clq_factor(h.g, "{\"r\": \"three\"}", &out.p) == CLQ_ERR_ARGUMENT);
    CHECK(out.p == nullptr);
}

TEST_CASE("analysis entry points") {
    GraphHandle k6{parse("E~~w", "graph6")};
    REQUIRE(clq_graph_order(k6.g) == 6);
    REQUIRE(clq_graph_size(k6.g) == 15);

    Owned cliques;
    REQUIRE(clq_cliques(k6.g, "{\"r\": 3}", &cliques.p) == CLQ_OK);
    CHECK(cliques.parse()["count"] == 20);

    Owned factor;
    REQUIRE(clq_factor(k6.g, "{\"r\": 3}", &factor.p) == CLQ_OK);
    json f = factor.parse();
    CHECK(f["outcome"] == "factor");
    CHECK(f["factor"].size() == 2);

    Owned alpha;
    REQUIRE(clq_alpha(k6.g, "{\"ell\": 3}", &alpha.p) == CLQ_OK);
    CHECK(alpha.parse()["value"] == 2);

    Owned cover;
    REQUIRE(clq_cover(k6.g, "{\"r\": 3}", &cover.p) == CLQ_OK);

    Owned tiling;
    REQUIRE(clq_tiling(k6.g, "{\"r\": 4}", &tiling.p) == CLQ_OK);
    CHECK(tiling.parse()["size"] == 1);
}

TEST_CASE("budget exhaustion is an unknown outcome, not an error") {
    clq_graph* g = nullptr;
    Owned spec;
    REQUIRE(clq_generate("{\"family\": \"multipartite\", \"sizes\": [2, 4, 3]}", &g, &spec.p) == CLQ_OK);
    GraphHandle h{g};
    Owned out;
    REQUIRE(clq_factor(h.g, "{\"r\": 3, \"max_nodes\": 1}", &out.p) == CLQ_OK);
    CHECK(out.parse()["outcome"] == "unknown");
}

TEST_CASE("generation with sidecar") {
    clq_graph* g = nullptr;
    Owned sidecar;
    REQUIRE(clq_generate("{\"family\": \"figure1\", \"n\": 20, \"r\": 3, \"x\": 0.5, \"core\": \"edgeless\"}", &g,
                         &sidecar.p) == CLQ_OK);
    GraphHandle h{g};
    json s = sidecar.parse();
    CHECK(s["n"] == 20);
    CHECK(s["designated"]["apex"] == json::array({0}));
    Owned cover;
    REQUIRE(clq_cover(h.g, "{\"r\": 3}", &cover.p) == CLQ_OK);
    CHECK(cover.parse()["uncovered"] == json::array({0}));

    clq_graph* bad = nullptr;
    Owned none;
    CHECK(clq_generate("{\"family\": \"figure1\", \"n\": 20, \"r\": 3, \"x\": 1.0}", &bad, &none.p) != CLQ_OK);
    CHECK(bad == nullptr);
}

TEST_CASE("absorption entry points") {
    GraphHandle k9{parse("H~~~~~~", "graph6")};
    REQUIRE(clq_graph_size(k9.g) == 36);
    Owned census;
    REQUIRE(clq_absorb(k9.g, "census", "{\"r\": 3, \"parts\": [[0,1,2],[3,4,5],[6,7,8]], \"beta\": 0.1111111111111111}", &census.p) ==
            CLQ_OK);
    CHECK(census.parse()["count"] == 10);

    Owned trans;
    REQUIRE(clq_absorb(nullptr, "transferral", "{\"k\": 3, \"census\": [[3,0,0],[2,1,0]], \"i\": 0, \"j\": 1}",
                       &trans.p) == CLQ_OK);
    CHECK(trans.parse()["pairwise"] == true);

    Owned verify;
    REQUIRE(clq_absorb(k9.g, "verify", "{\"r\": 3, \"t\": 2, \"s\": [0,1,2], \"a\": [3,4,5,6,7,8]}", &verify.p) == CLQ_OK);
    CHECK(verify.parse()["verdict"] == "true");

    Owned bad;
    CHECK(clq_absorb(k9.g, "teleport", "{}", &bad.p) == CLQ_ERR_ARGUMENT);
}

TEST_CASE("weighted entry points") {
    Owned check;
    REQUIRE(clq_wpart("check", "{\"k\": 40, \"uniform\": 1, \"c\": \"1/2\", \"mu\": \"3/10\", \"exact\": true}",
                      &check.p) == CLQ_OK);
    CHECK(check.parse()["pass"] == true);

    Owned search;
    REQUIRE(clq_wpart("search", "{\"k\": 30, \"uniform\": 1, \"c\": 0.5, \"mu\": 0.3, \"t\": 2, \"seed\": 1}",
                      &search.p) == CLQ_OK);
    json s = search.parse();
    CHECK(s["success"] == true);
    CHECK(s["sets"].size() == 10);
}

TEST_CASE("sweep and report are deterministic") {
    const char* config = "{\"family\": \"figure1\", \"n\": [20, 30], \"r\": [3], \"x\": [0.5], \"seeds\": 2}";
    Owned a, b;
    REQUIRE(clq_sweep(config, &a.p) == CLQ_OK);
    REQUIRE(clq_sweep(config, &b.p) == CLQ_OK);
    CHECK(std::string(a.p) == std::string(b.p));
    json records = a.parse()["records"];
    CHECK(records.size() == 4);
    for (const auto& r : records) CHECK(r["outcome"] == "no-factor");

    Owned empty;
    CHECK(clq_sweep("{\"family\": \"figure1\", \"n\": [], \"r\": [3]}", &empty.p) == CLQ_ERR_DOMAIN);

    Owned rep;
    REQUIRE(clq_report("# cliquelab sweep schema v1\n", "csv", &rep.p) == CLQ_OK);
}
