#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquelab/cliquelab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0, kNegative = 1, kPrecondition = 2, kUnknown = 3, kIo = 4, kInternal = 5;

struct Failure {
    int code;
    std::string message;
};

int exit_for(clq_status s) {
    switch (s) {
    case CLQ_OK: return kOk;
    case CLQ_ERR_BUDGET: return kUnknown;
    case CLQ_ERR_IO: return kIo;
    case CLQ_ERR_INTERNAL: return kInternal;
    default: return kPrecondition;
    }
}

void check(clq_status s) {
    if (s != CLQ_OK) throw Failure{exit_for(s), std::string(clq_status_name(s)) + ": " + clq_last_error()};
}

class OwnedString {
public:
    OwnedString() = default;
    OwnedString(const OwnedString&) = delete;
    OwnedString& operator=(const OwnedString&) = delete;
    ~OwnedString() { clq_string_free(p_); }
    char** out() { return &p_; }
    std::string str() const { return p_ ? p_ : ""; }
    Json json() const { return Json::parse(str()); }

private:
    char* p_ = nullptr;
};

class GraphHandle {
public:
    GraphHandle() = default;
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    ~GraphHandle() { clq_graph_free(g_); }
    clq_graph** out() { return &g_; }
    const clq_graph* get() const { return g_; }

private:
    clq_graph* g_ = nullptr;
};

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kIo, "cannot read " + path};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) throw Failure{kIo, "cannot write " + path};
}

std::string first_line(const std::string& text) {
    std::string line = text.substr(0, text.find('\n'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

// "0,1,2;3,4,5" -> [[0,1,2],[3,4,5]]
Json parse_rows(const std::string& text) {
    Json rows = Json::array();
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        Json row = Json::array();
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoi(item, &used));
                if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
            } catch (const std::logic_error&) {
                throw Failure{kPrecondition, "cannot parse integer '" + item + "' in '" + text + "'"};
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string join(const Json& values, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].dump();
    }
    return out;
}

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t budget_ms = 0;
    std::uint64_t max_nodes = 0;
    bool json = false;
    int threads = 1;
};

struct GraphInput {
    std::string path = "-";
    std::string format = "graph6";

    void attach(CLI::App* cmd) {
        cmd->add_option("-i,--input", path, "Graph file, '-' for stdin")->capture_default_str();
        cmd->add_option("--format", format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}))->capture_default_str();
    }

    void load(GraphHandle& g) const {
        std::string text = read_all(path);
        if (format == "graph6") text = first_line(text);
        check(clq_graph_parse(text.data(), text.size(), format.c_str(), g.out()));
    }
};

Json budget_request(const Globals& g) {
    Json req = Json::object();
    if (g.max_nodes) req["max_nodes"] = g.max_nodes;
    if (g.budget_ms) req["time_ms"] = g.budget_ms;
    return req;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_gen(const Globals& G, const Json& spec, const std::string& out_path, const std::string& sidecar_path) {
    GraphHandle graph;
    OwnedString sidecar;
    check(clq_generate(spec.dump().c_str(), graph.out(), sidecar.out()));
    const Json side = sidecar.json();
    const std::string g6 = side["graph6"].get<std::string>() + "\n";
    const std::string side_text = side.dump(2) + "\n";
    if (!out_path.empty()) {
        write_all(out_path, g6);
        write_all(sidecar_path.empty() ? out_path + ".json" : sidecar_path, side_text);
    } else if (!sidecar_path.empty()) {
        write_all(sidecar_path, side_text);
    }
    if (G.json) std::cout << side_text;
    else if (out_path.empty()) std::cout << g6;
    if (side.contains("success") && !side["success"].get<bool>()) {
        std::cerr << "core search failed: " << side.value("reason", std::string{}) << "\n";
        return kUnknown;
    }
    return kOk;
}

int verdict_exit(const std::string& v) {
    if (v == "true" || v == "holds" || v == "holds-on-sample") return kOk;
    if (v == "false" || v == "fails") return kNegative;
    return kUnknown;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cliquelab: clique factors, l-independence and absorption experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals G;
    app.add_option("--seed", G.seed, "Master seed")->capture_default_str();
    app.add_option("--budget-ms", G.budget_ms, "Wall-clock budget per search (0 = none, not reproducible)");
    app.add_option("--max-nodes", G.max_nodes, "Node budget per search (0 = none)");
    app.add_flag("--json", G.json, "Machine-readable output");
    app.add_option("--threads", G.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);

    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a labelled instance");
    std::string family, core = "random", sizes_text, source_path, gen_out, gen_sidecar;
    int gen_n = 0, gen_r = 0, gen_ell = 2, forbid = 3, alpha_cap = -1, retries = 256;
    double x = 0, rho = 0, epsilon = 0, delta = 0, eta = 0, fraction = 0, target_mindeg = 0;
    std::uint64_t iterations = 20000;
    gen->add_option("--family", family, "multipartite | figure1 | blowup | pruned | core-search | random-mindeg")->required();
    gen->add_option("--n", gen_n, "Vertex count");
    gen->add_option("--r", gen_r, "Clique order (parts for multipartite)");
    gen->add_option("--ell", gen_ell, "l for core search");
    auto* x_opt = gen->add_option("--x", x, "Core fraction for figure1");
    gen->add_option("--rho", rho, "Assumed Ramsey-Turan density; x defaults to 1/(2-rho)");
    gen->add_option("--sizes", sizes_text, "Part sizes, comma separated");
    gen->add_option("--core", core, "figure1 core recipe: edgeless | turan | c5-blowup | random");
    gen->add_option("--source", source_path, "graph6 input for blowup, pruned or an explicit figure1 core");
    gen->add_option("--epsilon", epsilon);
    gen->add_option("--delta", delta);
    gen->add_option("--eta", eta);
    gen->add_option("--fraction", fraction, "Minimum degree fraction for random-mindeg");
    gen->add_option("--forbid", forbid, "Forbidden clique order for core search");
    gen->add_option("--target-mindeg", target_mindeg);
    gen->add_option("--alpha-cap", alpha_cap);
    gen->add_option("--iterations", iterations);
    gen->add_option("--retries", retries);
    gen->add_option("-o,--output", gen_out, "Write graph6 here and the sidecar to <output>.json");
    gen->add_option("--sidecar", gen_sidecar, "Sidecar path");
    gen->callback([&] {
        action = [&] {
            Json spec{{"family", family}, {"seed", G.seed}};
            if (gen_n) spec["n"] = gen_n;
            if (gen_r) spec["r"] = gen_r;
            spec["ell"] = gen_ell;
            if (x_opt->count()) spec["x"] = x;
            spec["rho"] = rho;
            if (!sizes_text.empty()) spec["sizes"] = parse_rows(sizes_text).at(0);
            spec["core"] = core;
            if (!source_path.empty()) spec["source"] = first_line(read_all(source_path));
            spec["epsilon"] = epsilon;
            spec["delta"] = delta;
            spec["eta"] = eta;
            spec["fraction"] = fraction;
            spec["forbid"] = forbid;
            spec["target_mindeg"] = target_mindeg;
            spec["alpha_cap"] = alpha_cap;
            spec["iterations"] = iterations;
            spec["retries"] = retries;
            return run_gen(G, spec, gen_out, gen_sidecar);
        };
    });

    // alpha
    auto* alpha = app.add_subcommand("alpha", "l-independence number");
    GraphInput alpha_in;
    alpha_in.attach(alpha);
    int ell = 2, restarts = 16, threshold = -1;
    bool exact = false, bounds = false;
    alpha->add_option("--ell", ell, "l >= 2")->capture_default_str();
    auto* exact_flag = alpha->add_flag("--exact", exact, "Exact branch-and-bound (n <= 30)");
    alpha->add_flag("--bounds", bounds, "Greedy bounds")->excludes(exact_flag);
    alpha->add_option("--budget", restarts, "Greedy restarts in bounds mode");
    alpha->add_option("--threshold", threshold, "Decide alpha_l <= M");
    alpha->callback([&] {
        action = [&] {
            GraphHandle g;
            alpha_in.load(g);
            Json req{{"ell", ell}, {"restarts", restarts}, {"seed", G.seed},
                     {"mode", exact ? "exact" : bounds ? "bounds" : "auto"}};
            if (threshold >= 0) req["threshold"] = threshold;
            OwnedString out;
            check(clq_alpha(g.get(), req.dump().c_str(), out.out()));
            const Json res = out.json();
            if (G.json) {
                print_json(res);
            } else if (res.contains("threshold")) {
                std::cout << "alpha_" << ell << " <= " << threshold << ": " << (res["at_most"].get<bool>() ? "yes" : "no")
                          << "\n";
                if (!res["witness"].empty()) std::cout << "witness: " << join(res["witness"]) << "\n";
            } else {
                if (res["exact"].get<bool>()) std::cout << "alpha_" << ell << " = " << res["value"] << " (exact)\n";
                else std::cout << "alpha_" << ell << " in [" << res["lower"] << ", " << res["upper"] << "]\n";
                std::cout << "witness: " << join(res["witness"]) << "\n";
            }
            return kOk;
        };
    });

    // cliques
    auto* cliques = app.add_subcommand("cliques", "Enumerate r-cliques");
    GraphInput cliques_in;
    cliques_in.attach(cliques);
    int clique_r = 3;
    std::int64_t cap = -1;
    cliques->add_option("--r", clique_r, "Clique order")->required();
    cliques->add_option("--cap", cap, "Stop after this many cliques");
    cliques->callback([&] {
        action = [&] {
            GraphHandle g;
            cliques_in.load(g);
            Json req{{"r", clique_r}};
            if (cap >= 0) req["cap"] = cap;
            OwnedString out;
            check(clq_cliques(g.get(), req.dump().c_str(), out.out()));
            const Json res = out.json();
            if (G.json) {
                std::cout << res["cliques"].dump() << "\n";
            } else {
                for (const auto& c : res["cliques"]) std::cout << join(c) << "\n";
                if (res["truncated"].get<bool>()) std::cerr << "truncated after " << res["count"] << " cliques\n";
            }
            return kOk;
        };
    });

    // factor
    auto* factor = app.add_subcommand("factor", "Decide whether a K_r-factor exists");
    GraphInput factor_in;
    factor_in.attach(factor);
    int factor_r = 3;
    std::uint64_t max_candidates = 2000000;
    factor->add_option("--r", factor_r, "Clique order")->required();
    factor->add_option("--max-candidates", max_candidates, "Clique count beyond which the outcome is unknown");
    factor->callback([&] {
        action = [&] {
            GraphHandle g;
            factor_in.load(g);
            Json req = budget_request(G);
            req["r"] = factor_r;
            req["max_candidates"] = max_candidates;
            OwnedString out;
            check(clq_factor(g.get(), req.dump().c_str(), out.out()));
            const Json res = out.json();
            const std::string outcome = res["outcome"];
            if (G.json) {
                print_json(res);
            } else {
                std::cout << outcome;
                if (res.contains("note")) std::cout << ": " << res["note"].get<std::string>();
                std::cout << "\n";
                if (res.contains("factor"))
                    for (const auto& part : res["factor"]) std::cout << join(part) << "\n";
            }
            return outcome == "factor" ? kOk : outcome == "no-factor" ? kNegative : kUnknown;
        };
    });

    // tiling
    auto* tiling = app.add_subcommand("tiling", "Maximum K_r-tiling, or a greedy cross tiling between X and Y");
    GraphInput tiling_in;
    tiling_in.attach(tiling);
    int tiling_r = 3, cross_a = -1;
    std::string cross_x, cross_y;
    tiling->add_option("--r", tiling_r, "Clique order")->required();
    tiling->add_option("--x", cross_x, "X vertices, comma separated");
    tiling->add_option("--y", cross_y, "Y vertices, comma separated");
    tiling->add_option("--a", cross_a, "Vertices of each clique inside X");
    tiling->callback([&] {
        action = [&] {
            GraphHandle g;
            tiling_in.load(g);
            Json req = budget_request(G);
            req["r"] = tiling_r;
            if (cross_a >= 0) {
                req["a"] = cross_a;
                req["x"] = cross_x.empty() ? Json::array() : parse_rows(cross_x).at(0);
                req["y"] = cross_y.empty() ? Json::array() : parse_rows(cross_y).at(0);
            }
            OwnedString out;
            check(clq_tiling(g.get(), req.dump().c_str(), out.out()));
            const Json res = out.json();
            if (G.json) {
                print_json(res);
            } else {
                std::cout << "tiling of " << res["size"] << " K_" << tiling_r << "s covering " << res["covered"]
                          << " vertices" << (res["exact"].get<bool>() ? " (maximum)" : " (not certified maximum)") << "\n";
                for (const auto& part : res["parts"]) std::cout << join(part) << "\n";
            }
            return kOk;
        };
    });

    // cover
    auto* cover = app.add_subcommand("cover", "Vertices outside W lying in no K_r of G - W");
    GraphInput cover_in;
    cover_in.attach(cover);
    int cover_r = 3;
    std::string cover_w;
    cover->add_option("--r", cover_r, "Clique order")->required();
    cover->add_option("--w", cover_w, "Removed vertices, comma separated");
    cover->callback([&] {
        action = [&] {
            GraphHandle g;
            cover_in.load(g);
            Json req{{"r", cover_r}, {"w", cover_w.empty() ? Json::array() : parse_rows(cover_w).at(0)}};
            OwnedString out;
            check(clq_cover(g.get(), req.dump().c_str(), out.out()));
            const Json res = out.json();
            if (G.json) print_json(res);
            else std::cout << "uncovered (" << res["size"] << "): " << join(res["uncovered"]) << "\n";
            return kOk;
        };
    });

    // absorb
    auto* absorb = app.add_subcommand("absorb", "Absorbers, reachability, index censuses and transferrals");
    absorb->require_subcommand(1);
    absorb->fallthrough();
    GraphInput absorb_in;
    int ab_r = 3, ab_t = 1, ab_u = -1, ab_v = -1, ab_i = 0, ab_j = 1, ab_k = 0;
    std::string ab_s, ab_a, ab_parts, ab_census;
    double xi = 0, beta = 0;
    std::uint64_t samples = 2000, exhaustive_limit = 20000, reach_cap = 100000;
    auto absorb_action = [&](const std::string& name, bool needs_graph) {
        action = [&, name, needs_graph] {
            GraphHandle g;
            if (needs_graph) absorb_in.load(g);
            Json req = budget_request(G);
            req["r"] = ab_r;
            req["t"] = ab_t;
            req["seed"] = G.seed;
            if (!ab_s.empty()) req["s"] = parse_rows(ab_s).at(0);
            req["a"] = ab_a.empty() ? Json::array() : parse_rows(ab_a).at(0);
            req["xi"] = xi;
            req["samples"] = samples;
            req["exhaustive_limit"] = exhaustive_limit;
            req["u"] = ab_u;
            req["v"] = ab_v;
            req["cap"] = reach_cap;
            if (!ab_parts.empty()) req["parts"] = parse_rows(ab_parts);
            req["beta"] = beta;
            req["i"] = ab_i;
            req["j"] = ab_j;
            if (!needs_graph) {
                req["k"] = ab_k;
                req["census"] = parse_rows(ab_census);
            }
            OwnedString out;
            check(clq_absorb(needs_graph ? g.get() : nullptr, name.c_str(), req.dump().c_str(), out.out()));
            const Json res = out.json();
            if (G.json || name == "census" || name == "transferral") print_json(res);
            if (res.contains("verdict")) {
                if (!G.json) std::cout << res["verdict"].get<std::string>() << "\n";
                return verdict_exit(res["verdict"]);
            }
            if (res.contains("status")) {
                if (!G.json) print_json(res);
                return verdict_exit(res["status"]);
            }
            if (name == "reach" && !G.json) {
                std::cout << res["size"] << " disjoint reachable sets" << (res["maximal"].get<bool>() ? "" : " (not maximal)")
                          << "\n";
                for (const auto& s : res["sets"]) std::cout << join(s) << "\n";
            }
            return kOk;
        };
    };
    auto* ab_verify = absorb->add_subcommand("verify", "Check that A absorbs the r-set S");
    auto* ab_absorbing = absorb->add_subcommand("absorbing", "Check that A absorbs every admissible R with |R| <= xi n");
    auto* ab_reach = absorb->add_subcommand("reach", "Greedy family of disjoint K_r-reachable sets for u, v");
    auto* ab_cen = absorb->add_subcommand("census", "Index vectors realised by ceil(beta n) disjoint K_r's");
    auto* ab_trans = absorb->add_subcommand("transferral", "Detect the transferral u_i - u_j");
    for (auto* sub : {ab_verify, ab_absorbing, ab_reach, ab_cen, ab_trans}) {
        sub->add_option("--r", ab_r, "Clique order");
        sub->add_option("-i,--input", absorb_in.path, "Graph file, '-' for stdin");
        sub->add_option("--format", absorb_in.format, "graph6 or edgelist");
    }
    ab_verify->add_option("--s", ab_s, "The r-set S")->required();
    ab_verify->add_option("--a", ab_a, "The absorber A")->required();
    ab_verify->add_option("--t", ab_t, "|A| = r t")->required();
    ab_absorbing->add_option("--a", ab_a, "The absorbing set A")->required();
    ab_absorbing->add_option("--xi", xi, "Size fraction of R")->required();
    ab_absorbing->add_option("--samples", samples);
    ab_absorbing->add_option("--exhaustive-limit", exhaustive_limit);
    ab_reach->add_option("--u", ab_u)->required();
    ab_reach->add_option("--v", ab_v)->required();
    ab_reach->add_option("--t", ab_t)->required();
    ab_reach->add_option("--cap", reach_cap, "Candidate cap per size");
    for (auto* sub : {ab_cen, ab_trans}) {
        sub->add_option("--parts", ab_parts, "Partition, e.g. 0,1,2;3,4,5");
        sub->add_option("--beta", beta);
    }
    ab_trans->add_option("--from", ab_i, "Part index i of u_i - u_j (0-based)");
    ab_trans->add_option("--to", ab_j, "Part index j of u_i - u_j (0-based)");
    ab_trans->add_option("--census", ab_census, "Explicit census vectors, e.g. 1,1,1;2,1,0 (no graph needed)");
    ab_trans->add_option("--k", ab_k, "Dimension of an explicit census");
    ab_verify->callback([&] { absorb_action("verify", true); });
    ab_absorbing->callback([&] { absorb_action("absorbing", true); });
    ab_reach->callback([&] { absorb_action("reach", true); });
    ab_cen->callback([&] { absorb_action("census", true); });
    ab_trans->callback([&] { absorb_action("transferral", ab_census.empty()); });

    // wpart
    auto* wpart = app.add_subcommand("wpart", "Weighted reduced graphs: inequality, condition E, partition search");
    wpart->require_subcommand(1);
    wpart->fallthrough();
    std::string weights_path, c_text, mu_text, set_text;
    int wp_t = 2;
    std::uint64_t wp_retries = 1000, wp_trials = 10000;
    bool wp_exact = false;
    auto wpart_action = [&](const std::string& name) {
        action = [&, name] {
            Json req = Json::parse(read_all(weights_path));
            req["c"] = c_text;
            req["mu"] = mu_text;
            req["t"] = wp_t;
            req["seed"] = G.seed;
            req["retries"] = wp_retries;
            req["trials"] = wp_trials;
            req["exact"] = wp_exact;
            if (!set_text.empty()) req["set"] = parse_rows(set_text).at(0);
            OwnedString out;
            check(clq_wpart(name.c_str(), req.dump().c_str(), out.out()));
            const Json res = out.json();
            print_json(res);
            if (res.contains("pass")) return res["pass"].get<bool>() ? kOk : kNegative;
            if (res.contains("holds")) return res["holds"].get<bool>() ? kOk : kNegative;
            if (res.contains("success")) return res["success"].get<bool>() ? kOk : kUnknown;
            return kOk;
        };
    };
    for (auto [name, help] : {std::pair{"check", "Pair inequality over all ordered pairs"},
                              std::pair{"condition", "Condition E on one set"},
                              std::pair{"search", "Random partition search for good (t+1)-sets"},
                              std::pair{"estimate", "Monte Carlo estimate of the bad-set probability"}}) {
        auto* sub = wpart->add_subcommand(name, help);
        sub->add_option("-w,--weights", weights_path, "JSON {k, triples: [[i, j, d], ...]}")->required();
        sub->add_option("--c", c_text, "c as a decimal or p/q")->required();
        sub->add_option("--mu", mu_text, "mu as a decimal or p/q")->required();
        sub->add_flag("--exact", wp_exact, "Exact rational arithmetic");
        if (std::string(name) == "condition") sub->add_option("--set", set_text, "Members of S")->required();
        if (std::string(name) == "search" || std::string(name) == "estimate") sub->add_option("--t", wp_t)->required();
        if (std::string(name) == "search") sub->add_option("--retries", wp_retries);
        if (std::string(name) == "estimate") sub->add_option("--trials", wp_trials);
        std::string captured = name;
        sub->callback([&, captured] { wpart_action(captured); });
    }

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Generate, measure and solve a parameter grid");
    std::string sw_family = "figure1", sw_core = "random", sw_out;
    std::vector<int> sw_n, sw_r, sw_ell{2};
    std::vector<double> sw_x, sw_frac;
    double sw_rho = 0;
    int sw_seeds = 1;
    std::uint64_t sw_nodes = 2000000;
    sweep->add_option("--family", sw_family, "figure1 | multipartite | random-mindeg")->capture_default_str();
    sweep->add_option("--n", sw_n, "Vertex counts")->delimiter(',')->required();
    sweep->add_option("--r", sw_r, "Clique orders")->delimiter(',')->required();
    sweep->add_option("--ell", sw_ell, "l values")->delimiter(',');
    sweep->add_option("--x", sw_x, "figure1 core fractions")->delimiter(',');
    sweep->add_option("--degree-fraction", sw_frac, "random-mindeg degree fractions")->delimiter(',');
    sweep->add_option("--rho", sw_rho);
    sweep->add_option("--core", sw_core);
    sweep->add_option("--seeds", sw_seeds, "Seeds per cell");
    sweep->add_option("--factor-nodes", sw_nodes, "Node budget per factor search")->capture_default_str();
    sweep->add_option("-o,--output", sw_out, "Output prefix for .csv, .json and .ckpt");
    sweep->callback([&] {
        action = [&] {
            Json cfg{{"family", sw_family}, {"n", sw_n},         {"r", sw_r},         {"ell", sw_ell},
                     {"x", sw_x},           {"degree_fraction", sw_frac},           {"rho", sw_rho},
                     {"core", sw_core},     {"seeds", sw_seeds}, {"seed", G.seed},    {"max_nodes", sw_nodes},
                     {"threads", G.threads}, {"output", sw_out}};
            if (G.budget_ms) cfg["time_ms"] = G.budget_ms;
            OwnedString out;
            check(clq_sweep(cfg.dump().c_str(), out.out()));
            if (G.json) {
                std::cout << out.str();
                return kOk;
            }
            const Json res = out.json();
            std::cout << res["records"].size() << " records";
            if (!sw_out.empty()) std::cout << " written to " << sw_out << ".csv and " << sw_out << ".json";
            std::cout << "\n";
            return kOk;
        };
    });

    // report
    auto* rep = app.add_subcommand("report", "Aggregate a sweep CSV per cell");
    std::string rep_in = "-", rep_format = "text";
    rep->add_option("-i,--input", rep_in, "Sweep CSV, '-' for stdin");
    rep->add_option("--format", rep_format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
    rep->callback([&] {
        action = [&] {
            const std::string csv = read_all(rep_in);
            OwnedString out;
            check(clq_report(csv.c_str(), G.json ? "json" : rep_format.c_str(), out.out()));
            std::cout << out.str();
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kPrecondition;
    }
    try {
        return action ? action() : kOk;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}
