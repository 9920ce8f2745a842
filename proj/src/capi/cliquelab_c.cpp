#include "cliquelab/cliquelab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "json_codec.hpp"

using namespace cliquelab;
using capi::ArgumentError;
using capi::Json;
using capi::Request;

struct clq_graph {
    Graph graph;
};

namespace {

thread_local std::string last_error;

clq_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parse: return CLQ_ERR_PARSE;
    case ErrorKind::range: return CLQ_ERR_RANGE;
    case ErrorKind::self_loop: return CLQ_ERR_SELF_LOOP;
    case ErrorKind::domain: return CLQ_ERR_DOMAIN;
    case ErrorKind::precondition: return CLQ_ERR_PRECONDITION;
    case ErrorKind::budget: return CLQ_ERR_BUDGET;
    case ErrorKind::io: return CLQ_ERR_IO;
    case ErrorKind::internal: return CLQ_ERR_INTERNAL;
    }
    return CLQ_ERR_INTERNAL;
}

std::string with_witness(const PreconditionError& e) {
    std::string msg = e.what();
    if (e.witness().empty()) return msg;
    msg += " (witness:";
    for (int v : e.witness()) msg += " " + std::to_string(v);
    return msg + ")";
}

template <class Body>
clq_status guarded(Body&& body) {
    last_error.clear();
    try {
        body();
        return CLQ_OK;
    } catch (const PreconditionError& e) {
        last_error = with_witness(e);
        return CLQ_ERR_PRECONDITION;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const ArgumentError& e) {
        last_error = e.what();
        return CLQ_ERR_ARGUMENT;
    } catch (const Json::exception& e) {
        last_error = e.what();
        return CLQ_ERR_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CLQ_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CLQ_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return CLQ_ERR_INTERNAL;
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const Json& j, char** out) { *out = duplicate(j.dump()); }

void require(bool ok, const char* what) {
    if (!ok) throw ArgumentError(what);
}

const Graph& graph_of(const clq_graph* g) {
    require(g != nullptr, "graph handle is null");
    return g->graph;
}

GraphFormat format_of(const char* name) { return parse_format(name ? name : "graph6"); }

FactorOptions factor_options(const Request& req) {
    return {req.budget(), req.unsigned_integer("max_candidates", FactorOptions{}.max_candidates)};
}

Partition partition_of(const Graph& g, const Request& req) {
    std::vector<VertexSet> parts;
    for (auto& row : req.integer_rows("parts")) parts.push_back(std::move(row));
    return Partition(g.n(), std::move(parts));
}

Graph source_graph(const Request& req) {
    return parse_graph(req.text("source"), GraphFormat::graph6);
}

Json generate(const Request& req, Graph& graph) {
    ConstructionSpec spec;
    spec.family = parse_family(req.text("family"));
    spec.seed = req.unsigned_integer("seed", 0);
    Json extra = Json::object();
    LabeledInstance inst;
    switch (spec.family) {
    case Family::multipartite:
        inst = req.has("sizes") ? complete_multipartite(req.integers("sizes"))
                                : balanced_multipartite(req.integer("n"), req.integer("r"));
        break;
    case Family::figure1: {
        const int n = req.integer("n");
        const int r = req.integer("r");
        const double rho = req.real("rho", 0.0);
        const double x = req.has("x") ? req.real("x") : default_x(rho);
        const std::string recipe = req.text("core", "random");
        const Graph core = req.has("source") ? source_graph(req) : figure1_core(recipe, core_size(n, x), r, spec.seed);
        inst = figure1(n, r, x, core);
        inst.provenance.rho = rho;
        inst.provenance.seed = spec.seed;
        if (!req.has("source")) inst.provenance.core_recipe = recipe;
        break;
    }
    case Family::blowup:
        inst = blow_up(source_graph(req), req.integer("n"), req.real("epsilon"), spec.seed,
                       req.integer("retries", 256));
        break;
    case Family::pruned: {
        PruneResult pr = degree_prune(source_graph(req), req.real("delta"), req.real("eta"));
        extra["survivors"] = pr.survivors;
        extra["deletion_order"] = pr.deletion_order;
        extra["guaranteed"] = pr.guaranteed;
        inst = std::move(pr.instance);
        break;
    }
    case Family::core_search: {
        CoreSearchParams p;
        p.m = req.integer("n");
        p.ell = req.integer("ell", p.ell);
        p.forbid = req.integer("forbid", p.forbid);
        p.target_mindeg = req.real("target_mindeg", p.target_mindeg);
        p.alpha_cap = req.integer("alpha_cap", p.alpha_cap);
        p.seed = spec.seed;
        p.iterations = req.unsigned_integer("iterations", p.iterations);
        CoreSearchResult res = kfree_core_search(p);
        extra["success"] = res.success;
        extra["alpha"] = res.alpha;
        extra["energy"] = res.energy;
        extra["iterations"] = res.iterations;
        if (!res.reason.empty()) extra["reason"] = res.reason;
        inst = std::move(res.instance);
        break;
    }
    case Family::random_mindeg:
        inst = random_min_degree(req.integer("n"), req.real("fraction"), spec.seed);
        break;
    }
    Json sidecar = capi::to_json(inst);
    for (auto& [k, v] : extra.items()) sidecar[k] = v;
    graph = std::move(inst.graph);
    return sidecar;
}

Json absorb(const Graph* g, const std::string& action, const Request& req) {
    const FactorOptions options = factor_options(req);
    if (action == "transferral" && g == nullptr) {
        const int k = req.integer("k");
        const auto census = req.integer_rows("census");
        const int i = req.integer("i"), j = req.integer("j");
        const auto lattice = IntegerLattice::generated_by(k, census);
        return capi::to_json(has_transferral(census, k, i, j), lattice);
    }
    require(g != nullptr, "graph handle is null");
    const int r = req.integer("r");
    if (action == "verify") {
        const Verdict v = verify_absorber(*g, req.integers("s"), req.integers("a"), r, req.integer("t"), options);
        return Json{{"verdict", to_string(v)}};
    }
    if (action == "absorbing") {
        AbsorbingSample sample;
        sample.exhaustive_limit = req.unsigned_integer("exhaustive_limit", sample.exhaustive_limit);
        sample.samples = req.unsigned_integer("samples", sample.samples);
        sample.seed = req.unsigned_integer("seed", sample.seed);
        return capi::to_json(verify_absorbing_set(*g, req.integers("a"), r, req.real("xi"), sample, options));
    }
    if (action == "reach") {
        return capi::to_json(reachable_packing(*g, req.integer("u"), req.integer("v"), r, req.integer("t"), options,
                                               req.unsigned_integer("cap", 100000)));
    }
    if (action == "census" || action == "transferral") {
        const Partition p = partition_of(*g, req);
        const Census census = index_census(*g, p, r, req.real("beta"), options.budget);
        if (action == "census") return capi::to_json(census);
        const auto vectors = census.vectors();
        const auto lattice = IntegerLattice::generated_by(p.k(), vectors);
        Json out = capi::to_json(has_transferral(vectors, p.k(), req.integer("i"), req.integer("j")), lattice);
        out["census_exact"] = census.exact;
        out["census"] = vectors;
        return out;
    }
    throw ArgumentError("unknown absorb action '" + action + "'");
}

Json wpart(const std::string& action, const Request& req) {
    const WeightedGraph w = capi::weighted_graph(req);
    const Number c = req.number("c");
    const Number mu = req.number("mu");
    const Arithmetic arithmetic = req.boolean("exact", false) ? Arithmetic::exact : Arithmetic::floating;
    if (action == "check") return capi::to_json(check_inequality_one(w, c, mu, arithmetic));
    if (action == "condition") return capi::to_json(check_condition_e(w, req.integers("set"), c, mu, arithmetic));
    if (action == "search") {
        return capi::to_json(random_partition_search(w, c, mu, req.integer("t"), req.unsigned_integer("seed", 0),
                                                     req.unsigned_integer("retries", 1000), arithmetic));
    }
    if (action == "estimate") {
        return capi::to_json(estimate_bad_probability(w, c, mu, req.integer("t"), req.unsigned_integer("trials", 10000),
                                                      req.unsigned_integer("seed", 0)));
    }
    throw ArgumentError("unknown wpart action '" + action + "'");
}

} // namespace

extern "C" {

const char* clq_version(void) { return "1.0.0"; }

const char* clq_status_name(clq_status status) {
    switch (status) {
    case CLQ_OK: return "ok";
    case CLQ_ERR_PARSE: return "parse";
    case CLQ_ERR_RANGE: return "range";
    case CLQ_ERR_SELF_LOOP: return "self-loop";
    case CLQ_ERR_DOMAIN: return "domain";
    case CLQ_ERR_PRECONDITION: return "precondition";
    case CLQ_ERR_BUDGET: return "budget";
    case CLQ_ERR_IO: return "io";
    case CLQ_ERR_INTERNAL: return "internal";
    case CLQ_ERR_ARGUMENT: return "argument";
    }
    return "unknown";
}

const char* clq_last_error(void) { return last_error.c_str(); }

void clq_string_free(char* s) { std::free(s); }

clq_status clq_graph_parse(const char* text, size_t length, const char* format, clq_graph** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new clq_graph{parse_graph(std::string_view(text, length), format_of(format))};
    });
}

clq_status clq_graph_from_edges(int n, const int* pairs, size_t edge_count, clq_graph** out) {
    return guarded([&] {
        require(out != nullptr && (pairs != nullptr || edge_count == 0), "null argument");
        if (n < 0) throw domain_error("vertex count must be >= 0");
        std::vector<Edge> edges;
        edges.reserve(edge_count);
        for (size_t e = 0; e < edge_count; ++e) edges.emplace_back(pairs[2 * e], pairs[2 * e + 1]);
        *out = new clq_graph{Graph(n, edges)};
    });
}

void clq_graph_free(clq_graph* g) { delete g; }

int clq_graph_order(const clq_graph* g) { return g ? g->graph.n() : 0; }

int64_t clq_graph_size(const clq_graph* g) { return g ? g->graph.edge_count() : 0; }

int clq_graph_adjacent(const clq_graph* g, int u, int v) {
    if (!g || u < 0 || v < 0 || u >= g->graph.n() || v >= g->graph.n()) return 0;
    return g->graph.adjacent(u, v) ? 1 : 0;
}

clq_status clq_graph_min_degree(const clq_graph* g, int* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = min_degree(graph_of(g));
    });
}

clq_status clq_graph_serialize(const clq_graph* g, const char* format, char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = duplicate(serialize(graph_of(g), format_of(format)));
    });
}

clq_status clq_cliques(const clq_graph* g, const char* options, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        const Request req(options);
        std::optional<std::size_t> cap;
        if (req.has("cap")) cap = req.unsigned_integer("cap");
        emit(capi::to_json(enumerate_r_cliques(graph_of(g), req.integer("r"), cap)), out_json);
    });
}

clq_status clq_alpha(const clq_graph* g, const char* options, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        const Graph& graph = graph_of(g);
        const Request req(options);
        const int ell = req.integer("ell", 2);
        if (req.has("threshold")) {
            const int m = req.integer("threshold");
            Json out = capi::to_json(alpha_ell_at_most(graph, ell, m));
            out["threshold"] = m;
            emit(out, out_json);
            return;
        }
        const std::string mode = req.text("mode", "auto");
        const bool exact = mode == "exact" || (mode == "auto" && graph.n() <= kAlphaExactLimit);
        if (mode != "auto" && mode != "exact" && mode != "bounds")
            throw ArgumentError("alpha mode must be auto, exact or bounds");
        const AlphaResult res = exact ? alpha_ell_exact(graph, ell)
                                      : alpha_ell_bounds(graph, ell, {req.integer("restarts", 16),
                                                                      req.unsigned_integer("seed", 0)});
        emit(capi::to_json(res), out_json);
    });
}

clq_status clq_factor(const clq_graph* g, const char* options, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        const Request req(options);
        emit(capi::to_json(has_kr_factor(graph_of(g), req.integer("r"), factor_options(req))), out_json);
    });
}

clq_status clq_tiling(const clq_graph* g, const char* options, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        const Request req(options);
        const Graph& graph = graph_of(g);
        const int r = req.integer("r");
        if (req.has("a")) {
            Json out = capi::to_json(cross_tiling(graph, req.integers("x"), req.integers("y"), r, req.integer("a")));
            out["a"] = req.integer("a");
            emit(out, out_json);
            return;
        }
        emit(capi::to_json(max_kr_tiling(graph, r, req.budget())), out_json);
    });
}

clq_status clq_cover(const clq_graph* g, const char* options, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        const Request req(options);
        const auto uncovered = cover_check(graph_of(g), req.integer("r"), req.integers("w", std::vector<int>{}));
        emit(Json{{"r", req.integer("r")}, {"size", uncovered.size()}, {"uncovered", uncovered}}, out_json);
    });
}

clq_status clq_absorb(const clq_graph* g, const char* action, const char* options, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr && action != nullptr, "null argument");
        emit(absorb(g ? &g->graph : nullptr, action, Request(options)), out_json);
    });
}

clq_status clq_generate(const char* spec, clq_graph** out_graph, char** out_sidecar) {
    return guarded([&] {
        require(out_graph != nullptr && out_sidecar != nullptr, "null argument");
        Graph graph;
        const Json sidecar = generate(Request(spec), graph);
        std::string text = sidecar.dump();
        auto handle = std::make_unique<clq_graph>(clq_graph{std::move(graph)});
        *out_sidecar = duplicate(text);
        *out_graph = handle.release();
    });
}

clq_status clq_wpart(const char* action, const char* request, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr && action != nullptr, "null argument");
        emit(wpart(action, Request(request)), out_json);
    });
}

clq_status clq_sweep(const char* config, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        const auto records = run_sweep(capi::sweep_config(Request(config)));
        *out_json = duplicate(records_to_json(records));
    });
}

clq_status clq_report(const char* sweep_csv, const char* format, char** out) {
    return guarded([&] {
        require(out != nullptr && sweep_csv != nullptr, "null argument");
        const auto rows = report(parse_records_csv(sweep_csv));
        const std::string f = format ? format : "text";
        if (f == "text") *out = duplicate(report_text(rows));
        else if (f == "csv") *out = duplicate(report_csv(rows));
        else if (f == "json") *out = duplicate(capi::to_json(rows).dump() + "\n");
        else throw ArgumentError("report format must be text, csv or json");
    });
}

} // extern "C"
