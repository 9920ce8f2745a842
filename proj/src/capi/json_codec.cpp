#include "json_codec.hpp"

#include <cmath>

namespace cliquelab::capi {

Request::Request(const char* text) {
    if (text == nullptr || *text == '\0') {
        body_ = Json::object();
        return;
    }
    try {
        body_ = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.byte, "request is not valid JSON");
    }
    if (!body_.is_object()) throw ArgumentError("request must be a JSON object");
}

bool Request::has(const char* key) const { return body_.contains(key) && !body_.at(key).is_null(); }

const Json& Request::at(const char* key) const {
    if (!has(key)) throw ArgumentError(std::string("missing field '") + key + "'");
    return body_.at(key);
}

const Json& Request::raw(const char* key) const { return at(key); }

int Request::integer(const char* key, std::optional<int> fallback) const {
    if (!has(key) && fallback) return *fallback;
    const Json& v = at(key);
    if (!v.is_number_integer()) throw ArgumentError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::uint64_t Request::unsigned_integer(const char* key, std::optional<std::uint64_t> fallback) const {
    if (!has(key) && fallback) return *fallback;
    const Json& v = at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw ArgumentError(std::string("field '") + key + "' must be a non-negative integer");
}

double Request::real(const char* key, std::optional<double> fallback) const {
    if (!has(key) && fallback) return *fallback;
    const Json& v = at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return Number::parse(v.get<std::string>()).value;
    throw ArgumentError(std::string("field '") + key + "' must be a number");
}

bool Request::boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const Json& v = at(key);
    if (!v.is_boolean()) throw ArgumentError(std::string("field '") + key + "' must be true or false");
    return v.get<bool>();
}

std::string Request::text(const char* key, std::optional<std::string> fallback) const {
    if (!has(key) && fallback) return *fallback;
    const Json& v = at(key);
    if (!v.is_string()) throw ArgumentError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<int> Request::integers(const char* key, std::optional<std::vector<int>> fallback) const {
    if (!has(key) && fallback) return *fallback;
    const Json& v = at(key);
    if (!v.is_array()) throw ArgumentError(std::string("field '") + key + "' must be an array of integers");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw ArgumentError(std::string("field '") + key + "' must be an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<double> Request::reals(const char* key, std::optional<std::vector<double>> fallback) const {
    if (!has(key) && fallback) return *fallback;
    const Json& v = at(key);
    if (!v.is_array()) throw ArgumentError(std::string("field '") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) throw ArgumentError(std::string("field '") + key + "' must be an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<std::vector<int>> Request::integer_rows(const char* key) const {
    const Json& v = at(key);
    if (!v.is_array()) throw ArgumentError(std::string("field '") + key + "' must be an array of integer arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : v) {
        if (!row.is_array()) throw ArgumentError(std::string("field '") + key + "' must be an array of integer arrays");
        auto& dst = out.emplace_back();
        for (const auto& e : row) {
            if (!e.is_number_integer())
                throw ArgumentError(std::string("field '") + key + "' must be an array of integer arrays");
            dst.push_back(e.get<int>());
        }
    }
    return out;
}

Number Request::number(const char* key) const {
    const Json& v = at(key);
    if (v.is_string()) return Number::parse(v.get<std::string>());
    if (v.is_number_integer()) return Number::parse(std::to_string(v.get<std::int64_t>()));
    if (v.is_number()) return Number(v.get<double>());
    throw ArgumentError(std::string("field '") + key + "' must be a number or a \"p/q\" string");
}

Budget Request::budget() const {
    return {unsigned_integer("max_nodes", 0), unsigned_integer("time_ms", 0)};
}

Json stats_json(const SearchStats& s) { return Json{{"nodes", s.nodes}}; }

Json to_json(const CliqueList& list) {
    return Json{{"r", list.r}, {"count", list.cliques.size()}, {"truncated", list.truncated}, {"cliques", list.cliques}};
}

Json to_json(const AlphaResult& a) {
    Json out;
    out["exact"] = a.exact;
    if (a.exact) out["value"] = a.value();
    else out["interval"] = {a.lower, a.upper};
    out["lower"] = a.lower;
    out["upper"] = a.upper;
    out["witness"] = a.witness;
    out["stats"] = stats_json(a.stats);
    return out;
}

Json to_json(const AlphaThreshold& a) {
    return Json{{"at_most", a.at_most}, {"witness", a.witness}, {"stats", stats_json(a.stats)}};
}

Json to_json(const Tiling& t) {
    return Json{{"r", t.r},           {"size", t.size()},       {"covered", t.covered.size()},
                {"exact", t.exact},   {"parts", t.parts},       {"stats", stats_json(t.stats)}};
}

Json to_json(const FactorCertificate& c) {
    Json out{{"outcome", to_string(c.outcome)}, {"candidates", c.candidates}};
    if (c.outcome == FactorOutcome::factor) out["factor"] = c.tiling.parts;
    if (!c.note.empty()) out["note"] = c.note;
    out["stats"] = stats_json(c.stats);
    return out;
}

Json to_json(const ConstructionSpec& s) {
    Json out{{"family", to_string(s.family)}, {"n", s.n}};
    if (s.r) out["r"] = s.r;
    if (s.ell) out["ell"] = s.ell;
    if (s.x != 0.0) out["x"] = s.x;
    if (s.rho != 0.0) out["rho"] = s.rho;
    out["seed"] = s.seed;
    if (!s.sizes.empty()) out["sizes"] = s.sizes;
    if (!s.core_recipe.empty()) out["core"] = s.core_recipe;
    if (s.epsilon != 0.0) out["epsilon"] = s.epsilon;
    if (s.delta != 0.0) out["delta"] = s.delta;
    if (s.eta != 0.0) out["eta"] = s.eta;
    if (!s.source_graph6.empty()) out["source"] = s.source_graph6;
    return out;
}

Json to_json(const LabeledInstance& inst) {
    Json designated = Json::object();
    for (const auto& set : inst.designated) designated[set.name] = set.members;
    Json metrics = Json::object();
    for (const auto& [k, v] : inst.metrics) metrics[k] = v;
    return Json{{"graph6", to_graph6(inst.graph)},
                {"n", inst.graph.n()},
                {"edges", inst.graph.edge_count()},
                {"min_degree", inst.graph.n() ? min_degree(inst.graph) : 0},
                {"designated", designated},
                {"provenance", to_json(inst.provenance)},
                {"metrics", metrics}};
}

Json to_json(const Census& c) {
    Json entries = Json::array();
    for (const auto& e : c.entries) entries.push_back({{"index", e.index}, {"packing", e.packing}});
    return Json{{"r", c.r},           {"required", c.required},   {"exact", c.exact},
                {"count", c.entries.size()}, {"vectors", c.vectors()}, {"entries", entries},
                {"undecided", c.undecided}};
}

Json to_json(const TransferralResult& t, const IntegerLattice& lattice) {
    Json out{{"pairwise", t.pairwise}, {"in_lattice", t.in_lattice}};
    if (t.pairwise) {
        out["s"] = t.s;
        out["t"] = t.t;
    }
    out["lattice_rank"] = lattice.rank();
    out["lattice_basis"] = lattice.basis();
    return out;
}

Json to_json(const ReachableFamily& f) {
    return Json{{"size", f.sets.size()}, {"maximal", f.maximal}, {"sets", f.sets}};
}

Json to_json(const AbsorbingCheck& c) {
    Json out{{"status", to_string(c.status)}, {"checked", c.checked}, {"qualifying", c.qualifying}};
    if (c.status == AbsorbingStatus::fails) out["counterexample"] = c.counterexample;
    return out;
}

Json to_json(const InequalityResult& r) {
    Json out{{"pass", r.pass}, {"i", r.i}, {"j", r.j}, {"slack", r.slack}};
    if (!r.exact_slack.empty()) out["exact_slack"] = r.exact_slack;
    return out;
}

Json to_json(const ConditionEResult& r) {
    Json out{{"holds", r.holds}};
    if (!r.holds) {
        out["i"] = r.i;
        out["j"] = r.j;
        out["sum"] = r.sum;
    }
    return out;
}

Json to_json(const PartitionSearchResult& r) {
    return Json{{"success", r.success}, {"trials", r.trials},   {"z", r.z},
                {"required", r.required}, {"best_q", r.best_q}, {"sets", r.sets}};
}

Json to_json(const BadSetEstimate& r) {
    return Json{{"estimate", r.estimate}, {"interval", {r.lower, r.upper}}, {"bad", r.bad},
                {"trials", r.trials},     {"bound", r.bound}};
}

WeightedGraph weighted_graph(const Request& req) {
    const int k = req.integer("k");
    WeightedGraph w = req.has("uniform") ? WeightedGraph::uniform(k, req.number("uniform")) : WeightedGraph(k);
    if (!req.has("triples")) return w;
    const Json& triples = req.raw("triples");
    if (!triples.is_array()) throw ArgumentError("field 'triples' must be an array of [i, j, d] entries");
    for (const auto& t : triples) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
            throw ArgumentError("each triple must be [i, j, d] with integer i, j");
        Request weight(Json{{"d", t[2]}});
        w.set(t[0].get<int>(), t[1].get<int>(), weight.number("d"));
    }
    return w;
}

SweepConfig sweep_config(const Request& req) {
    SweepConfig c;
    c.family = req.text("family", c.family);
    c.n_values = req.integers("n");
    c.r_values = req.integers("r");
    c.ell_values = req.integers("ell", c.ell_values);
    c.x_values = req.reals("x", c.x_values);
    c.degree_fractions = req.reals("degree_fraction", c.degree_fractions);
    c.rho = req.real("rho", c.rho);
    c.core = req.text("core", c.core);
    c.seeds = req.integer("seeds", c.seeds);
    c.base_seed = req.unsigned_integer("seed", c.base_seed);
    if (req.has("max_nodes") || req.has("time_ms")) c.factor_budget = req.budget();
    c.max_candidates = req.unsigned_integer("max_candidates", c.max_candidates);
    c.alpha_restarts = req.integer("restarts", c.alpha_restarts);
    c.threads = req.integer("threads", c.threads);
    c.output = req.text("output", std::string{});
    return c;
}

Json to_json(const std::vector<ReportRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row{{"family", r.family},       {"n", r.n},
                 {"r", r.r},                 {"ell", r.ell},
                 {"x", r.x},                 {"degree_fraction", r.degree_fraction},
                 {"instances", r.instances}, {"factor", r.factor},
                 {"no_factor", r.no_factor}, {"unknown", r.unknown}};
        if (std::isnan(r.factor_rate)) row["factor_rate"] = nullptr;
        else row["factor_rate"] = r.factor_rate;
        row["mean_alpha_ratio"] = r.mean_alpha_ratio;
        row["mean_min_degree_ratio"] = r.mean_min_degree_ratio;
        out.push_back(row);
    }
    return out;
}

} // namespace cliquelab::capi
