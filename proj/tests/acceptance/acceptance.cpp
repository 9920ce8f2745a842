// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cliquelab/absorption.hpp"
#include "cliquelab/cliquelab.h"
#include "cliquelab/constructions.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/factor.hpp"
#include "cliquelab/rng.hpp"
#include "cliquelab/weighted.hpp"
#include "support.hpp"

using namespace cliquelab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        o.pass = false;
        o.detail += "; exceeded " + std::to_string(static_cast<int>(limit_seconds)) + " s";
    }
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    return o.pass;
}

std::string ratio(long good, long total) { return std::to_string(good) + "/" + std::to_string(total); }

// ---------------------------------------------------------------------------

Outcome factor_equivalence() {
    long agree = 0, total = 0;
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < graphs; ++mask) {
            const Graph g = oracle::graph_from_mask(n, mask);
            for (int r : {2, 3}) {
                ++total;
                const FactorCertificate c = has_kr_factor(g, r);
                const bool expected = oracle::has_factor(g, r);
                bool ok = c.outcome == (expected ? FactorOutcome::factor : FactorOutcome::no_factor);
                if (ok && expected) ok = is_valid_tiling(g, c.tiling) && static_cast<int>(c.tiling.covered.size()) == n;
                agree += ok;
            }
        }
    }
    return {agree == total, ratio(agree, total) + " (graph, r) pairs agree with brute-force partitions"};
}

Outcome hajnal_szemeredi() {
    std::mt19937_64 rng(derive_seed(2, 0));
    std::bernoulli_distribution coin(0.8);
    long found = 0, accepted = 0, drawn = 0;
    while (accepted < 1000) {
        std::vector<Edge> e;
        for (int u = 0; u < 12; ++u)
            for (int v = u + 1; v < 12; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        Graph g(12, e);
        ++drawn;
        if (min_degree(g) < 8) continue;
        ++accepted;
        const FactorCertificate c = has_kr_factor(g, 3);
        found += c.outcome == FactorOutcome::factor && is_valid_tiling(g, c.tiling) && c.tiling.covered.size() == 12;
    }

    const Graph k444 = complete_multipartite({4, 4, 4}).graph;
    const FactorCertificate tight = has_kr_factor(k444, 3);
    const bool tight_ok = tight.outcome == FactorOutcome::factor && is_valid_tiling(k444, tight.tiling);

    // Deleting a single edge at vertex 0 lowers the minimum degree to 7.
    std::vector<Edge> e = k444.edges();
    e.erase(std::find(e.begin(), e.end(), Edge{0, 4}));
    const Graph minus(12, e);
    const FactorCertificate sub = has_kr_factor(minus, 3);
    const bool sub_decided = sub.outcome != FactorOutcome::unknown &&
                             (sub.outcome == FactorOutcome::factor) == oracle::has_factor(minus, 3);

    // Isolating vertex 0 from the third part leaves it in no transversal triangle.
    std::vector<Edge> f;
    for (auto [u, v] : k444.edges())
        if (!(u == 0 && v >= 8)) f.emplace_back(u, v);
    const Graph isolated(12, f);
    const FactorCertificate iso = has_kr_factor(isolated, 3);
    const bool iso_decided = iso.outcome != FactorOutcome::unknown &&
                             (iso.outcome == FactorOutcome::factor) == oracle::has_factor(isolated, 3);

    std::ostringstream d;
    d << "factor in " << ratio(found, accepted) << " conditioned graphs (" << drawn << " drawn); K_{4,4,4} "
      << to_string(tight.outcome) << "; K_{4,4,4} minus one edge (min degree " << min_degree(minus) << ") "
      << to_string(sub.outcome) << "; vertex 0 cut from a part (min degree " << min_degree(isolated) << ", in "
      << cover_check(isolated, 3).size() << " uncovered vertices) " << to_string(iso.outcome);
    return {found == accepted && tight_ok && sub_decided && iso_decided, d.str()};
}

Outcome figure1_property() {
    long good = 0, total = 0, unknown = 0;
    for (int r : {3, 4})
        for (int n : {20, 30, 40})
            for (int s = 0; s < 5; ++s) {
                ++total;
                const std::uint64_t seed = derive_seed(derive_seed(3, static_cast<std::uint64_t>(r * 100 + n)), s);
                const double x = default_x(0.0);
                const Graph core = figure1_core("random", core_size(n, x), r, seed);
                const LabeledInstance inst = figure1(n, r, x, core);
                const bool cover_ok = cover_check(inst.graph, r) == VertexSet{0} && *inst.find("apex") == VertexSet{0};
                const FactorCertificate c = has_kr_factor(inst.graph, r);
                if (c.outcome == FactorOutcome::unknown) ++unknown;
                good += cover_ok && c.outcome != FactorOutcome::factor;
            }
    return {good == total, ratio(good, total) + " instances with cover {apex} and no factor; " + std::to_string(unknown) +
                               " searches did not complete"};
}

Outcome prune_property() {
    std::mt19937_64 rng(derive_seed(4, 0));
    long good = 0, deletions = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = std::uniform_int_distribution<int>(16, 90)(rng);
        const int dense = std::uniform_int_distribution<int>(n / 3, n)(rng);
        const double p = std::uniform_real_distribution<double>(0.3, 0.95)(rng);
        const double q = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::bernoulli_distribution(v < dense ? p : q)(rng)) e.emplace_back(u, v);
        const Graph g(n, e);
        if (g.edge_count() == 0) {
            --i;
            continue;
        }
        const double density = double(g.edge_count()) / (double(n) * (n - 1) / 2.0);
        const double delta = density * std::uniform_real_distribution<double>(0.8, 1.0)(rng);
        const double eta = delta * std::uniform_real_distribution<double>(0.05, 0.49)(rng);
        const PruneResult res = degree_prune(g, delta, eta);
        const Graph& h = res.instance.graph;
        const int np = h.n();
        deletions += static_cast<long>(res.deletion_order.size());
        bool ok = np == n - static_cast<int>(res.deletion_order.size());
        ok = ok && np > 0 && double(oracle::min_degree(h)) >= (delta - eta) * np - 1e-9;
        ok = ok && double(np) >= eta * n / 4.0 - 1e-9;
        ok = ok && induced_subgraph(g, res.survivors).graph == h;
        good += ok;
    }
    return {good == 1000, ratio(good, 1000) + " instances meet both conclusions (" + std::to_string(deletions) +
                              " deletions in total)"};
}

Outcome blowup_property() {
    std::mt19937_64 rng(derive_seed(5, 0));
    long good = 0, accepted = 0, refused = 0, divisible = 0;
    while (accepted < 500) {
        const int np = std::uniform_int_distribution<int>(2, 8)(rng);
        Graph g = oracle::random_graph(np, 0.6, rng());
        if (oracle::min_degree(g) == 0) continue;
        const bool divide = std::bernoulli_distribution(0.5)(rng);
        const int mult = std::uniform_int_distribution<int>(1, 8)(rng);
        const int n = divide ? np * mult : np * mult + std::uniform_int_distribution<int>(1, np - 1)(rng);
        if (np == 1 && !divide) continue;
        const double eps = divide ? 0.0 : std::uniform_real_distribution<double>(0.02, 0.3)(rng);
        LabeledInstance inst;
        try {
            inst = blow_up(g, n, eps, rng());
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::budget) throw;
            ++refused;
            continue;
        }
        ++accepted;
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        bool ok = inst.graph.n() == n;
        for (int v = 0; v < np; ++v) {
            const VertexSet& cls = *inst.find("class" + std::to_string(v));
            ok = ok && (int(cls.size()) == n / np || int(cls.size()) == n / np + 1);
            for (Vertex w : cls) owner[static_cast<std::size_t>(w)] = v;
        }
        for (int a = 0; ok && a < n; ++a)
            for (int b = a + 1; ok && b < n; ++b) {
                const int oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
                ok = oa >= 0 && ob >= 0 && inst.graph.adjacent(a, b) == (oa != ob && g.adjacent(oa, ob));
            }
        const int got = oracle::min_degree(inst.graph);
        ok = ok && double(got) >= (double(oracle::min_degree(g)) / np - eps) * n - 1e-9;
        if (divide) {
            ++divisible;
            ok = ok && got == oracle::min_degree(g) * (n / np);
        }
        good += ok;
    }
    return {good == accepted, ratio(good, accepted) + " accepted blow-ups meet the bound (" + std::to_string(divisible) +
                                  " divisible, exact); " + std::to_string(refused) + " refused after retries"};
}

// Lattice points in [-box, box]^k reachable from 0 by steps of +-generator.
std::set<std::vector<int>> lattice_ball(int k, const std::vector<IndexVector>& gens, int box) {
    std::set<std::vector<int>> seen{std::vector<int>(static_cast<std::size_t>(k), 0)};
    std::queue<std::vector<int>> todo;
    todo.push(*seen.begin());
    while (!todo.empty()) {
        const std::vector<int> p = todo.front();
        todo.pop();
        for (const auto& g : gens)
            for (int sign : {1, -1}) {
                std::vector<int> q = p;
                bool inside = true;
                for (std::size_t c = 0; c < q.size(); ++c) {
                    q[c] += sign * g[c];
                    inside = inside && std::abs(q[c]) <= box;
                }
                if (inside && seen.insert(q).second) todo.push(q);
            }
    }
    return seen;
}

Outcome absorption_suite() {
    std::vector<std::string> failed;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failed.push_back(what);
    };
    for (int r : {2, 3, 4}) {
        VertexSet s = oracle::all_vertices(r), a;
        for (int v = r; v < 2 * r; ++v) a.push_back(v);
        expect(verify_absorber(Graph::complete(2 * r), s, a, r, 1) == Verdict::yes, "K_2r absorber r=" + std::to_string(r));
    }
    for (int r : {3, 4, 5})
        expect(reachable_packing(Graph::complete(r + 2), 0, 1, r, 1).sets.size() == 1, "K_r+2 reach r=" + std::to_string(r));
    expect(reachable_packing(Graph::complete(10), 0, 1, 4, 1).sets.size() == 2, "K_10 reach r=4");
    expect(reachable_packing(Graph::complete(8), 0, 1, 3, 1).sets.size() == 3, "K_8 reach r=3");
    expect(verify_absorbing_set(Graph::complete(12), std::vector<Vertex>{0, 1, 2, 3, 4, 5}, 3, 0.5).status ==
               AbsorbingStatus::holds,
           "K_12 absorbing");
    expect(verify_absorbing_set(Graph::cycle(9), std::vector<Vertex>{0, 1, 2}, 3, 0.0).status == AbsorbingStatus::fails,
           "C_9 absorbing");

    const Graph k9 = Graph::complete(9);
    const Partition p(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    const Census census = index_census(k9, p, 3, 1.0 / 9.0);
    std::map<IndexVector, std::vector<VertexSet>> groups;
    for (const auto& c : oracle::cliques(k9, 3)) groups[index_vector(c, p)].push_back(c);
    std::vector<IndexVector> expected;
    for (const auto& [iv, cl] : groups)
        if (oracle::max_disjoint(cl, 9) >= 1) expected.push_back(iv);
    expect(expected.size() == 10 && census.vectors() == expected, "K_9 census");

    std::mt19937_64 rng(derive_seed(6, 0));
    long violations = 0, checks = 0, witnessed = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 3;
        std::vector<IndexVector> vectors;
        const int count = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int c = 0; c < count; ++c) {
            IndexVector v(k, 0);
            for (int i = 0; i < 3; ++i) ++v[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, k - 1)(rng))];
            vectors.push_back(v);
        }
        const auto ball = lattice_ball(k, vectors, 15);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                ++checks;
                const TransferralResult t = has_transferral(vectors, k, i, j);
                std::vector<int> target(k, 0);
                target[static_cast<std::size_t>(i)] = 1;
                target[static_cast<std::size_t>(j)] = -1;
                bool ok = t.in_lattice == (ball.count(target) > 0);
                if (t.pairwise) {
                    ++witnessed;
                    IndexVector diff(k);
                    for (int c = 0; c < k; ++c)
                        diff[static_cast<std::size_t>(c)] = t.s[static_cast<std::size_t>(c)] - t.t[static_cast<std::size_t>(c)];
                    ok = ok && t.in_lattice && diff == IndexVector(target.begin(), target.end());
                    ok = ok && std::count(vectors.begin(), vectors.end(), t.s) && std::count(vectors.begin(), vectors.end(), t.t);
                }
                violations += !ok;
            }
    }
    expect(violations == 0, "transferral vs lattice");

    std::string d = failed.empty() ? "all definition examples verify" : "failed:";
    for (const auto& f : failed) d += " " + f + ";";
    d += "; K_9 census " + std::to_string(census.vectors().size()) + " vectors vs oracle " + std::to_string(expected.size()) +
         "; transferral " + std::to_string(violations) + " violations in " + std::to_string(checks) + " checks (" +
         std::to_string(witnessed) + " pairwise witnesses)";
    return {failed.empty(), d};
}

Number frac(int p, int q) { return Number::parse(std::to_string(p) + "/" + std::to_string(q)); }

Outcome weighted_suite() {
    long agree = 0, total = 0;
    for (int k : {3, 5, 10, 24, 40, 60})
        for (int wn = 0; wn <= 20; ++wn)
            for (int cn = 0; cn < 20; cn += 3)
                for (int mn : {1, 2, 5, 9, 15}) {
                    const Rational w(wn, 20), c(cn, 20), mu(mn, 20);
                    const Rational slack = (k - 2) * w * (w - c - mu / 6) - mu * k / 24;
                    const InequalityResult res = check_inequality_one(WeightedGraph::uniform(k, frac(wn, 20)),
                                                                      frac(cn, 20), frac(mn, 20), Arithmetic::exact);
                    ++total;
                    agree += res.pass == (slack >= 0) && res.exact_slack == slack.str();
                }

    std::mt19937_64 rng(derive_seed(7, 0));
    long runs = 0, verified = 0;
    std::uint64_t max_trials = 0;
    while (runs < 100) {
        const int k = std::uniform_int_distribution<int>(20, 60)(rng);
        const int t = std::uniform_int_distribution<int>(2, 5)(rng);
        WeightedGraph w(k);
        std::uniform_real_distribution<double> d(0.6, 1.0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) w.set(i, j, Number(d(rng)));
        const Number c(0.4), mu(0.2);
        if (!check_inequality_one(w, c, mu).pass) continue;
        ++runs;
        const PartitionSearchResult res = random_partition_search(w, c, mu, t, rng(), 1000);
        max_trials = std::max(max_trials, res.trials);
        const double bound = (1.0 - 0.2 / (8.0 * (t + 1))) * double(k / (t + 1));
        bool ok = res.success && double(res.sets.size()) >= bound - 1e-9;
        std::set<int> used;
        for (const auto& s : res.sets) {
            ok = ok && static_cast<int>(s.size()) == t + 1 && check_condition_e(w, s, c, mu).holds;
            for (int v : s) ok = ok && used.insert(v).second;
        }
        verified += ok;
    }
    return {agree == total && verified == runs,
            ratio(agree, total) + " uniform instances match the closed-form slack; " + ratio(verified, runs) +
                " searches re-verify and meet the Q bound (at most " + std::to_string(max_trials) + " trials)"};
}

// --- determinism -----------------------------------------------------------

std::string take(char* p) {
    std::string s = p ? p : "";
    clq_string_free(p);
    return s;
}

std::string capi_pipeline() {
    std::string log;
    auto step = [&](clq_status s, const std::string& what) {
        if (s != CLQ_OK) throw std::runtime_error(what + ": " + clq_last_error());
    };
    for (const char* spec : {R"({"family":"figure1","n":30,"r":3,"x":0.55,"seed":11})",
                             R"({"family":"random-mindeg","n":15,"fraction":0.7,"seed":5})",
                             R"({"family":"blowup","source":"Dhc","n":23,"epsilon":0.2,"seed":9})"}) {
        clq_graph* g = nullptr;
        char* sidecar = nullptr;
        step(clq_generate(spec, &g, &sidecar), "generate");
        log += take(sidecar);
        char* out = nullptr;
        step(clq_graph_serialize(g, "graph6", &out), "serialize");
        log += take(out);
        step(clq_alpha(g, R"({"ell":2,"mode":"bounds","seed":3})", &out), "alpha");
        log += take(out);
        step(clq_factor(g, R"({"r":3})", &out), "factor");
        log += take(out);
        step(clq_cover(g, R"({"r":3})", &out), "cover");
        log += take(out);
        clq_graph_free(g);
    }
    char* sweep = nullptr;
    step(clq_sweep(R"({"family":"random-mindeg","n":[12,15],"r":[3],"degree_fraction":[0.6,0.7],"seeds":3,"seed":4,"threads":2})",
                   &sweep),
         "sweep");
    log += take(sweep);
    char* wp = nullptr;
    step(clq_wpart("estimate", R"({"k":30,"uniform":0.9,"c":0.4,"mu":0.2,"t":3,"trials":500,"seed":8})", &wp), "wpart");
    log += take(wp);
    return log;
}

#ifdef CLIQUELAB_CLI
std::string shell(const std::string& cmd) {
    std::string out;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) throw std::runtime_error("cannot run " + cmd);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int status = pclose(p);
    out += "\n[status " + std::to_string(status) + "]\n";
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string cli_pipeline(const fs::path& dir) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cli = std::string("\"") + CLIQUELAB_CLI + "\"";
    const std::string g = (dir / "g.g6").string(), side = (dir / "g.json").string(), sw = (dir / "sweep").string();
    std::string log;
    log += shell(cli + " --seed 21 gen --family figure1 --n 30 --r 3 --x 0.55 -o " + g + " --sidecar " + side);
    log += slurp(g) + slurp(side);
    log += shell(cli + " --json alpha -i " + g + " --ell 2 --bounds");
    log += shell(cli + " --json factor -i " + g + " --r 3");
    log += shell(cli + " cover -i " + g + " --r 3");
    log += shell(cli + " --seed 4 --threads 2 sweep --family figure1 --n 20,30 --r 3,4 --x 0.5 --seeds 2 -o " + sw);
    log += slurp(sw + ".csv") + slurp(sw + ".json");
    log += shell(cli + " report -i " + sw + ".csv --format csv");
    return log;
}
#endif

Outcome determinism() {
    const std::string a = capi_pipeline(), b = capi_pipeline();
    bool ok = a == b && !a.empty();
    std::string d = "library pipeline " + std::string(a == b ? "identical" : "differs") + " (" +
                    std::to_string(a.size()) + " bytes)";
#ifdef CLIQUELAB_CLI
    const fs::path base = fs::temp_directory_path() / "cliquelab_acceptance";
    const std::string c1 = cli_pipeline(base / "run1"), c2 = cli_pipeline(base / "run2");
    // Paths differ between the runs only by directory name.
    auto normalise = [](std::string s, const std::string& from) {
        for (std::size_t pos; (pos = s.find(from)) != std::string::npos;) s.replace(pos, from.size(), "RUN");
        return s;
    };
    const std::string n1 = normalise(c1, "run1"), n2 = normalise(c2, "run2");
    ok = ok && n1 == n2;
    d += "; CLI pipeline " + std::string(n1 == n2 ? "identical" : "differs") + " (" + std::to_string(n1.size()) + " bytes)";
#endif
    return {ok, d};
}

} // namespace

int main() {
    bool all = true;
    all &= run(1, "factor solver vs brute force, n <= 6", 300, factor_equivalence);
    all &= run(2, "minimum degree 2n/3 forces a triangle factor", 120, hajnal_szemeredi);
    all &= run(3, "extremal construction leaves the apex uncovered", 300, figure1_property);
    all &= run(4, "degree pruning conclusions", 60, prune_property);
    all &= run(5, "blow-up minimum degree", 0, blowup_property);
    all &= run(6, "absorption definitions and census", 0, absorption_suite);
    all &= run(7, "weighted reduced graphs", 0, weighted_suite);
    all &= run(8, "seeded pipelines are byte-identical", 0, determinism);
    return all ? 0 : 1;
}
