#include "cliquelab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "cliquelab/cliques.hpp"
#include "cliquelab/constructions.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/factor.hpp"
#include "cliquelab/independence.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

namespace {

std::string fixed(double v, int digits = 6) {
    if (std::isnan(v)) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <class T>
std::string join(const std::vector<T>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        if constexpr (std::is_floating_point_v<T>) out += fixed(values[i], 9);
        else out += std::to_string(values[i]);
    }
    return out + "]";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

bool uses_x(const SweepConfig& c) { return c.family == "figure1"; }
bool uses_fraction(const SweepConfig& c) { return c.family == "random-mindeg"; }

struct Cell {
    int n, r, ell;
    double x, fraction;
};

std::vector<Cell> cells(const SweepConfig& c) {
    std::vector<double> xs = uses_x(c) ? (c.x_values.empty() ? std::vector<double>{default_x(c.rho)} : c.x_values)
                                       : std::vector<double>{0.0};
    std::vector<double> fs = uses_fraction(c) ? c.degree_fractions : std::vector<double>{0.0};
    std::vector<Cell> out;
    for (int n : c.n_values)
        for (int r : c.r_values)
            for (int ell : c.ell_values)
                for (double x : xs)
                    for (double f : fs) out.push_back({n, r, ell, x, f});
    return out;
}

void validate(const SweepConfig& c) {
    if (c.family != "figure1" && c.family != "multipartite" && c.family != "random-mindeg")
        throw domain_error("unknown sweep family '" + c.family + "'");
    if (c.n_values.empty() || c.r_values.empty() || c.ell_values.empty() || c.seeds < 1 ||
        (uses_fraction(c) && c.degree_fractions.empty()))
        throw domain_error("sweep grid is empty");
    if (c.factor_budget.max_nodes == 0 && c.factor_budget.time_ms == 0)
        throw domain_error("sweep budgets must be positive");
    if (c.threads < 1) throw domain_error("threads must be >= 1");
    for (int n : c.n_values)
        if (n < 1 || n > kMaxGeneratedVertices) throw domain_error("sweep n out of range");
    for (int r : c.r_values)
        if (r < 2) throw domain_error("sweep r must be >= 2");
    for (int l : c.ell_values)
        if (l < 2) throw domain_error("sweep ell must be >= 2");
}

} // namespace

std::string canonical_config(const SweepConfig& c) {
    std::ostringstream os;
    os << "family=" << c.family << ";n=" << join(c.n_values) << ";r=" << join(c.r_values) << ";ell=" << join(c.ell_values)
       << ";x=" << join(c.x_values) << ";f=" << join(c.degree_fractions) << ";rho=" << fixed(c.rho, 9)
       << ";core=" << c.core << ";seeds=" << c.seeds << ";base_seed=" << c.base_seed
       << ";nodes=" << c.factor_budget.max_nodes << ";ms=" << c.factor_budget.time_ms
       << ";candidates=" << c.max_candidates << ";restarts=" << c.alpha_restarts;
    return os.str();
}

std::uint64_t config_hash(const SweepConfig& config) {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_config(config)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

int cell_count(const SweepConfig& config) { return static_cast<int>(cells(config).size()); }

std::string sweep_csv_header() {
    return "# cliquelab sweep schema v" + std::to_string(kSweepSchemaVersion) +
           "\ncell,seed_index,seed,family,n,r,ell,x,degree_fraction,min_degree,min_degree_ratio,alpha_lower,"
           "alpha_upper,alpha_exact,outcome,cover_size,search_nodes,graph6\n";
}

std::string to_csv_line(const SweepRecord& r) {
    std::ostringstream os;
    os << r.cell << ',' << r.seed_index << ',' << r.seed << ',' << r.family << ',' << r.n << ',' << r.r << ',' << r.ell
       << ',' << fixed(r.x) << ',' << fixed(r.degree_fraction) << ',' << r.min_degree << ',' << fixed(r.min_degree_ratio)
       << ',' << r.alpha_lower << ',' << r.alpha_upper << ',' << (r.alpha_exact ? 1 : 0) << ',' << r.outcome << ','
       << r.cover_size << ',' << r.search_nodes << ',' << r.graph6;
    return os.str();
}

SweepRecord parse_csv_line(std::string_view line) {
    // graph6 never contains ',' (bytes 63..126 exclude 44).
    auto f = split(line, ',');
    if (f.size() != 18) throw domain_error("sweep CSV line has " + std::to_string(f.size()) + " fields, expected 18");
    try {
        SweepRecord r;
        r.cell = std::stoi(f[0]);
        r.seed_index = std::stoi(f[1]);
        r.seed = std::stoull(f[2]);
        r.family = f[3];
        r.n = std::stoi(f[4]);
        r.r = std::stoi(f[5]);
        r.ell = std::stoi(f[6]);
        r.x = std::stod(f[7]);
        r.degree_fraction = std::stod(f[8]);
        r.min_degree = std::stoi(f[9]);
        r.min_degree_ratio = std::stod(f[10]);
        r.alpha_lower = std::stoi(f[11]);
        r.alpha_upper = std::stoi(f[12]);
        r.alpha_exact = f[13] == "1";
        r.outcome = f[14];
        r.cover_size = std::stoi(f[15]);
        r.search_nodes = std::stoull(f[16]);
        r.graph6 = f[17];
        if (r.outcome != "factor" && r.outcome != "no-factor" && r.outcome != "unknown")
            throw domain_error("bad outcome '" + r.outcome + "'");
        return r;
    } catch (const std::logic_error&) {
        throw domain_error("malformed sweep CSV line: " + std::string(line));
    }
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
    std::string out = sweep_csv_header();
    for (const auto& r : records) out += to_csv_line(r) + "\n";
    return out;
}

std::vector<SweepRecord> parse_records_csv(std::string_view text) {
    std::vector<SweepRecord> out;
    bool header_seen = false;
    for (const auto& raw : split(text, '\n')) {
        std::string line = raw;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen && line.rfind("cell,", 0) == 0) {
            header_seen = true;
            continue;
        }
        out.push_back(parse_csv_line(line));
    }
    return out;
}

std::string records_to_json(const std::vector<SweepRecord>& records) {
    std::ostringstream os;
    os << "{\"schema\":" << kSweepSchemaVersion << ",\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i) os << ",";
        os << "{\"cell\":" << r.cell << ",\"seed_index\":" << r.seed_index << ",\"seed\":" << r.seed << ",\"family\":\""
           << json_escape(r.family) << "\",\"n\":" << r.n << ",\"r\":" << r.r << ",\"ell\":" << r.ell
           << ",\"x\":" << fixed(r.x) << ",\"degree_fraction\":" << fixed(r.degree_fraction)
           << ",\"min_degree\":" << r.min_degree << ",\"min_degree_ratio\":" << fixed(r.min_degree_ratio)
           << ",\"alpha_lower\":" << r.alpha_lower << ",\"alpha_upper\":" << r.alpha_upper
           << ",\"alpha_exact\":" << (r.alpha_exact ? "true" : "false") << ",\"outcome\":\"" << r.outcome
           << "\",\"cover_size\":" << r.cover_size << ",\"search_nodes\":" << r.search_nodes << ",\"graph6\":\""
           << json_escape(r.graph6) << "\"}";
    }
    os << "]}\n";
    return os.str();
}

SweepRecord run_instance(const SweepConfig& config, int cell_index, int seed_index) {
    const auto grid = cells(config);
    const Cell& cell = grid.at(static_cast<std::size_t>(cell_index));
    SweepRecord rec;
    rec.cell = cell_index;
    rec.seed_index = seed_index;
    rec.seed = derive_seed(derive_seed(config.base_seed, static_cast<std::uint64_t>(cell_index)),
                           static_cast<std::uint64_t>(seed_index));
    rec.family = config.family;
    rec.n = cell.n;
    rec.r = cell.r;
    rec.ell = cell.ell;
    rec.x = cell.x;
    rec.degree_fraction = cell.fraction;

    Graph g;
    if (config.family == "figure1") {
        const int m = core_size(cell.n, cell.x);
        g = figure1(cell.n, cell.r, cell.x, figure1_core(config.core, m, cell.r, rec.seed)).graph;
    } else if (config.family == "multipartite") {
        g = balanced_multipartite(cell.n, cell.r).graph;
    } else {
        g = random_min_degree(cell.n, cell.fraction, rec.seed).graph;
    }

    rec.graph6 = to_graph6(g);
    rec.min_degree = min_degree(g);
    rec.min_degree_ratio = double(rec.min_degree) / g.n();
    AlphaResult alpha = g.n() <= kAlphaExactLimit
                            ? alpha_ell_exact(g, cell.ell)
                            : alpha_ell_bounds(g, cell.ell, {config.alpha_restarts, rec.seed});
    rec.alpha_lower = alpha.lower;
    rec.alpha_upper = alpha.upper;
    rec.alpha_exact = alpha.exact;
    rec.cover_size = static_cast<int>(cover_check(g, cell.r).size());
    FactorCertificate cert = has_kr_factor(g, cell.r, {config.factor_budget, config.max_candidates});
    rec.outcome = to_string(cert.outcome);
    rec.search_nodes = cert.stats.nodes;
    return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    validate(config);
    const int ncells = cell_count(config);
    const std::uint64_t hash = config_hash(config);

    std::map<std::pair<int, int>, SweepRecord> done;
    std::ofstream checkpoint;
    std::string ckpt_path, csv_path, json_path;
    if (!config.output.empty()) {
        ckpt_path = config.output + ".ckpt";
        csv_path = config.output + ".csv";
        json_path = config.output + ".json";
        // Probe writability before any computation.
        for (const auto& p : {csv_path, json_path}) {
            std::ofstream probe(p, std::ios::app);
            if (!probe) throw Error(ErrorKind::io, "cannot write " + p);
        }
        std::ifstream in(ckpt_path);
        std::string line;
        bool matches = false;
        if (in && std::getline(in, line)) matches = line == "# config " + std::to_string(hash);
        if (matches) {
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                try {
                    SweepRecord r = parse_csv_line(line);
                    if (r.cell < ncells && r.seed_index < config.seeds) done[{r.cell, r.seed_index}] = r;
                } catch (const Error&) {
                    // A torn final line from an interrupted run is recomputed.
                }
            }
        }
        in.close();
        checkpoint.open(ckpt_path, std::ios::trunc);
        if (!checkpoint) throw Error(ErrorKind::io, "cannot write " + ckpt_path);
        checkpoint << "# config " << hash << "\n";
        for (const auto& [key, r] : done) checkpoint << to_csv_line(r) << "\n";
        checkpoint.flush();
    }

    std::vector<std::pair<int, int>> todo;
    for (int c = 0; c < ncells; ++c)
        for (int s = 0; s < config.seeds; ++s)
            if (!done.count({c, s})) todo.emplace_back(c, s);

    std::mutex lock;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            try {
                SweepRecord r = run_instance(config, todo[i].first, todo[i].second);
                std::lock_guard guard(lock);
                if (checkpoint.is_open()) {
                    checkpoint << to_csv_line(r) << "\n";
                    checkpoint.flush();
                }
                done[todo[i]] = std::move(r);
            } catch (...) {
                std::lock_guard guard(lock);
                if (!failure) failure = std::current_exception();
                next = todo.size();
                return;
            }
        }
    };
    const int workers = std::max(1, std::min<int>(config.threads, static_cast<int>(todo.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SweepRecord> records;
    records.reserve(done.size());
    for (auto& [key, r] : done) records.push_back(std::move(r));

    if (!config.output.empty()) {
        std::ofstream csv(csv_path, std::ios::trunc);
        std::ofstream json(json_path, std::ios::trunc);
        if (!csv || !json) throw Error(ErrorKind::io, "cannot write sweep outputs at " + config.output);
        csv << records_to_csv(records);
        json << records_to_json(records);
        if (!csv || !json) throw Error(ErrorKind::io, "failed writing sweep outputs at " + config.output);
    }
    return records;
}

std::vector<ReportRow> report(const std::vector<SweepRecord>& records) {
    using Key = std::tuple<std::string, int, int, int, std::string, std::string>;
    std::map<Key, ReportRow> rows;
    std::map<Key, std::pair<double, double>> sums;
    for (const auto& rec : records) {
        Key key{rec.family, rec.n, rec.r, rec.ell, fixed(rec.x), fixed(rec.degree_fraction)};
        auto& row = rows[key];
        row.family = rec.family;
        row.n = rec.n;
        row.r = rec.r;
        row.ell = rec.ell;
        row.x = rec.x;
        row.degree_fraction = rec.degree_fraction;
        ++row.instances;
        if (rec.outcome == "factor") ++row.factor;
        else if (rec.outcome == "no-factor") ++row.no_factor;
        else ++row.unknown;
        auto& [alpha_sum, degree_sum] = sums[key];
        alpha_sum += double(rec.alpha_lower) / rec.n;
        degree_sum += rec.min_degree_ratio;
    }
    std::vector<ReportRow> out;
    for (auto& [key, row] : rows) {
        const int decided = row.factor + row.no_factor;
        row.factor_rate = decided > 0 ? double(row.factor) / decided : std::nan("");
        row.mean_alpha_ratio = sums[key].first / row.instances;
        row.mean_min_degree_ratio = sums[key].second / row.instances;
        out.push_back(row);
    }
    return out;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::string out = "family,n,r,ell,x,degree_fraction,instances,factor,no_factor,unknown,factor_rate,mean_alpha_ratio,"
                      "mean_min_degree_ratio\n";
    for (const auto& r : rows) {
        std::ostringstream os;
        os << r.family << ',' << r.n << ',' << r.r << ',' << r.ell << ',' << fixed(r.x) << ',' << fixed(r.degree_fraction)
           << ',' << r.instances << ',' << r.factor << ',' << r.no_factor << ',' << r.unknown << ','
           << fixed(r.factor_rate, 4) << ',' << fixed(r.mean_alpha_ratio, 4) << ',' << fixed(r.mean_min_degree_ratio, 4)
           << "\n";
        out += os.str();
    }
    return out;
}

std::string report_text(const std::vector<ReportRow>& rows) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-14s %6s %3s %3s %8s %8s %5s %6s %9s %7s %11s %10s %10s\n", "family", "n", "r", "ell",
                  "x", "deg_frac", "inst", "factor", "no_factor", "unknown", "factor_rate", "alpha/n", "delta/n");
    std::string out = buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-14s %6d %3d %3d %8.4f %8.4f %5d %6d %9d %7d %11s %10.4f %10.4f\n",
                      r.family.c_str(), r.n, r.r, r.ell, r.x, r.degree_fraction, r.instances, r.factor, r.no_factor,
                      r.unknown, fixed(r.factor_rate, 4).c_str(), r.mean_alpha_ratio, r.mean_min_degree_ratio);
        out += buf;
    }
    return out;
}

} // namespace cliquelab
