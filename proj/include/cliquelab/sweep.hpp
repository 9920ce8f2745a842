#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliquelab/budget.hpp"

namespace cliquelab {

// Grid of instances to generate and measure. Every list is one grid axis;
// cells are the cartesian product in the order n, r, ell, x, degree fraction.
struct SweepConfig {
    std::string family = "figure1"; // figure1 | multipartite | random-mindeg
    std::vector<int> n_values;
    std::vector<int> r_values;
    std::vector<int> ell_values = {2};
    std::vector<double> x_values;            // figure1; empty -> 1/(2 - rho)
    std::vector<double> degree_fractions;    // random-mindeg
    double rho = 0.0;
    std::string core = "random";             // figure1 core recipe
    int seeds = 1;
    std::uint64_t base_seed = 0;
    Budget factor_budget = Budget::nodes(2'000'000);
    std::size_t max_candidates = 2'000'000;
    int alpha_restarts = 8;
    int threads = 1;
    std::string output; // path prefix; writes .csv, .json and a .ckpt checkpoint
};

// Canonical string used for the checkpoint key.
std::string canonical_config(const SweepConfig& config);
std::uint64_t config_hash(const SweepConfig& config);

struct SweepRecord {
    int cell = 0;
    int seed_index = 0;
    std::uint64_t seed = 0;
    std::string family;
    int n = 0;
    int r = 0;
    int ell = 0;
    double x = 0.0;
    double degree_fraction = 0.0;
    int min_degree = 0;
    double min_degree_ratio = 0.0;
    int alpha_lower = 0;
    int alpha_upper = 0;
    bool alpha_exact = false;
    std::string outcome; // factor | no-factor | unknown
    int cover_size = 0;
    std::uint64_t search_nodes = 0;
    std::string graph6;
};

// Current CSV schema version, written in the header comment.
inline constexpr int kSweepSchemaVersion = 1;

std::string sweep_csv_header();
std::string to_csv_line(const SweepRecord& r);
SweepRecord parse_csv_line(std::string_view line);
std::string records_to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_records_csv(std::string_view text);
std::string records_to_json(const std::vector<SweepRecord>& records);

// Runs one grid point.
SweepRecord run_instance(const SweepConfig& config, int cell, int seed_index);

// Number of grid cells (product of axis lengths; family-irrelevant axes count once).
int cell_count(const SweepConfig& config);

// Generates, measures and solves every (cell, seed); writes outputs when
// config.output is set, resuming from its checkpoint when one matches.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

struct ReportRow {
    std::string family;
    int n = 0, r = 0, ell = 0;
    double x = 0.0, degree_fraction = 0.0;
    int instances = 0, factor = 0, no_factor = 0, unknown = 0;
    double factor_rate = 0.0; // over decided instances; NaN when none
    double mean_alpha_ratio = 0.0;
    double mean_min_degree_ratio = 0.0;
};

std::vector<ReportRow> report(const std::vector<SweepRecord>& records);
std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_text(const std::vector<ReportRow>& rows);

} // namespace cliquelab
