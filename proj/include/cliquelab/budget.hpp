#pragma once

#include <chrono>
#include <cstdint>

namespace cliquelab {

// Search limits. Zero means unlimited. Node limits are deterministic; the
// wall-clock limit is not, so reproducible pipelines should use nodes only.
struct Budget {
    std::uint64_t max_nodes = 0;
    std::uint64_t time_ms = 0;

    static Budget unlimited() { return {}; }
    static Budget nodes(std::uint64_t n) { return {n, 0}; }
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

// Tracks consumption of a Budget during one search.
class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // Counts one node; returns false once the budget is spent.
    bool tick() {
        ++nodes_;
        if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) {
            exhausted_ = true;
        } else if (budget_.time_ms != 0 && (nodes_ & 0x3ff) == 0 && elapsed_ms() > double(budget_.time_ms)) {
            exhausted_ = true;
        }
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

    SearchStats stats() const { return {nodes_, elapsed_ms()}; }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace cliquelab
