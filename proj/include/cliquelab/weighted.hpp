#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquelab/graph.hpp"

namespace cliquelab {

using Rational = boost::multiprecision::cpp_rational;

// A real parameter with an exact rational value alongside its double.
struct Number {
    double value = 0.0;
    Rational exact = 0;

    Number() = default;
    Number(double v); // exact binary value of v
    static Number parse(std::string_view text); // "3/5", "0.6", "1e-2", "1"
    std::string str() const;
};

// Complete graph on k labels with symmetric pair weights in [0, 1]; missing
// pairs weigh 0.
class WeightedGraph {
public:
    explicit WeightedGraph(int k);
    WeightedGraph(int k, const std::vector<std::tuple<int, int, Number>>& triples);
    static WeightedGraph uniform(int k, Number w);

    int k() const { return k_; }
    double weight(int i, int j) const { return value_[index(i, j)]; }
    const Rational& exact_weight(int i, int j) const { return exact_[index(i, j)]; }
    void set(int i, int j, Number w);

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j); }

    int k_;
    std::vector<double> value_;
    std::vector<Rational> exact_;
};

enum class Arithmetic { floating, exact };

struct InequalityResult {
    bool pass = true;
    // First failing ordered pair when !pass; otherwise the pair of least slack.
    int i = -1;
    int j = -1;
    double slack = 0.0; // sum - mu k / 24 at (i, j)
    std::string exact_slack; // filled in exact mode
};

// For every ordered pair (i, j), i != j:
//   sum_{p != i,j} (d_ip d_jp - (c + mu/6) d_ip) >= mu k / 24.
InequalityResult check_inequality_one(const WeightedGraph& w, Number c, Number mu,
                                      Arithmetic arithmetic = Arithmetic::floating);

struct ConditionEResult {
    bool holds = true;
    int i = -1; // first violating ordered pair
    int j = -1;
    double sum = 0.0;
};

// Within S: sum_{p in S \ {i,j}} (d_ip d_jp - (c + mu/6) d_ip) > 0 for every
// ordered pair of distinct i, j in S.
ConditionEResult check_condition_e(const WeightedGraph& w, std::span<const int> s, Number c, Number mu,
                                   Arithmetic arithmetic = Arithmetic::floating);

struct PartitionSearchResult {
    bool success = false;
    std::vector<VertexSet> sets; // good (t+1)-sets of the accepted trial
    std::uint64_t trials = 0;
    std::size_t z = 0;        // floor(k / (t+1))
    std::size_t required = 0; // ceil((1 - mu/(8(t+1))) z)
    std::size_t best_q = 0;
};

// (1 - mu/(8(t+1))) floor(k/(t+1)), rounded up to the next integer.
std::size_t required_good_sets(int k, int t, double mu);

// Draws uniform partitions into floor(k/(t+1)) disjoint (t+1)-sets until the
// good ones (those satisfying condition E) meet the required count.
PartitionSearchResult random_partition_search(const WeightedGraph& w, Number c, Number mu, int t, std::uint64_t seed,
                                              std::uint64_t retries, Arithmetic arithmetic = Arithmetic::floating);

struct BadSetEstimate {
    double estimate = 0.0;
    double lower = 0.0; // Wilson 95% interval
    double upper = 0.0;
    std::uint64_t bad = 0;
    std::uint64_t trials = 0;
    double bound = 0.0; // C(t+1, 2) exp(-mu^2 t / 1000)
};

BadSetEstimate estimate_bad_probability(const WeightedGraph& w, Number c, Number mu, int t, std::uint64_t trials,
                                        std::uint64_t seed);

} // namespace cliquelab
