#include "cliquelab/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "cliquelab/error.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

using boost::multiprecision::cpp_int;

Number::Number(double v) : value(v), exact(v) {}

Number Number::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return domain_error("cannot parse number '" + s + "'"); };
    if (s.empty()) throw bad();
    Number out;
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            cpp_int num(s.substr(0, slash));
            cpp_int den(s.substr(slash + 1));
            if (den == 0) throw bad();
            out.exact = Rational(num, den);
        } else {
            std::size_t pos = 0;
            bool negative = false;
            if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
            cpp_int mantissa = 0;
            long exponent = 0;
            bool digits = false;
            for (; pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); ++pos, digits = true)
                mantissa = mantissa * 10 + (s[pos] - '0');
            if (pos < s.size() && s[pos] == '.') {
                for (++pos; pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); ++pos, digits = true) {
                    mantissa = mantissa * 10 + (s[pos] - '0');
                    --exponent;
                }
            }
            if (!digits) throw bad();
            if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
                char* end = nullptr;
                const long e = std::strtol(s.c_str() + pos + 1, &end, 10);
                if (end == s.c_str() + pos + 1 || *end != '\0') throw bad();
                exponent += e;
                pos = s.size();
            }
            if (pos != s.size()) throw bad();
            if (negative) mantissa = -mantissa;
            cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::labs(exponent)));
            out.exact = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
        }
    } catch (const std::runtime_error&) {
        throw bad();
    }
    out.value = static_cast<double>(out.exact);
    return out;
}

std::string Number::str() const { return exact.str(); }

WeightedGraph::WeightedGraph(int k)
    : k_(k), value_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0),
      exact_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), Rational(0)) {
    if (k < 0) throw domain_error("weighted graph size must be >= 0");
}

WeightedGraph::WeightedGraph(int k, const std::vector<std::tuple<int, int, Number>>& triples) : WeightedGraph(k) {
    for (const auto& [i, j, w] : triples) set(i, j, w);
}

WeightedGraph WeightedGraph::uniform(int k, Number w) {
    WeightedGraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.set(i, j, w);
    return g;
}

void WeightedGraph::set(int i, int j, Number w) {
    if (i < 0 || j < 0 || i >= k_ || j >= k_) throw range_error("weight index outside [0, k)");
    if (i == j) throw domain_error("weights are defined on distinct pairs only");
    if (w.exact < 0 || w.exact > 1) throw domain_error("weights must lie in [0, 1]");
    value_[index(i, j)] = value_[index(j, i)] = w.value;
    exact_[index(i, j)] = exact_[index(j, i)] = w.exact;
}

namespace {

void check_parameters(Number c, Number mu) {
    if (!(mu.exact > 0 && mu.exact < 1)) throw domain_error("mu must lie in (0, 1)");
    if (!(c.exact >= 0 && c.exact < 1)) throw domain_error("c must lie in [0, 1)");
}

// sum over p in `range` minus {i, j} of (d_ip d_jp - a d_ip).
template <class T, class Weight>
T pair_sum(int i, int j, std::span<const int> range, const T& a, Weight&& d) {
    T sum = 0;
    for (int p : range) {
        if (p == i || p == j) continue;
        const T& dip = d(i, p);
        sum += dip * d(j, p) - a * dip;
    }
    return sum;
}

std::vector<int> iota_range(int k) {
    std::vector<int> out(static_cast<std::size_t>(k));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

template <class T, class Weight>
InequalityResult inequality_scan(int k, const T& a, const T& rhs, Weight&& d) {
    InequalityResult res;
    const auto all = iota_range(k);
    std::optional<T> least;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            T slack = pair_sum<T>(i, j, all, a, d) - rhs;
            if (!least || slack < *least) {
                least = slack;
                res.i = i;
                res.j = j;
            }
            if (slack < 0) {
                res.pass = false;
                res.slack = static_cast<double>(slack);
                if constexpr (std::is_same_v<T, Rational>) res.exact_slack = slack.str();
                return res;
            }
        }
    res.slack = static_cast<double>(*least);
    if constexpr (std::is_same_v<T, Rational>) res.exact_slack = least->str();
    return res;
}

// Exact scan over integer numerators on a common denominator L, so each
// pair costs integer multiply-adds and a constant number of rational steps.
InequalityResult exact_inequality_scan(const WeightedGraph& w, const Rational& a, const Rational& rhs) {
    using boost::multiprecision::cpp_int;
    const int k = w.k();
    cpp_int lcm = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const cpp_int den = boost::multiprecision::denominator(w.exact_weight(i, j));
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
    std::vector<cpp_int> num(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    auto at = [k](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j); };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) {
                const Rational& d = w.exact_weight(i, j);
                num[at(i, j)] = boost::multiprecision::numerator(d) * (lcm / boost::multiprecision::denominator(d));
            }
    const Rational l1(cpp_int(1), lcm), l2(cpp_int(1), lcm * lcm);
    InequalityResult res;
    std::optional<Rational> least;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            cpp_int products = 0, row = 0;
            for (int p = 0; p < k; ++p) {
                if (p == i || p == j) continue;
                products += num[at(i, p)] * num[at(j, p)];
                row += num[at(i, p)];
            }
            const Rational slack = Rational(products) * l2 - a * Rational(row) * l1 - rhs;
            if (!least || slack < *least) {
                least = slack;
                res.i = i;
                res.j = j;
            }
            if (slack < 0) {
                res.pass = false;
                res.slack = static_cast<double>(slack);
                res.exact_slack = slack.str();
                return res;
            }
        }
    res.slack = static_cast<double>(*least);
    res.exact_slack = least->str();
    return res;
}

template <class T, class Weight>
ConditionEResult condition_scan(std::span<const int> s, const T& a, Weight&& d) {
    ConditionEResult res;
    for (int i : s)
        for (int j : s) {
            if (i == j) continue;
            T sum = pair_sum<T>(i, j, s, a, d);
            if (!(sum > 0)) {
                res.holds = false;
                res.i = i;
                res.j = j;
                res.sum = static_cast<double>(sum);
                return res;
            }
        }
    return res;
}

ConditionEResult condition_e(const WeightedGraph& w, std::span<const int> s, Number c, Number mu, Arithmetic arithmetic) {
    if (arithmetic == Arithmetic::exact) {
        const Rational a = c.exact + mu.exact / 6;
        return condition_scan<Rational>(s, a, [&](int i, int j) -> const Rational& { return w.exact_weight(i, j); });
    }
    const double a = c.value + mu.value / 6.0;
    return condition_scan<double>(s, a, [&](int i, int j) { return w.weight(i, j); });
}

} // namespace

InequalityResult check_inequality_one(const WeightedGraph& w, Number c, Number mu, Arithmetic arithmetic) {
    check_parameters(c, mu);
    if (w.k() < 3) throw domain_error("the pair inequality needs k >= 3");
    if (arithmetic == Arithmetic::exact) {
        const Rational a = c.exact + mu.exact / 6;
        const Rational rhs = mu.exact * w.k() / 24;
        return exact_inequality_scan(w, a, rhs);
    }
    const double a = c.value + mu.value / 6.0;
    const double rhs = mu.value * w.k() / 24.0;
    return inequality_scan<double>(w.k(), a, rhs, [&](int i, int j) { return w.weight(i, j); });
}

ConditionEResult check_condition_e(const WeightedGraph& w, std::span<const int> s, Number c, Number mu,
                                   Arithmetic arithmetic) {
    check_parameters(c, mu);
    if (s.size() < 3) throw domain_error("the set condition needs |S| >= 3");
    VertexSet members = make_vertex_set(s, w.k());
    if (members.size() != s.size()) throw domain_error("S has repeated members");
    return condition_e(w, members, c, mu, arithmetic);
}

std::size_t required_good_sets(int k, int t, double mu) {
    const double z = std::floor(double(k) / (t + 1));
    return static_cast<std::size_t>(std::ceil((1.0 - mu / (8.0 * (t + 1))) * z - 1e-12));
}

PartitionSearchResult random_partition_search(const WeightedGraph& w, Number c, Number mu, int t, std::uint64_t seed,
                                              std::uint64_t retries, Arithmetic arithmetic) {
    check_parameters(c, mu);
    if (t < 2) throw domain_error("t must be >= 2 so that each set has at least three members");
    if (t + 1 > w.k()) throw domain_error("t + 1 exceeds k");
    if (retries < 1) throw domain_error("retries must be >= 1");
    if (auto ineq = check_inequality_one(w, c, mu, arithmetic); !ineq.pass)
        throw PreconditionError("the pair inequality fails at pair (" + std::to_string(ineq.i) + ", " + std::to_string(ineq.j) +
                                ") with slack " + std::to_string(ineq.slack));

    PartitionSearchResult res;
    const auto size = static_cast<std::size_t>(t + 1);
    res.z = static_cast<std::size_t>(w.k()) / size;
    res.required = required_good_sets(w.k(), t, mu.value);

    std::vector<int> labels = iota_range(w.k());
    for (std::uint64_t trial = 0; trial < retries; ++trial) {
        ++res.trials;
        Rng rng(derive_seed(seed, trial));
        std::iota(labels.begin(), labels.end(), 0);
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<VertexSet> good;
        for (std::size_t q = 0; q < res.z; ++q) {
            VertexSet set(labels.begin() + static_cast<std::ptrdiff_t>(q * size),
                          labels.begin() + static_cast<std::ptrdiff_t>((q + 1) * size));
            std::sort(set.begin(), set.end());
            if (condition_e(w, set, c, mu, arithmetic).holds) good.push_back(std::move(set));
        }
        res.best_q = std::max(res.best_q, good.size());
        if (good.size() >= res.required) {
            std::sort(good.begin(), good.end());
            res.sets = std::move(good);
            res.success = true;
            break;
        }
    }
    return res;
}

BadSetEstimate estimate_bad_probability(const WeightedGraph& w, Number c, Number mu, int t, std::uint64_t trials,
                                        std::uint64_t seed) {
    check_parameters(c, mu);
    if (trials < 100) throw domain_error("at least 100 trials are needed for a meaningful interval");
    if (t < 2) throw domain_error("t must be >= 2");
    if (t + 1 > w.k()) throw domain_error("t + 1 exceeds k");

    BadSetEstimate est;
    est.trials = trials;
    const auto size = static_cast<std::size_t>(t + 1);
    Rng rng = make_rng(seed);
    std::vector<int> labels = iota_range(w.k());
    for (std::uint64_t k = 0; k < trials; ++k) {
        for (std::size_t i = 0; i < size; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, labels.size() - 1);
            std::swap(labels[i], labels[pick(rng)]);
        }
        VertexSet set(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(set.begin(), set.end());
        if (!condition_e(w, set, c, mu, Arithmetic::floating).holds) ++est.bad;
    }
    const double nt = double(trials);
    const double p = double(est.bad) / nt;
    constexpr double z = 1.959963984540054;
    const double denom = 1.0 + z * z / nt;
    const double centre = (p + z * z / (2 * nt)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / nt + z * z / (4 * nt * nt)) / denom;
    est.estimate = p;
    est.lower = est.bad == 0 ? 0.0 : std::max(0.0, centre - half);
    est.upper = est.bad == trials ? 1.0 : std::min(1.0, centre + half);
    est.bound = double(t + 1) * t / 2.0 * std::exp(-mu.value * mu.value * t / 1000.0);
    return est;
}

} // namespace cliquelab
