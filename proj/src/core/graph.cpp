#include "cliquelab/graph.hpp"

#include <algorithm>
#include <charconv>

#include "cliquelab/error.hpp"

namespace cliquelab {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::range: return "range";
    case ErrorKind::self_loop: return "self-loop";
    case ErrorKind::domain: return "domain";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::budget: return "budget";
    case ErrorKind::io: return "io";
    case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

namespace {

constexpr std::int64_t kMaxParsedVertices = 10'000'000;

void check_vertex_count(std::int64_t n) {
    if (n < 0 || n > kMaxParsedVertices)
        throw range_error("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxParsedVertices) + "]");
}

} // namespace

Graph::Graph(int n) {
    check_vertex_count(n);
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u == v) throw Error(ErrorKind::self_loop, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw range_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") outside vertex range [0, " + std::to_string(n) + ")");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    edges_ = 0;
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        edges_ += static_cast<std::int64_t>(row.size());
    }
    edges_ /= 2;
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw domain_error("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph Graph::petersen() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < n(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<Bits> Graph::adjacency_bits() const {
    std::vector<Bits> rows(adj_.size(), Bits(adj_.size()));
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u]) rows[u].set(static_cast<std::size_t>(v));
    return rows;
}

GraphFormat parse_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::edge_list;
    throw domain_error("unknown graph format '" + std::string(name) + "'");
}

namespace {

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();

    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;

    auto sextet = [&](std::size_t at) -> unsigned {
        if (at >= end) throw ParseError(at, "unexpected end of graph6 data");
        auto c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError(at, "byte outside graph6 range 63..126");
        return c - 63U;
    };

    std::int64_t n = 0;
    if (pos >= end) throw ParseError(pos, "empty graph6 string");
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = sextet(pos);
        pos += 1;
    } else if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126) {
        for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | sextet(pos + 2 + k);
        pos += 8;
    } else {
        for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | sextet(pos + 1 + k);
        pos += 4;
    }
    check_vertex_count(n);

    const auto bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
    const auto bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (end - pos != bytes)
        throw ParseError(end < pos + bytes ? end : pos + bytes,
                         "graph6 body has " + std::to_string(end - pos) + " bytes, expected " +
                             std::to_string(bytes));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            unsigned s = sextet(pos + static_cast<std::size_t>(k / 6));
            if ((s >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        unsigned s = sextet(pos + static_cast<std::size_t>(k / 6));
        if (s & ((1U << (6 - k % 6)) - 1)) throw ParseError(pos + static_cast<std::size_t>(k / 6), "nonzero graph6 padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::int64_t declared = -1;
    std::int64_t max_index = -1;
    bool first_data_line = true;

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::pair<std::int64_t, std::size_t>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
                ++i;
                continue;
            }
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            const std::size_t offset = line_start + i;
            if (ec != std::errc() || ptr == line.data() + i)
                throw ParseError(offset, "expected a non-negative integer");
            if (value < 0) throw ParseError(offset, "negative vertex index");
            if (value > kMaxParsedVertices) throw ParseError(offset, "vertex index too large");
            std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + i));
            if (i + consumed < line.size()) {
                char next = line[i + consumed];
                if (next != ' ' && next != '\t' && next != '\r' && next != ',')
                    throw ParseError(line_start + i + consumed, "unexpected character");
            }
            tokens.emplace_back(value, offset);
            i += consumed;
        }

        if (!tokens.empty()) {
            if (tokens.size() == 1 && first_data_line) {
                declared = tokens[0].first;
                check_vertex_count(declared);
            } else if (tokens.size() != 2) {
                throw ParseError(tokens[0].second, "edge line must contain exactly two vertices");
            } else {
                auto [u, ou] = tokens[0];
                auto [v, ov] = tokens[1];
                if (u == v) throw Error(ErrorKind::self_loop, "self-loop at vertex " + std::to_string(u) + " (byte " + std::to_string(ou) + ")");
                if (declared >= 0 && (u >= declared || v >= declared))
                    throw range_error("vertex index " + std::to_string(u >= declared ? u : v) + " >= n = " +
                                      std::to_string(declared) + " (byte " + std::to_string(u >= declared ? ou : ov) + ")");
                max_index = std::max({max_index, u, v});
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
            first_data_line = false;
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    const std::int64_t n = declared >= 0 ? declared : max_index + 1;
    return Graph(static_cast<int>(n), edges);
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    const std::int64_t n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
    } else {
        out.append(2, static_cast<char>(126));
        for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
    }
    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::string serialize(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

int min_degree(const Graph& g) {
    if (g.n() == 0) throw domain_error("minimum degree of the empty graph is undefined");
    int best = g.degree(0);
    for (int v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

VertexSet make_vertex_set(std::span<const Vertex> members, int n) {
    VertexSet s(members.begin(), members.end());
    for (Vertex v : s)
        if (v < 0 || v >= n)
            throw range_error("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    VertexSet members = make_vertex_set(s, g.n());
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Vertex w : g.neighbors(members[i])) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    return {Graph(static_cast<int>(members.size()), edges), std::move(members)};
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    return true;
}

} // namespace cliquelab
