#include "girth/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace girth {

namespace {

std::string describe(const EdgeInput& e) {
    std::ostringstream os;
    os << "(" << e.u << ", " << e.v << ", " << format_length(e.length) << ")";
    return os.str();
}

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
bool parse_number(std::string_view tok, T& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
}

}  // namespace

std::string format_length(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

EdgeId WeightedGraph::find_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count() ||
        static_cast<std::size_t>(v) >= vertex_count())
        return kNoEdge;
    for (const auto& a : neighbors(u))
        if (a.neighbor == v) return a.edge;
    return kNoEdge;
}

double WeightedGraph::max_length() const {
    double best = 0.0;
    for (const auto& e : edges_) best = std::max(best, e.length);
    return best;
}

WeightedGraph build_graph(std::size_t n, std::span<const EdgeInput> edges) {
    if (n > static_cast<std::size_t>(std::numeric_limits<VertexId>::max()))
        throw GraphError("vertex count too large");
    WeightedGraph g;
    g.edges_.reserve(edges.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    std::vector<std::size_t> degree(n, 0);

    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
            static_cast<std::size_t>(e.v) >= n)
            throw GraphError("vertex id out of range in edge " + describe(e));
        if (e.u == e.v) throw GraphError("self-loop " + describe(e));
        if (!(e.length > 0.0) || !std::isfinite(e.length))
            throw GraphError("non-positive or non-finite length in edge " + describe(e));
        if (!seen.insert(pair_key(e.u, e.v)).second)
            throw GraphError("duplicate edge " + describe(e));
        const auto id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.length, id});
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }

    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : g.edges_) {
        g.adjacency_[fill[static_cast<std::size_t>(e.from)]++] = {e.to, e.length, e.id};
        g.adjacency_[fill[static_cast<std::size_t>(e.to)]++] = {e.from, e.length, e.id};
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
                  [](const AdjacencyEntry& a, const AdjacencyEntry& b) {
                      if (a.length != b.length) return a.length < b.length;
                      return a.neighbor < b.neighbor;
                  });
    }
    return g;
}

WeightedGraph parse_edge_list(std::string_view text) {
    std::vector<EdgeInput> edges;
    bool have_header = false;
    std::size_t header_n = 0, header_m = 0;
    VertexId max_id = -1;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (toks[0] == "p") {
            if (have_header || !edges.empty())
                throw GraphError("header must precede edges and appear once", line_no);
            if (toks.size() != 3 || !parse_number(toks[1], header_n) ||
                !parse_number(toks[2], header_m))
                throw GraphError("malformed header, expected `p <n> <m>`", line_no);
            have_header = true;
        } else {
            EdgeInput e{};
            long long u = 0, v = 0;
            if (toks.size() != 3 || !parse_number(toks[0], u) || !parse_number(toks[1], v) ||
                !parse_number(toks[2], e.length))
                throw GraphError("malformed edge line, expected `u v length`", line_no);
            if (u < 0 || v < 0 || u > std::numeric_limits<VertexId>::max() ||
                v > std::numeric_limits<VertexId>::max())
                throw GraphError("vertex id out of range", line_no);
            e.u = static_cast<VertexId>(u);
            e.v = static_cast<VertexId>(v);
            if (!(e.length > 0.0))
                throw GraphError("non-positive length in edge " + describe(e), line_no);
            max_id = std::max({max_id, e.u, e.v});
            edges.push_back(e);
        }
        if (end == text.size()) break;
    }

    std::size_t n = static_cast<std::size_t>(max_id + 1);
    if (have_header) {
        if (edges.size() != header_m)
            throw GraphError("header declares " + std::to_string(header_m) + " edges but " +
                             std::to_string(edges.size()) + " were read");
        if (n > header_n)
            throw GraphError("vertex id " + std::to_string(max_id) + " exceeds header n=" +
                             std::to_string(header_n));
        n = header_n;
    }
    return build_graph(n, edges);
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::vector<EdgeRef> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end(), [](const EdgeRef& a, const EdgeRef& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
    std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto& e : sorted) {
        out += std::to_string(e.from);
        out += ' ';
        out += std::to_string(e.to);
        out += ' ';
        out += format_length(e.length);
        out += '\n';
    }
    return out;
}

WeightedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_edge_list_file(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write " + path);
    out << serialize_edge_list(g);
}

}  // namespace girth
