#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace girth {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Undirected input edge as given by the caller or a file.
struct EdgeInput {
    VertexId u;
    VertexId v;
    double length;
};

/// One orientation of an undirected edge. The id is shared by both orientations.
struct EdgeRef {
    VertexId from = kNoVertex;
    VertexId to = kNoVertex;
    double length = 0.0;
    EdgeId id = kNoEdge;

    EdgeRef reversed() const { return {to, from, length, id}; }
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct AdjacencyEntry {
    VertexId neighbor;
    double length;
    EdgeId edge;
};

/// Thrown for malformed graphs and unparsable input. `line()` is 0 when the
/// error is not tied to a line of text.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Immutable, simple, positively weighted undirected graph.
///
/// Every adjacency list is sorted by (length, neighbor id). Edge ids index
/// `edges()` in the order the edges were supplied.
class WeightedGraph {
public:
    WeightedGraph() = default;

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Canonical orientation: from < to.
    const std::vector<EdgeRef>& edges() const { return edges_; }
    const EdgeRef& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

    std::span<const AdjacencyEntry> neighbors(VertexId v) const {
        const auto b = offsets_[static_cast<std::size_t>(v)];
        const auto e = offsets_[static_cast<std::size_t>(v) + 1];
        return {adjacency_.data() + b, e - b};
    }
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    /// The j-th incident edge of v (0-based, adjacency order) oriented away from v.
    EdgeRef incident(VertexId v, std::size_t j) const {
        const auto& a = neighbors(v)[j];
        return {v, a.neighbor, a.length, a.edge};
    }

    /// Edge id joining u and v, or kNoEdge. O(log deg) is not guaranteed; linear scan.
    EdgeId find_edge(VertexId u, VertexId v) const;

    double max_length() const;

    friend WeightedGraph build_graph(std::size_t n, std::span<const EdgeInput> edges);

private:
    std::vector<EdgeRef> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<AdjacencyEntry> adjacency_;
};

/// Validates and builds. Rejects self-loops, duplicate undirected edges,
/// non-positive or non-finite lengths, and out-of-range endpoints.
WeightedGraph build_graph(std::size_t n, std::span<const EdgeInput> edges);

/// Parses the edge-list text format:
///   optional `p <n> <m>` header, then `u v length` lines, `#` comments.
/// Without a header, n is max id + 1.
WeightedGraph parse_edge_list(std::string_view text);

/// Header plus edges sorted by (u, v), lengths in shortest round-trip form.
std::string serialize_edge_list(const WeightedGraph& g);

WeightedGraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const WeightedGraph& g, const std::string& path);

/// Shortest decimal representation that parses back to the same double.
std::string format_length(double x);

}  // namespace girth
