#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orient {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
    Vertex u;
    Vertex v;

    [[nodiscard]] auto other(Vertex w) const -> Vertex { return w == u ? v : u; }
    auto operator==(const Edge &) const -> bool = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeIndex edge;
};

/// Raised for inputs that violate a structural precondition (bad graph, wrong
/// orientation size, unmet regularity or bipartiteness requirement).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine is asked to run past its size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph. Edges keep their construction order and are
/// addressed by index; adjacency lists are sorted by neighbor.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidInput on loops, duplicate edges or out-of-range endpoints.
    Graph(int vertex_count, std::span<const std::pair<int, int>> edge_pairs);
    Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edge_pairs);

    [[nodiscard]] auto vertex_count() const -> int { return static_cast<int>(adjacency_.size()); }
    [[nodiscard]] auto edge_count() const -> int { return static_cast<int>(edges_.size()); }
    [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return edges_; }
    [[nodiscard]] auto edge(EdgeIndex e) const -> const Edge & { return edges_[e]; }
    [[nodiscard]] auto incident(Vertex v) const -> std::span<const Incidence> { return adjacency_[v]; }
    [[nodiscard]] auto degree(Vertex v) const -> int { return static_cast<int>(adjacency_[v].size()); }
    [[nodiscard]] auto max_degree() const -> int;
    [[nodiscard]] auto adjacent(Vertex a, Vertex b) const -> bool;
    [[nodiscard]] auto find_edge(Vertex a, Vertex b) const -> std::optional<EdgeIndex>;
    [[nodiscard]] auto edge_pairs() const -> std::vector<std::pair<int, int>>;

    /// Subgraph on `vertices` (relabelled 0..k-1 in the given order). The
    /// second member maps each new edge to its index in this graph.
    [[nodiscard]] auto induced(std::span<const Vertex> vertices) const
        -> std::pair<Graph, std::vector<EdgeIndex>>;

    auto operator==(const Graph &other) const -> bool { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

auto build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_pairs) -> Graph;

/// Per-edge direction over a Graph. `reversed[e] == false` means the edge
/// runs from `edge(e).u` to `edge(e).v`.
class Orientation {
public:
    Orientation() = default;
    Orientation(const Graph &graph, std::vector<bool> reversed);

    /// Orientation where every edge points at the endpoint chosen by `head_of`.
    template <typename HeadFn>
    static auto from_heads(const Graph &graph, HeadFn &&head_of) -> Orientation
    {
        std::vector<bool> reversed(graph.edge_count());
        for (EdgeIndex e = 0; e < graph.edge_count(); ++e)
            reversed[e] = head_of(e) == graph.edge(e).u;
        return Orientation{graph, std::move(reversed)};
    }

    [[nodiscard]] auto edge_count() const -> int { return static_cast<int>(reversed_.size()); }
    [[nodiscard]] auto reversed() const -> const std::vector<bool> & { return reversed_; }
    [[nodiscard]] auto indegrees() const -> const std::vector<int> & { return indegrees_; }
    [[nodiscard]] auto indegree(Vertex v) const -> int { return indegrees_[v]; }
    [[nodiscard]] auto tail(EdgeIndex e) const -> Vertex { return reversed_[e] ? edges_[e].v : edges_[e].u; }
    [[nodiscard]] auto head(EdgeIndex e) const -> Vertex { return reversed_[e] ? edges_[e].u : edges_[e].v; }

    /// Every edge flipped.
    [[nodiscard]] auto reversed_all() const -> Orientation;

private:
    std::vector<Edge> edges_;
    std::vector<bool> reversed_;
    std::vector<int> indegrees_;
};

enum class Side { X, Y };

struct VertexPartition {
    std::vector<Side> side;

    [[nodiscard]] auto members(Side s) const -> std::vector<Vertex>;
};

/// Throws InvalidInput when the orientation was built for a different edge count.
auto is_proper_orientation(const Graph &graph, const Orientation &orientation) -> bool;

/// First edge whose endpoints share an indegree, if any.
auto first_violation(const Graph &graph, const Orientation &orientation) -> std::optional<EdgeIndex>;

auto max_indegree(const Orientation &orientation) -> int;

/// BFS 2-colouring; the lowest-index vertex of every component lands in X.
auto is_bipartite(const Graph &graph) -> std::optional<VertexPartition>;

auto regularity(const Graph &graph) -> std::optional<int>;

/// Vertex lists of the connected components, each sorted, ordered by smallest member.
auto connected_components(const Graph &graph) -> std::vector<std::vector<Vertex>>;

struct LineGraph {
    Graph graph;
    /// edge_of_vertex[i] is the edge of the source graph that vertex i stands for.
    std::vector<EdgeIndex> edge_of_vertex;
};

auto line_graph(const Graph &graph) -> LineGraph;

} // namespace orient
