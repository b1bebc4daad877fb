#include <orient/graph.hpp>

#include <algorithm>
#include <deque>
#include <string>

namespace orient {

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> edge_pairs)
{
    if (vertex_count < 0)
        throw InvalidInput("negative vertex count");
    adjacency_.resize(vertex_count);
    edges_.reserve(edge_pairs.size());
    for (const auto &[a, b] : edge_pairs) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw InvalidInput("vertex index out of range in edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            throw InvalidInput("loop at vertex " + std::to_string(a));
        auto e = static_cast<EdgeIndex>(edges_.size());
        edges_.push_back({a, b});
        adjacency_[a].push_back({b, e});
        adjacency_[b].push_back({a, e});
    }
    for (auto &list : adjacency_) {
        std::ranges::sort(list, {}, &Incidence::neighbor);
        auto dup = std::ranges::adjacent_find(list, {}, &Incidence::neighbor);
        if (dup != list.end()) {
            const auto &e = edges_[dup->edge];
            throw InvalidInput("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
    }
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edge_pairs) :
    Graph(vertex_count, std::span<const std::pair<int, int>>(edge_pairs.begin(), edge_pairs.size()))
{
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (const auto &list : adjacency_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

auto Graph::find_edge(Vertex a, Vertex b) const -> std::optional<EdgeIndex>
{
    const auto &list = adjacency_[a];
    auto it = std::ranges::lower_bound(list, b, {}, &Incidence::neighbor);
    if (it != list.end() && it->neighbor == b)
        return it->edge;
    return std::nullopt;
}

auto Graph::adjacent(Vertex a, Vertex b) const -> bool
{
    return find_edge(a, b).has_value();
}

auto Graph::edge_pairs() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto &e : edges_)
        out.emplace_back(e.u, e.v);
    return out;
}

auto Graph::induced(std::span<const Vertex> vertices) const -> std::pair<Graph, std::vector<EdgeIndex>>
{
    std::vector<int> local(vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> pairs;
    std::vector<EdgeIndex> origin;
    for (EdgeIndex e = 0; e < edge_count(); ++e) {
        const auto &[u, v] = edges_[e];
        if (local[u] >= 0 && local[v] >= 0) {
            pairs.emplace_back(local[u], local[v]);
            origin.push_back(e);
        }
    }
    return {Graph{static_cast<int>(vertices.size()), pairs}, std::move(origin)};
}

auto build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_pairs) -> Graph
{
    return Graph{vertex_count, edge_pairs};
}

Orientation::Orientation(const Graph &graph, std::vector<bool> reversed) :
    edges_(graph.edges()),
    reversed_(std::move(reversed)),
    indegrees_(graph.vertex_count(), 0)
{
    if (static_cast<int>(reversed_.size()) != graph.edge_count())
        throw InvalidInput("orientation has " + std::to_string(reversed_.size()) + " entries but graph has "
                           + std::to_string(graph.edge_count()) + " edges");
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e)
        ++indegrees_[head(e)];
}

auto Orientation::reversed_all() const -> Orientation
{
    Orientation out = *this;
    std::fill(out.indegrees_.begin(), out.indegrees_.end(), 0);
    for (std::size_t e = 0; e < out.reversed_.size(); ++e) {
        out.reversed_[e] = !out.reversed_[e];
        ++out.indegrees_[out.head(static_cast<EdgeIndex>(e))];
    }
    return out;
}

auto VertexPartition::members(Side s) const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < side.size(); ++v)
        if (side[v] == s)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

auto first_violation(const Graph &graph, const Orientation &orientation) -> std::optional<EdgeIndex>
{
    if (orientation.edge_count() != graph.edge_count()
        || static_cast<int>(orientation.indegrees().size()) != graph.vertex_count())
        throw InvalidInput("orientation does not match graph size");
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
        const auto &[u, v] = graph.edge(e);
        if (orientation.indegree(u) == orientation.indegree(v))
            return e;
    }
    return std::nullopt;
}

auto is_proper_orientation(const Graph &graph, const Orientation &orientation) -> bool
{
    return ! first_violation(graph, orientation).has_value();
}

auto max_indegree(const Orientation &orientation) -> int
{
    const auto &in = orientation.indegrees();
    return in.empty() ? 0 : *std::ranges::max_element(in);
}

auto is_bipartite(const Graph &graph) -> std::optional<VertexPartition>
{
    const int n = graph.vertex_count();
    std::vector<int> colour(n, -1);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] != -1)
            continue;
        colour[root] = 0;
        queue.push_back(root);
        while (! queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (const auto &[w, e] : graph.incident(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                }
                else if (colour[w] == colour[v])
                    return std::nullopt;
            }
        }
    }

    VertexPartition partition;
    partition.side.reserve(n);
    for (int c : colour)
        partition.side.push_back(c == 0 ? Side::X : Side::Y);
    return partition;
}

auto regularity(const Graph &graph) -> std::optional<int>
{
    if (graph.vertex_count() == 0)
        return 0;
    int r = graph.degree(0);
    for (Vertex v = 1; v < graph.vertex_count(); ++v)
        if (graph.degree(v) != r)
            return std::nullopt;
    return r;
}

auto connected_components(const Graph &graph) -> std::vector<std::vector<Vertex>>
{
    const int n = graph.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<Vertex> component{root};
        seen[root] = true;
        for (std::size_t i = 0; i < component.size(); ++i)
            for (const auto &[w, e] : graph.incident(component[i]))
                if (! seen[w]) {
                    seen[w] = true;
                    component.push_back(w);
                }
        std::ranges::sort(component);
        out.push_back(std::move(component));
    }
    return out;
}

auto line_graph(const Graph &graph) -> LineGraph
{
    std::vector<std::pair<int, int>> pairs;
    for (EdgeIndex a = 0; a < graph.edge_count(); ++a) {
        const auto &ea = graph.edge(a);
        for (EdgeIndex b = a + 1; b < graph.edge_count(); ++b) {
            const auto &eb = graph.edge(b);
            if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
                pairs.emplace_back(a, b);
        }
    }
    LineGraph out{Graph{graph.edge_count(), pairs}, {}};
    out.edge_of_vertex.resize(graph.edge_count());
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e)
        out.edge_of_vertex[e] = e;
    return out;
}

} // namespace orient
