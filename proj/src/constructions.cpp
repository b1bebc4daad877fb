#include <orient/constructions.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

namespace orient {

auto to_string(EdgeClass c) -> std::string_view
{
    return c == EdgeClass::Class1 ? "Class1" : "Class2";
}

auto is_proper_edge_colouring(const Graph &graph, const EdgeColouring &colouring) -> bool
{
    if (static_cast<int>(colouring.colours.size()) != graph.edge_count())
        return false;
    for (int c : colouring.colours)
        if (c < 1 || c > colouring.colour_count)
            return false;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        auto incident = graph.incident(v);
        for (std::size_t i = 0; i < incident.size(); ++i)
            for (std::size_t j = i + 1; j < incident.size(); ++j)
                if (colouring.colours[incident[i].edge] == colouring.colours[incident[j].edge])
                    return false;
    }
    return true;
}

namespace {

struct EdgeColourer {
    const Graph &graph;
    int limit;
    std::vector<EdgeIndex> order;
    std::vector<int> colour;
    std::vector<std::uint64_t> used_at;

    auto extend(std::size_t depth, int used) -> bool
    {
        if (depth == order.size())
            return true;
        EdgeIndex e = order[depth];
        const auto &[u, v] = graph.edge(e);
        std::uint64_t blocked = used_at[u] | used_at[v];
        int top = std::min(limit, used + 1);
        for (int c = 1; c <= top; ++c) {
            std::uint64_t bit = std::uint64_t{1} << c;
            if (blocked & bit)
                continue;
            colour[e] = c;
            used_at[u] |= bit;
            used_at[v] |= bit;
            if (extend(depth + 1, std::max(used, c)))
                return true;
            used_at[u] &= ~bit;
            used_at[v] &= ~bit;
        }
        colour[e] = 0;
        return false;
    }
};

} // namespace

auto edge_colouring_with(const Graph &graph, int colours) -> std::optional<EdgeColouring>
{
    if (colours > 62)
        throw CapExceeded("edge colouring supports at most 62 colours");
    if (graph.edge_count() == 0)
        return EdgeColouring{{}, colours};
    if (colours < graph.max_degree())
        return std::nullopt;

    // heaviest edges first; ties keep the breadth-first search order
    auto order = search_edge_order(graph);
    std::ranges::stable_sort(order, std::greater{}, [&](EdgeIndex e) {
        return graph.degree(graph.edge(e).u) + graph.degree(graph.edge(e).v);
    });

    EdgeColourer colourer{graph, colours, std::move(order), std::vector<int>(graph.edge_count(), 0),
                          std::vector<std::uint64_t>(graph.vertex_count(), 0)};
    if (! colourer.extend(0, 0))
        return std::nullopt;
    return EdgeColouring{std::move(colourer.colour), colours};
}

auto edge_colouring_exact(const Graph &graph, int cap) -> ClassifiedColouring
{
    if (graph.edge_count() > cap)
        throw CapExceeded("edge colouring requested for " + std::to_string(graph.edge_count()) + " edges (cap "
                          + std::to_string(cap) + ")");
    const int delta = graph.max_degree();
    if (auto colouring = edge_colouring_with(graph, delta))
        return {std::move(*colouring), EdgeClass::Class1};
    auto colouring = edge_colouring_with(graph, delta + 1);
    if (! colouring)
        throw std::logic_error("no edge colouring with Delta + 1 colours");
    return {std::move(*colouring), EdgeClass::Class2};
}

namespace {

struct Matcher {
    const Graph &graph;
    const VertexPartition &partition;
    std::vector<EdgeIndex> matched_edge; // per vertex, -1 when free
    std::vector<int> visit_stamp;
    int stamp = 0;

    auto augment(Vertex x) -> bool
    {
        for (const auto &[y, e] : graph.incident(x)) {
            if (partition.side[y] != Side::Y || visit_stamp[y] == stamp)
                continue;
            visit_stamp[y] = stamp;
            EdgeIndex current = matched_edge[y];
            if (current == -1 || augment(graph.edge(current).other(y))) {
                matched_edge[x] = e;
                matched_edge[y] = e;
                return true;
            }
        }
        return false;
    }
};

} // namespace

auto perfect_matching(const Graph &graph, const VertexPartition &partition) -> std::vector<EdgeIndex>
{
    if (static_cast<int>(partition.side.size()) != graph.vertex_count())
        throw InvalidInput("partition does not cover the graph");
    for (const auto &[u, v] : graph.edges())
        if (partition.side[u] == partition.side[v])
            throw InvalidInput("partition is not a bipartition of the graph");
    auto xs = partition.members(Side::X);
    if (xs.size() * 2 != partition.side.size())
        throw InvalidInput("sides differ in size, no perfect matching");

    Matcher matcher{graph, partition, std::vector<EdgeIndex>(graph.vertex_count(), -1),
                    std::vector<int>(graph.vertex_count(), 0)};
    for (Vertex x : xs) {
        ++matcher.stamp;
        if (! matcher.augment(x))
            throw InvalidInput("no perfect matching: vertex " + std::to_string(x) + " cannot be matched");
    }

    std::vector<EdgeIndex> out;
    for (Vertex x : xs)
        out.push_back(matcher.matched_edge[x]);
    std::ranges::sort(out);
    return out;
}

auto matching_decomposition(const Graph &graph) -> std::vector<std::vector<EdgeIndex>>
{
    auto r = regularity(graph);
    if (! r || *r < 1)
        throw InvalidInput("matching decomposition needs a regular graph of degree >= 1");
    auto partition = is_bipartite(graph);
    if (! partition)
        throw InvalidInput("matching decomposition needs a bipartite graph");

    std::vector<bool> taken(graph.edge_count(), false);
    std::vector<std::vector<EdgeIndex>> matchings;
    for (int round = 0; round < *r; ++round) {
        std::vector<std::pair<int, int>> pairs;
        std::vector<EdgeIndex> origin;
        for (EdgeIndex e = 0; e < graph.edge_count(); ++e)
            if (! taken[e]) {
                pairs.emplace_back(graph.edge(e).u, graph.edge(e).v);
                origin.push_back(e);
            }
        Graph rest{graph.vertex_count(), pairs};
        std::vector<EdgeIndex> matching;
        for (EdgeIndex local : perfect_matching(rest, *partition)) {
            matching.push_back(origin[local]);
            taken[origin[local]] = true;
        }
        matchings.push_back(std::move(matching));
    }
    return matchings;
}

auto orient_bipartite_odd_regular(const Graph &graph) -> Orientation
{
    auto r = regularity(graph);
    if (! r || *r % 2 == 0)
        throw InvalidInput("graph is not odd-regular");
    auto partition = is_bipartite(graph);
    if (! partition)
        throw InvalidInput("graph is not bipartite");

    const int k = (*r - 1) / 2;
    auto matchings = matching_decomposition(graph);
    std::vector<Vertex> head(graph.edge_count());
    for (int i = 0; i < static_cast<int>(matchings.size()); ++i) {
        Side target = i <= k ? Side::Y : Side::X;
        for (EdgeIndex e : matchings[i]) {
            const auto &[u, v] = graph.edge(e);
            head[e] = partition->side[u] == target ? u : v;
        }
    }
    return Orientation::from_heads(graph, [&](EdgeIndex e) { return head[e]; });
}

auto orient_line_graph(const Graph &graph, const EdgeColouring &colouring) -> LineGraphOrientation
{
    auto r = regularity(graph);
    if (! r || *r % 2 == 0)
        throw InvalidInput("line graph construction needs an odd-regular graph");
    const int k = (*r - 1) / 2;
    if (colouring.colour_count != *r)
        throw InvalidInput("colouring must use exactly Delta = " + std::to_string(*r) + " colours, has "
                           + std::to_string(colouring.colour_count));
    if (! is_proper_edge_colouring(graph, colouring))
        throw InvalidInput("edge colouring is not proper");

    LineGraphOrientation out{line_graph(graph), {}};
    const Graph &line = out.line.graph;
    auto colour_of = [&](Vertex x) { return colouring.colours[out.line.edge_of_vertex[x]]; };

    std::vector<Vertex> head(line.edge_count(), -1);
    for (EdgeIndex e = 0; e < line.edge_count(); ++e) {
        const auto &[a, b] = line.edge(e);
        if (std::abs(colour_of(a) - colour_of(b)) > k)
            head[e] = colour_of(a) > colour_of(b) ? a : b;
    }

    // Remaining edges split into the two-colour subgraphs H_{p,q}; each must
    // be a disjoint union of cycles, oriented cyclically.
    for (int p = 1; p <= *r; ++p)
        for (int q = p + 1; q <= std::min(*r, p + k); ++q) {
            std::vector<Vertex> members;
            for (Vertex x = 0; x < line.vertex_count(); ++x)
                if (colour_of(x) == p || colour_of(x) == q)
                    members.push_back(x);
            auto [sub, origin] = line.induced(members);
            if (regularity(sub) != 2)
                throw InvalidInput("two-colour subgraph for colours " + std::to_string(p) + "," + std::to_string(q)
                                   + " is not 2-regular");
            for (const auto &component : connected_components(sub)) {
                // walk from the lowest vertex towards its lowest neighbour
                Vertex start = component.front();
                Vertex previous = start;
                Vertex current = sub.incident(start).front().neighbor;
                head[origin[sub.incident(start).front().edge]] = members[current];
                std::size_t steps = 1;
                while (current != start) {
                    auto incident = sub.incident(current);
                    const auto &next = incident[0].neighbor == previous ? incident[1] : incident[0];
                    head[origin[next.edge]] = members[next.neighbor];
                    previous = current;
                    current = next.neighbor;
                    ++steps;
                }
                if (steps != component.size() || steps % 2 != 0)
                    throw InvalidInput("two-colour component is not an even cycle");
            }
        }

    out.orientation = Orientation::from_heads(line, [&](EdgeIndex e) { return head[e]; });
    return out;
}

auto greedy_orientation(const Graph &graph) -> GreedyReport
{
    const int n = graph.vertex_count();
    std::vector<int> remaining(n);
    for (Vertex v = 0; v < n; ++v)
        remaining[v] = graph.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<Vertex> head(graph.edge_count(), -1);

    for (int left = graph.edge_count(); left > 0;) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (! removed[v] && (pick == -1 || remaining[v] > remaining[pick]))
                pick = v;
        for (const auto &[w, e] : graph.incident(pick))
            if (! removed[w]) {
                head[e] = pick;
                --remaining[w];
                --left;
            }
        remaining[pick] = 0;
        removed[pick] = true;
    }

    GreedyReport report;
    report.orientation = Orientation::from_heads(graph, [&](EdgeIndex e) { return head[e]; });
    report.achieved = max_indegree(report.orientation);
    if (auto r = regularity(graph); r && *r >= 1) {
        report.regular_degree = r;
        report.lower_bound = (*r + 2) / 2;
        report.ratio = static_cast<double>(report.achieved) / *report.lower_bound;
        report.theta = 2.0 - 2.0 / (*r + 2);
    }
    return report;
}

auto cubic_proper_orientation_number(const Graph &graph) -> SolveResult
{
    if (regularity(graph) != 3)
        throw InvalidInput("graph is not 3-regular");
    auto start = std::chrono::steady_clock::now();

    SolveResult result;
    std::vector<Vertex> head(graph.edge_count(), -1);
    for (const auto &component : connected_components(graph)) {
        auto [sub, origin] = graph.induced(component);
        int value;
        Orientation local;
        if (sub.vertex_count() == 4) {
            // K4: transitive tournament, indegrees 0..3
            value = 3;
            local = Orientation::from_heads(sub, [&](EdgeIndex e) { return std::max(sub.edge(e).u, sub.edge(e).v); });
        }
        else if (is_bipartite(sub)) {
            value = 2;
            local = orient_bipartite_odd_regular(sub);
        }
        else {
            value = 3;
            local = greedy_orientation(sub).orientation;
        }
        result.value = std::max(result.value, value);
        for (EdgeIndex e = 0; e < sub.edge_count(); ++e)
            head[origin[e]] = component[local.head(e)];
    }
    result.witness = Orientation::from_heads(graph, [&](EdgeIndex e) { return head[e]; });
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace orient
