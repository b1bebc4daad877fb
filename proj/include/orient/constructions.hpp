#pragma once

#include <orient/exact.hpp>
#include <orient/graph.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace orient {

inline constexpr int default_edge_colouring_cap = 60;

struct EdgeColouring {
    /// Colour of each edge, in [1, colour_count].
    std::vector<int> colours;
    int colour_count = 0;
};

enum class EdgeClass { Class1, Class2 };

auto to_string(EdgeClass c) -> std::string_view;

auto is_proper_edge_colouring(const Graph &graph, const EdgeColouring &colouring) -> bool;

/// Proper colouring with at most `colours` colours, if one exists. Exhaustive.
auto edge_colouring_with(const Graph &graph, int colours) -> std::optional<EdgeColouring>;

struct ClassifiedColouring {
    EdgeColouring colouring;
    EdgeClass edge_class;
};

/// Tries Delta colours, then Delta + 1. Throws CapExceeded past `cap` edges.
auto edge_colouring_exact(const Graph &graph, int cap = default_edge_colouring_cap) -> ClassifiedColouring;

/// Augmenting-path maximum matching between the X and Y sides. Returns the
/// matched edge indices sorted; throws InvalidInput when the matching is not
/// perfect.
auto perfect_matching(const Graph &graph, const VertexPartition &partition) -> std::vector<EdgeIndex>;

/// Edge sets of r disjoint perfect matchings of an r-regular bipartite graph.
auto matching_decomposition(const Graph &graph) -> std::vector<std::vector<EdgeIndex>>;

/// (2k+1)-regular bipartite graph: the first k+1 matchings run X to Y, the
/// rest Y to X, so X vertices end with indegree k and Y vertices with k+1.
auto orient_bipartite_odd_regular(const Graph &graph) -> Orientation;

struct LineGraphOrientation {
    LineGraph line;
    Orientation orientation;
};

/// Proper orientation of L(G) for a (2k+1)-regular G and a colouring with
/// exactly 2k+1 colours; every vertex e of L(G) gets indegree c(e) + k - 1.
auto orient_line_graph(const Graph &graph, const EdgeColouring &colouring) -> LineGraphOrientation;

struct GreedyReport {
    Orientation orientation;
    int achieved = 0;
    /// Set for r-regular inputs with r >= 1.
    std::optional<int> regular_degree;
    std::optional<int> lower_bound;
    std::optional<double> ratio;
    std::optional<double> theta;
};

/// Repeatedly take a vertex of maximum remaining degree (lowest index first)
/// and point all its remaining edges at it.
auto greedy_orientation(const Graph &graph) -> GreedyReport;

/// Exact value for cubic graphs without search: K4 components need 3,
/// bipartite components 2, everything else 3.
auto cubic_proper_orientation_number(const Graph &graph) -> SolveResult;

} // namespace orient
