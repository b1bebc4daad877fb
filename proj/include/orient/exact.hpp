#pragma once

#include <orient/bounds.hpp>
#include <orient/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace orient {

inline constexpr int default_solve_cap = 40;
inline constexpr int brute_force_cap = 22;

struct SearchOptions {
    /// Split the top of the search tree across hardware threads. The decision
    /// is unaffected; the witness may differ from the sequential one.
    bool parallel = false;
};

struct Decision {
    std::optional<Orientation> witness;
    std::uint64_t nodes_explored = 0;
};

struct SolveOptions {
    int edge_cap = default_solve_cap;
    int chromatic_cap = default_chromatic_cap;
    bool parallel = false;
};

struct SolveResult {
    int value = 0;
    Orientation witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    BoundsReport bounds;
};

/// Edge order used by the search: vertices visited breadth first from the
/// lowest index, each contributing its not yet listed edges by neighbour.
auto search_edge_order(const Graph &graph) -> std::vector<EdgeIndex>;

/// Branch and bound over edge directions. The witness, when present, is a
/// proper orientation with max indegree <= k; absence is certified by an
/// exhausted search.
auto search(const Graph &graph, int k, const SearchOptions &options = {}) -> Decision;

auto decide(const Graph &graph, int k, const SearchOptions &options = {}) -> std::optional<Orientation>;

/// Tries k = lower bound, lower + 1, ... and returns the first success.
/// Throws CapExceeded when the graph has more than `options.edge_cap` edges.
auto proper_orientation_number(const Graph &graph, const SolveOptions &options = {}) -> SolveResult;

/// Plain enumeration of all 2^m orientations. Shares no code with `search`.
auto brute_force_oracle(const Graph &graph) -> int;

} // namespace orient
