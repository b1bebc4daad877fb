#pragma once

#include <orient/graph.hpp>

#include <optional>
#include <string_view>

namespace orient {

inline constexpr int default_chromatic_cap = 20;

/// Exact chromatic number by backtracking; throws CapExceeded above `cap` vertices.
auto chromatic_number_exact(const Graph &graph, int cap = default_chromatic_cap) -> int;

/// ceil((r+1)/2) for r-regular graphs with r >= 1.
auto regular_lower_bound(const Graph &graph) -> std::optional<int>;

auto is_star_forest(const Graph &graph) -> bool;

enum class LowerReason { Chromatic, Regular, Star, Trivial };
enum class UpperReason { MaxDegree };

auto to_string(LowerReason reason) -> std::string_view;
auto to_string(UpperReason reason) -> std::string_view;

struct BoundsReport {
    int lower = 0;
    int upper = 0;
    LowerReason lower_reason = LowerReason::Trivial;
    UpperReason upper_reason = UpperReason::MaxDegree;
    /// Chromatic number when it was computed; absent once the graph is past the cap.
    std::optional<int> chromatic;
    bool chromatic_skipped = false;
};

/// max(chi - 1, regular bound, 1 if any edge) below, Delta above.
auto bounds(const Graph &graph, int chromatic_cap = default_chromatic_cap) -> BoundsReport;

} // namespace orient
