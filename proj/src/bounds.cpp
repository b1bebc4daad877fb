#include <orient/bounds.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace orient {

namespace {

struct Colourer {
    const Graph &graph;
    std::vector<Vertex> order;
    std::vector<int> colour;

    // Colours order[depth..] using at most `limit` colours; `used` is the
    // number of distinct colours handed out so far.
    auto extend(std::size_t depth, int used, int limit) -> bool
    {
        if (depth == order.size())
            return true;
        Vertex v = order[depth];
        // a new colour may only be opened in increasing order
        int top = std::min(limit, used + 1);
        for (int c = 1; c <= top; ++c) {
            bool clash = false;
            for (const auto &[w, e] : graph.incident(v))
                if (colour[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            colour[v] = c;
            if (extend(depth + 1, std::max(used, c), limit))
                return true;
            colour[v] = 0;
        }
        return false;
    }
};

} // namespace

auto chromatic_number_exact(const Graph &graph, int cap) -> int
{
    const int n = graph.vertex_count();
    if (n > cap)
        throw CapExceeded("chromatic number requested for " + std::to_string(n) + " vertices (cap " + std::to_string(cap) + ")");
    if (n == 0)
        return 0;
    if (graph.edge_count() == 0)
        return 1;

    Colourer colourer{graph, std::vector<Vertex>(n), std::vector<int>(n, 0)};
    std::iota(colourer.order.begin(), colourer.order.end(), 0);
    std::ranges::stable_sort(colourer.order, std::greater{}, [&](Vertex v) { return graph.degree(v); });

    for (int k = 2;; ++k) {
        std::ranges::fill(colourer.colour, 0);
        if (colourer.extend(0, 0, k))
            return k;
    }
}

auto regular_lower_bound(const Graph &graph) -> std::optional<int>
{
    auto r = regularity(graph);
    if (! r || *r == 0)
        return std::nullopt;
    return (*r + 2) / 2;
}

auto is_star_forest(const Graph &graph) -> bool
{
    for (const auto &component : connected_components(graph)) {
        if (component.size() <= 2)
            continue;
        // a star on t+1 >= 3 vertices has exactly one vertex of degree t, the rest leaves
        int centres = 0;
        for (Vertex v : component) {
            int d = graph.degree(v);
            if (d == static_cast<int>(component.size()) - 1)
                ++centres;
            else if (d != 1)
                return false;
        }
        if (centres != 1)
            return false;
        int edges = 0;
        for (Vertex v : component)
            edges += graph.degree(v);
        if (edges / 2 != static_cast<int>(component.size()) - 1)
            return false;
    }
    return true;
}

auto to_string(LowerReason reason) -> std::string_view
{
    switch (reason) {
    case LowerReason::Chromatic: return "chromatic";
    case LowerReason::Regular: return "regular";
    case LowerReason::Star: return "star";
    case LowerReason::Trivial: return "trivial";
    }
    return "?";
}

auto to_string(UpperReason) -> std::string_view
{
    return "max_degree";
}

auto bounds(const Graph &graph, int chromatic_cap) -> BoundsReport
{
    BoundsReport report;
    report.upper = graph.max_degree();
    if (graph.edge_count() == 0)
        return report;

    report.lower = 1;
    report.lower_reason = LowerReason::Star;

    if (graph.vertex_count() <= chromatic_cap) {
        report.chromatic = chromatic_number_exact(graph, chromatic_cap);
        if (*report.chromatic - 1 > report.lower) {
            report.lower = *report.chromatic - 1;
            report.lower_reason = LowerReason::Chromatic;
        }
    }
    else
        report.chromatic_skipped = true;

    if (auto r = regular_lower_bound(graph); r && *r > report.lower) {
        report.lower = *r;
        report.lower_reason = LowerReason::Regular;
    }
    return report;
}

} // namespace orient
