#include <orient/exact.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace orient {

namespace {

constexpr std::size_t no_prefix = std::numeric_limits<std::size_t>::max();

class Searcher {
public:
    Searcher(const Graph &graph, int k, std::vector<EdgeIndex> order) :
        graph_(graph),
        k_(k),
        order_(std::move(order)),
        indegree_(graph.vertex_count(), 0),
        remaining_(graph.vertex_count(), 0),
        reversed_(graph.edge_count(), false)
    {
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            remaining_[v] = graph.degree(v);
    }

    // Directs order_[depth] into `head`; false when a pruning rule fires.
    // The assignment is kept either way and must be undone by the caller.
    auto assign(std::size_t depth, Vertex head) -> bool
    {
        EdgeIndex e = order_[depth];
        const auto &[a, b] = graph_.edge(e);
        reversed_[e] = head == a;
        ++indegree_[head];
        --remaining_[a];
        --remaining_[b];

        if (indegree_[head] > k_)
            return false;
        if (! feasible(a) || ! feasible(b))
            return false;
        if (remaining_[a] == 0 && ! neighbours_feasible(a))
            return false;
        if (remaining_[b] == 0 && ! neighbours_feasible(b))
            return false;
        return true;
    }

    void unassign(std::size_t depth, Vertex head)
    {
        const auto &[a, b] = graph_.edge(order_[depth]);
        --indegree_[head];
        ++remaining_[a];
        ++remaining_[b];
    }

    // Lower-indexed endpoint first.
    auto heads(std::size_t depth) const -> std::pair<Vertex, Vertex>
    {
        const auto &[a, b] = graph_.edge(order_[depth]);
        return {std::min(a, b), std::max(a, b)};
    }

    // With `best` set, gives up once a prefix below `index` has succeeded.
    auto run(std::size_t depth, const std::atomic<std::size_t> *best = nullptr, std::size_t index = 0) -> bool
    {
        ++nodes_;
        if (depth == order_.size())
            return true;
        if (best && (nodes_ & 0x3ff) == 0 && best->load(std::memory_order_relaxed) < index) {
            aborted_ = true;
            return false;
        }
        if (aborted_)
            return false;
        auto [first, second] = heads(depth);
        for (Vertex head : {first, second}) {
            bool ok = assign(depth, head) && run(depth + 1, best, index);
            if (ok)
                return true;
            unassign(depth, head);
        }
        return false;
    }

    auto orientation() const -> Orientation { return Orientation{graph_, reversed_}; }
    auto nodes() const -> std::uint64_t { return nodes_; }
    auto aborted() const -> bool { return aborted_; }

private:
    // Some value in [indegree, min(indegree + remaining, k)] avoids every
    // fully decided neighbour.
    auto feasible(Vertex v) const -> bool
    {
        int lo = indegree_[v];
        int hi = std::min(indegree_[v] + remaining_[v], k_);
        for (int value = lo; value <= hi; ++value) {
            bool blocked = false;
            for (const auto &[w, e] : graph_.incident(v))
                if (remaining_[w] == 0 && indegree_[w] == value) {
                    blocked = true;
                    break;
                }
            if (! blocked)
                return true;
        }
        return false;
    }

    auto neighbours_feasible(Vertex v) const -> bool
    {
        for (const auto &[w, e] : graph_.incident(v))
            if (! feasible(w))
                return false;
        return true;
    }

    const Graph &graph_;
    int k_;
    std::vector<EdgeIndex> order_;
    std::vector<int> indegree_;
    std::vector<int> remaining_;
    std::vector<bool> reversed_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

using Prefix = std::vector<Vertex>;

// Every pruning-consistent assignment of the first `depth` edges, in the
// order the sequential search would visit them.
void collect_prefixes(Searcher &searcher, std::size_t depth, std::size_t target, Prefix &current,
                      std::vector<Prefix> &out)
{
    if (depth == target) {
        out.push_back(current);
        return;
    }
    auto [first, second] = searcher.heads(depth);
    for (Vertex head : {first, second}) {
        if (searcher.assign(depth, head)) {
            current.push_back(head);
            collect_prefixes(searcher, depth + 1, target, current, out);
            current.pop_back();
        }
        searcher.unassign(depth, head);
    }
}

auto search_parallel(const Graph &graph, int k, std::vector<EdgeIndex> order) -> Decision
{
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t split = std::min<std::size_t>(order.size(), std::bit_width(threads) + 6);

    std::vector<Prefix> prefixes;
    {
        Searcher seed{graph, k, order};
        Prefix current;
        collect_prefixes(seed, 0, split, current, prefixes);
    }

    // The lowest-indexed successful prefix carries the same witness the
    // sequential search would return.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{no_prefix};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex witness_mutex;
    std::optional<Orientation> witness;

    auto worker = [&] {
        for (;;) {
            std::size_t index = next.fetch_add(1);
            if (index >= prefixes.size() || index > best.load())
                return;
            Searcher searcher{graph, k, order};
            for (std::size_t d = 0; d < prefixes[index].size(); ++d)
                searcher.assign(d, prefixes[index][d]);

            bool found = searcher.run(split, &best, index);
            nodes += searcher.nodes();
            if (found && ! searcher.aborted()) {
                std::lock_guard lock{witness_mutex};
                if (index < best.load()) {
                    best = index;
                    witness = searcher.orientation();
                }
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    return Decision{std::move(witness), nodes.load() + prefixes.size()};
}

} // namespace

auto search_edge_order(const Graph &graph) -> std::vector<EdgeIndex>
{
    const int n = graph.vertex_count();
    std::vector<bool> seen_vertex(n, false), seen_edge(graph.edge_count(), false);
    std::vector<EdgeIndex> order;
    order.reserve(graph.edge_count());
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (seen_vertex[root])
            continue;
        seen_vertex[root] = true;
        queue.push_back(root);
        while (! queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (const auto &[w, e] : graph.incident(v)) {
                if (! seen_edge[e]) {
                    seen_edge[e] = true;
                    order.push_back(e);
                }
                if (! seen_vertex[w]) {
                    seen_vertex[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return order;
}

auto search(const Graph &graph, int k, const SearchOptions &options) -> Decision
{
    if (k < 0)
        throw InvalidInput("k must be non-negative");
    auto order = search_edge_order(graph);
    if (options.parallel && order.size() > 16)
        return search_parallel(graph, k, std::move(order));

    Searcher searcher{graph, k, std::move(order)};
    Decision decision;
    if (searcher.run(0))
        decision.witness = searcher.orientation();
    decision.nodes_explored = searcher.nodes();
    return decision;
}

auto decide(const Graph &graph, int k, const SearchOptions &options) -> std::optional<Orientation>
{
    return search(graph, k, options).witness;
}

auto proper_orientation_number(const Graph &graph, const SolveOptions &options) -> SolveResult
{
    if (graph.edge_count() > options.edge_cap)
        throw CapExceeded("exact solve requested for " + std::to_string(graph.edge_count()) + " edges (cap "
                          + std::to_string(options.edge_cap) + ")");
    auto start = std::chrono::steady_clock::now();

    SolveResult result;
    result.bounds = bounds(graph, options.chromatic_cap);
    for (int k = result.bounds.lower; k <= result.bounds.upper; ++k) {
        auto decision = search(graph, k, SearchOptions{options.parallel});
        result.nodes_explored += decision.nodes_explored;
        if (decision.witness) {
            result.value = k;
            result.witness = std::move(*decision.witness);
            break;
        }
    }
    // every graph has a proper orientation with max indegree <= Delta
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

auto brute_force_oracle(const Graph &graph) -> int
{
    const int m = graph.edge_count();
    const int n = graph.vertex_count();
    if (m > brute_force_cap)
        throw CapExceeded("brute force oracle limited to " + std::to_string(brute_force_cap) + " edges, got "
                          + std::to_string(m));

    std::vector<int> tail(m), head(m), in(n, 0);
    for (int e = 0; e < m; ++e) {
        tail[e] = graph.edges()[e].u;
        head[e] = graph.edges()[e].v;
        ++in[head[e]];
    }

    int best = std::numeric_limits<int>::max();
    const std::uint64_t total = std::uint64_t{1} << m;
    // Gray code walk: consecutive orientations differ in one edge.
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step != 0) {
            int e = std::countr_zero(step);
            --in[head[e]];
            std::swap(tail[e], head[e]);
            ++in[head[e]];
        }
        bool proper = true;
        for (int e = 0; e < m; ++e)
            if (in[tail[e]] == in[head[e]]) {
                proper = false;
                break;
            }
        if (! proper)
            continue;
        int peak = 0;
        for (int v = 0; v < n; ++v)
            peak = std::max(peak, in[v]);
        best = std::min(best, peak);
    }
    return best;
}

} // namespace orient
