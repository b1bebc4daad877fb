#include <doctest.h>

#include "support/corpus.hpp"

#include <orient/graph.hpp>

#include <algorithm>
#include <random>

using namespace orient;
using namespace orient::testing;

namespace {

auto orient_by(const Graph &graph, std::initializer_list<std::pair<int, int>> arcs) -> Orientation
{
    std::vector<bool> reversed(graph.edge_count());
    for (auto [tail, head] : arcs) {
        auto e = graph.find_edge(tail, head);
        REQUIRE(e);
        reversed[*e] = graph.edge(*e).u == head;
    }
    return Orientation{graph, reversed};
}

auto random_orientation(const Graph &graph, std::mt19937 &rng) -> Orientation
{
    std::vector<bool> reversed(graph.edge_count());
    for (std::size_t e = 0; e < reversed.size(); ++e)
        reversed[e] = rng() & 1;
    return Orientation{graph, reversed};
}

} // namespace

TEST_CASE("build_graph keeps input order and rejects bad edges")
{
    std::vector<std::pair<int, int>> k2{{0, 1}};
    auto g = build_graph(2, k2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    auto k4 = complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.edge(0) == Edge{0, 1});
    CHECK(k4.edge(5) == Edge{2, 3});

    std::vector<std::pair<int, int>> dup{{0, 1}, {0, 1}};
    CHECK_THROWS_WITH_AS(build_graph(3, dup), doctest::Contains("duplicate"), InvalidInput);
    std::vector<std::pair<int, int>> flipped{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(build_graph(3, flipped), InvalidInput);
    std::vector<std::pair<int, int>> loop{{2, 2}};
    CHECK_THROWS_WITH_AS(build_graph(3, loop), doctest::Contains("loop"), InvalidInput);
    std::vector<std::pair<int, int>> range{{0, 3}};
    CHECK_THROWS_WITH_AS(build_graph(3, range), doctest::Contains("out of range"), InvalidInput);
}

TEST_CASE("adjacency lists mirror the edge list")
{
    auto g = petersen();
    int total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (const auto &[w, e] : g.incident(v)) {
            ++total;
            CHECK(g.edge(e).other(v) == w);
        }
    CHECK(total == 2 * g.edge_count());
}

TEST_CASE("is_proper_orientation")
{
    Graph k2{2, {{0, 1}}};
    CHECK(is_proper_orientation(k2, orient_by(k2, {{0, 1}})));

    auto triangle = cycle(3);
    auto cyclic = orient_by(triangle, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(cyclic.indegrees() == std::vector<int>{1, 1, 1});
    CHECK_FALSE(is_proper_orientation(triangle, cyclic));
    CHECK(first_violation(triangle, cyclic) == 0);

    auto p3 = path(3);
    auto inward = orient_by(p3, {{0, 1}, {2, 1}});
    CHECK(inward.indegrees() == std::vector<int>{0, 2, 0});
    CHECK(is_proper_orientation(p3, inward));

    CHECK_THROWS_AS(is_proper_orientation(triangle, orient_by(p3, {{0, 1}, {2, 1}})), InvalidInput);
    CHECK_THROWS_AS(Orientation(triangle, std::vector<bool>(2)), InvalidInput);
}

TEST_CASE("max_indegree")
{
    Graph k2{2, {{0, 1}}};
    CHECK(max_indegree(orient_by(k2, {{0, 1}})) == 1);
    auto s = star(3);
    CHECK(max_indegree(orient_by(s, {{1, 0}, {2, 0}, {3, 0}})) == 3);
    CHECK(max_indegree(orient_by(s, {{0, 1}, {0, 2}, {0, 3}})) == 1);
    auto empty = empty_graph(4);
    Orientation none{empty, {}};
    CHECK(max_indegree(none) == 0);
    CHECK(is_proper_orientation(empty, none));
}

TEST_CASE("is_bipartite")
{
    auto c4 = is_bipartite(cycle(4));
    REQUIRE(c4);
    CHECK(c4->members(Side::X) == std::vector<Vertex>{0, 2});
    CHECK(c4->members(Side::Y) == std::vector<Vertex>{1, 3});

    CHECK_FALSE(is_bipartite(cycle(5)));

    auto k33 = is_bipartite(complete_bipartite(3, 3));
    REQUIRE(k33);
    CHECK(k33->members(Side::X) == std::vector<Vertex>{0, 1, 2});

    // each component's lowest vertex goes to X
    auto two = is_bipartite(disjoint_union(path(2), path(3)));
    REQUIRE(two);
    CHECK(two->members(Side::X) == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("is_bipartite agrees with exhaustive 2-colouring on all graphs up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto &g : all_graphs(n)) {
            auto partition = is_bipartite(g);
            CHECK(partition.has_value() == naive_two_colourable(g));
            if (partition)
                for (const auto &[u, v] : g.edges())
                    CHECK(partition->side[u] != partition->side[v]);
        }
}

TEST_CASE("regularity")
{
    CHECK(regularity(petersen()) == 3);
    CHECK_FALSE(regularity(star(3)));
    CHECK(regularity(empty_graph(4)) == 0);
}

TEST_CASE("line_graph small cases")
{
    auto p3 = line_graph(path(3));
    CHECK(p3.graph.vertex_count() == 2);
    CHECK(p3.graph.edge_count() == 1);

    auto k3 = line_graph(cycle(3));
    CHECK(k3.graph.vertex_count() == 3);
    CHECK(k3.graph.edge_count() == 3);
}

TEST_CASE("line graph of K4 is the octahedron")
{
    auto k4 = complete(4);
    auto line = line_graph(k4);
    CHECK(line.graph.vertex_count() == 6);
    CHECK(line.graph.edge_count() == 12);
    CHECK(regularity(line.graph) == 4);
    // pairwise incidence, computed directly from the endpoint sets
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            if (a == b)
                continue;
            const auto &ea = k4.edge(line.edge_of_vertex[a]);
            const auto &eb = k4.edge(line.edge_of_vertex[b]);
            bool share = ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
            CHECK(line.graph.adjacent(a, b) == share);
        }
}

TEST_CASE("line graph counts")
{
    std::mt19937 rng{7};
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
        auto g = random_graph(n, m, rng);
        auto line = line_graph(g);
        int expected = 0;
        for (Vertex v = 0; v < n; ++v)
            expected += g.degree(v) * (g.degree(v) - 1) / 2;
        CHECK(line.graph.vertex_count() == g.edge_count());
        CHECK(line.graph.edge_count() == expected);
    }
}

TEST_CASE("indegrees sum to m and global reversal keeps regular orientations proper")
{
    std::mt19937 rng{11};
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto g = random_graph(n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), rng);
        auto d = random_orientation(g, rng);
        int sum = 0;
        for (int x : d.indegrees())
            sum += x;
        CHECK(sum == g.edge_count());
        for (Vertex v = 0; v < n; ++v) {
            int count = 0;
            for (EdgeIndex e = 0; e < g.edge_count(); ++e)
                count += d.head(e) == v;
            CHECK(d.indegree(v) == count);
        }
    }

    for (const auto &g : {petersen(), complete(4), cube(), prism(5), complete_bipartite(3, 3)}) {
        int r = *regularity(g);
        int proper_seen = 0;
        for (int trial = 0; trial < 4000; ++trial) {
            auto d = random_orientation(g, rng);
            if (! is_proper_orientation(g, d))
                continue;
            ++proper_seen;
            auto flipped = d.reversed_all();
            CHECK(is_proper_orientation(g, flipped));
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                CHECK(flipped.indegree(v) == r - d.indegree(v));
        }
        CHECK(proper_seen > 0);
    }
}
