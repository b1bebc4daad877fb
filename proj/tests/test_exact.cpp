#include <doctest.h>

#include "support/corpus.hpp"

#include <orient/exact.hpp>

#include <algorithm>
#include <random>

using namespace orient;
using namespace orient::testing;

namespace {

void check_witness(const Graph &g, const Orientation &witness, int bound)
{
    CHECK(is_proper_orientation(g, witness));
    CHECK(max_indegree(witness) <= bound);
}

} // namespace

TEST_CASE("brute force oracle on small graphs")
{
    CHECK(brute_force_oracle(cycle(4)) == 2);
    CHECK(brute_force_oracle(cycle(5)) == 2);
    CHECK(brute_force_oracle(star(3)) == 1);
    CHECK(brute_force_oracle(complete(4)) == 3);
    CHECK(brute_force_oracle(empty_graph(3)) == 0);
    CHECK_THROWS_AS(brute_force_oracle(complete(8)), CapExceeded);
}

TEST_CASE("decide on K4 and K2")
{
    auto k4 = complete(4);
    REQUIRE(brute_force_oracle(k4) == 3);
    CHECK_FALSE(decide(k4, 2));

    auto witness = decide(k4, 3);
    REQUIRE(witness);
    check_witness(k4, *witness, 3);
    auto in = witness->indegrees();
    std::ranges::sort(in);
    CHECK(in == std::vector<int>{0, 1, 2, 3});

    Graph k2{2, {{0, 1}}};
    auto one = decide(k2, 1);
    REQUIRE(one);
    // first branch points the edge at the lower endpoint
    CHECK(one->head(0) == 0);
    CHECK_FALSE(decide(k2, 0));
    CHECK_THROWS_AS(decide(k2, -1), InvalidInput);
}

TEST_CASE("proper_orientation_number on named graphs")
{
    auto p = proper_orientation_number(petersen());
    CHECK(p.value == 3);
    check_witness(petersen(), p.witness, 3);

    auto k33 = proper_orientation_number(complete_bipartite(3, 3));
    CHECK(k33.value == 2);
    CHECK(proper_orientation_number(complete(4)).value == 3);

    auto empty = proper_orientation_number(empty_graph(3));
    CHECK(empty.value == 0);
    CHECK(empty.witness.edge_count() == 0);

    CHECK(proper_orientation_number(disjoint_union(complete(4), cycle(4))).value == 3);
}

TEST_CASE("solve cap")
{
    auto g = complete(10); // 45 edges
    CHECK_THROWS_AS(proper_orientation_number(g), CapExceeded);
    CHECK_THROWS_AS(proper_orientation_number(cycle(41)), CapExceeded);
    CHECK(proper_orientation_number(cycle(41), SolveOptions{41}).value == 2);
}

TEST_CASE("search edge order keeps neighbourhoods together")
{
    auto g = petersen();
    auto order = search_edge_order(g);
    CHECK(order.size() == 15);
    auto sorted = order;
    std::ranges::sort(sorted);
    for (int e = 0; e < 15; ++e)
        CHECK(sorted[e] == e);
    // the root's edges come first
    for (int i = 0; i < 3; ++i) {
        const auto &edge = g.edge(order[i]);
        CHECK((edge.u == 0 || edge.v == 0));
    }
}

TEST_CASE("exact solver matches the brute force oracle on every graph up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto &g : all_graphs(n)) {
            auto result = proper_orientation_number(g);
            CHECK(result.value == brute_force_oracle(g));
            check_witness(g, result.witness, result.value);
            CHECK(max_indegree(result.witness) == result.value);
            CHECK(result.bounds.lower <= result.value);
            CHECK(result.value <= g.max_degree());
        }
}

TEST_CASE("exact solver matches the oracle on random graphs, decide is monotone")
{
    std::mt19937 rng{2024};
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        int max_m = std::min(20, n * (n - 1) / 2);
        auto g = random_graph(n, static_cast<int>(rng() % (max_m + 1)), rng);
        auto result = proper_orientation_number(g);
        CHECK(result.value == brute_force_oracle(g));
        for (int k = 0; k <= g.max_degree(); ++k) {
            bool yes = decide(g, k).has_value();
            CHECK(yes == (k >= result.value));
        }
    }
}

TEST_CASE("parallel search returns the sequential value and witness")
{
    std::mt19937 rng{99};
    std::vector<Graph> graphs{petersen(), line_graph(complete(4)).graph, prism(6), complete(6)};
    for (int i = 0; i < 10; ++i)
        graphs.push_back(random_graph(10, 24, rng));
    for (const auto &g : graphs)
        for (int k = 1; k <= g.max_degree(); ++k) {
            auto sequential = search(g, k);
            auto parallel = search(g, k, SearchOptions{true});
            REQUIRE(sequential.witness.has_value() == parallel.witness.has_value());
            if (sequential.witness)
                CHECK(sequential.witness->reversed() == parallel.witness->reversed());
        }
}

TEST_CASE("witnesses are deterministic")
{
    auto a = proper_orientation_number(petersen());
    auto b = proper_orientation_number(petersen());
    CHECK(a.witness.reversed() == b.witness.reversed());
}
