#include <doctest.h>

#include "support/corpus.hpp"

#include <orient/io.hpp>

#include <json.hpp>

#include <random>

using namespace orient;
using namespace orient::testing;

TEST_CASE("edge list parsing")
{
    auto g = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge(1) == Edge{1, 2});

    auto blank = parse_edge_list("\n2 1\n\n0 1\n\n");
    CHECK(blank.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 a\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
}

TEST_CASE("edge list and orientation text survive a round trip")
{
    std::mt19937 rng{1};
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(8, static_cast<int>(rng() % 20), rng);
        auto back = parse_edge_list(format_edge_list(g));
        CHECK(back == g);

        std::vector<bool> reversed(g.edge_count());
        for (std::size_t e = 0; e < reversed.size(); ++e)
            reversed[e] = rng() & 1;
        Orientation d{g, reversed};
        CHECK(parse_orientation(format_orientation(d), g).reversed() == reversed);
    }
}

TEST_CASE("orientation parsing checks the graph")
{
    auto triangle = cycle(3); // edges (0,1) (1,2) (2,0)
    auto d = parse_orientation("1 0\n1 2\n2 0\n", triangle);
    CHECK(d.indegrees() == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(parse_orientation("0 1\n1 2\n", triangle), InvalidInput);
    CHECK_THROWS_AS(parse_orientation("0 1\n1 2\n2 0\n0 1\n", triangle), InvalidInput);
    CHECK_THROWS_AS(parse_orientation("0 1\n0 2\n2 0\n", triangle), InvalidInput);
    CHECK_THROWS_AS(parse_orientation("0 1 2\n", triangle), ParseError);
}

TEST_CASE("edge colouring text")
{
    CHECK(format_edge_colouring(EdgeColouring{{1, 2, 3}, 3}) == "0 1\n1 2\n2 3\n");
}

TEST_CASE("role sidecar")
{
    std::vector<Role> roles{{RoleKind::PositiveLiteral, 0}, {RoleKind::GadgetVertex, 1, 7}};
    auto text = format_role_sidecar(roles);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc["0"] == "PositiveLiteral(1)");
    CHECK(doc["1"] == "GadgetVertex(2,7)");
    auto parsed = parse_role_sidecar(text, 2);
    CHECK(parsed == std::vector<std::string>{"PositiveLiteral(1)", "GadgetVertex(2,7)"});
    CHECK_THROWS_AS(parse_role_sidecar("[1]", 2), ParseError);
    CHECK_THROWS_AS(parse_role_sidecar("{\"5\": \"x\"}", 2), ParseError);
    CHECK_THROWS_AS(parse_role_sidecar("{", 2), ParseError);
}

TEST_CASE("dot output")
{
    auto k4 = complete(4);
    auto plain = to_dot(k4);
    CHECK(plain.starts_with("graph G {"));
    std::size_t count = 0;
    for (std::size_t at = plain.find(" -- "); at != std::string::npos; at = plain.find(" -- ", at + 1))
        ++count;
    CHECK(count == 6);

    auto tournament = Orientation::from_heads(k4, [&](EdgeIndex e) { return k4.edge(e).v; });
    auto directed = to_dot(k4, DotOptions{&tournament});
    CHECK(directed.starts_with("digraph G {"));
    for (int d = 0; d <= 3; ++d)
        CHECK(directed.find("in=" + std::to_string(d)) != std::string::npos);
    CHECK(directed.find("0 -> 1;") != std::string::npos);

    std::vector<std::string> roles{"PositiveLiteral(1)", "TriangleVertex(1,1)", "GadgetVertex(1,1)", ""};
    auto shaped = to_dot(k4, DotOptions{nullptr, &roles});
    CHECK(shaped.find("shape=box") != std::string::npos);
    CHECK(shaped.find("shape=triangle") != std::string::npos);
    CHECK(shaped.find("shape=circle") != std::string::npos);
}
