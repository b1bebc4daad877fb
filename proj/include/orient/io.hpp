#pragma once

#include <orient/constructions.hpp>
#include <orient/graph.hpp>
#include <orient/reduction.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace orient {

/// "n m" then m lines "u v". Throws ParseError.
auto parse_edge_list(std::string_view text) -> Graph;
auto format_edge_list(const Graph &graph) -> std::string;

/// m lines "tail head"; line i must name the endpoints of edge i. Throws
/// ParseError on syntax and InvalidInput when the file does not fit the graph.
auto parse_orientation(std::string_view text, const Graph &graph) -> Orientation;
auto format_orientation(const Orientation &orientation) -> std::string;

/// m lines "edge_index colour".
auto format_edge_colouring(const EdgeColouring &colouring) -> std::string;

/// Object mapping vertex index strings to role strings.
auto format_role_sidecar(std::span<const Role> roles) -> std::string;
/// Inverse of format_role_sidecar, returns one role string per vertex.
auto parse_role_sidecar(std::string_view text, int vertex_count) -> std::vector<std::string>;

struct DotOptions {
    const Orientation *orientation = nullptr;
    /// Role strings per vertex; vertices are shaped by role kind.
    const std::vector<std::string> *roles = nullptr;
};

auto to_dot(const Graph &graph, const DotOptions &options = {}) -> std::string;

auto read_file(const std::string &path) -> std::string;
void write_file(const std::string &path, std::string_view contents);

} // namespace orient
