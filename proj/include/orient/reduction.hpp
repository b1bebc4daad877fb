#pragma once

#include <orient/graph.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orient {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an assignment cannot be turned into a witness, or a witness
/// does not decode to a satisfying assignment.
class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Literal {
    int variable; // 0-based
    bool negated;

    auto operator==(const Literal &) const -> bool = default;
};

using Clause = std::array<Literal, 3>;

struct Formula {
    int variable_count = 0;
    std::vector<Clause> clauses;
};

using Assignment = std::vector<bool>;

/// DIMACS CNF, exactly three literals per clause (repeats allowed).
auto parse_cnf(std::string_view text) -> Formula;
auto to_dimacs(const Formula &formula) -> std::string;

auto satisfies(const Formula &formula, const Assignment &assignment) -> bool;

struct IncidenceGraph {
    /// Vertices: clauses 0..k-1, then x_i at k + 2i and its negation at k + 2i + 1.
    Graph graph;
    /// m <= 3n - 6 (vacuous below three vertices); necessary for planarity.
    bool euler_bound_holds = true;
};

auto incidence_graph(const Formula &formula) -> IncidenceGraph;

// Clause gadget ---------------------------------------------------------------

inline constexpr int gadget_vertex_count = 12;
/// Gadget vertices are s^1..s^12 stored as 0..11; s^1, s^2, s^3 are the boundary.
using GadgetEdges = std::vector<std::pair<int, int>>;

/// Edges every completion must contain.
auto required_gadget_edges() -> GadgetEdges;

/// The shipped clause gadget: the required edges closed under the rotation
/// s^1->s^2->s^3, s^4->s^5->s^6, s^7->s^9->s^11, s^8->s^10->s^12.
auto default_clause_gadget() -> GadgetEdges;

using BoundaryPattern = std::array<int, 3>;

/// Internal orientation (one `reversed` flag per gadget edge) in which s^t
/// has total indegree pattern[t] counting its incoming connector, every
/// vertex has indegree <= 2 and adjacent gadget vertices differ.
auto gadget_extension(const GadgetEdges &edges, const BoundaryPattern &pattern) -> std::optional<std::vector<bool>>;

struct PatternOutcome {
    BoundaryPattern pattern;
    bool should_extend;
    std::optional<std::vector<bool>> extension;

    [[nodiscard]] auto ok() const -> bool { return should_extend == extension.has_value(); }
};

struct GadgetReport {
    std::vector<PatternOutcome> outcomes;
    bool passed = false;
};

/// All eight patterns in {1,2}^3: only (1,1,1) may be inextensible.
/// Throws InvalidInput when the edges are not on s^1..s^12 or a boundary vertex is unused.
auto gadget_contract_check(const GadgetEdges &edges) -> GadgetReport;

struct GadgetCandidate {
    GadgetEdges edges;
    bool symmetric;
};

/// Completions of the required edges by up to `max_extra` edges among s^4..s^12
/// with maximum degree 3 and at most 16 edges, keeping only connected gadgets
/// that pass the contract. Ranked symmetric first, then by edge count.
auto search_gadget_completions(int max_extra) -> std::vector<GadgetCandidate>;

// Reduction graph -------------------------------------------------------------

enum class RoleKind { PositiveLiteral, NegativeLiteral, TriangleVertex, GadgetVertex };

struct Role {
    RoleKind kind;
    int index;        // variable or clause, 0-based
    int position = 0; // 1..3 for triangle vertices, 1..12 for gadget vertices

    /// e.g. "PositiveLiteral(1)", "GadgetVertex(2,7)"; indices printed 1-based.
    [[nodiscard]] auto to_string() const -> std::string;
};

struct ReductionGraph {
    Graph graph;
    std::vector<Role> roles;
    /// (literal vertex, s^t_j) per clause slot, in clause then slot order.
    std::vector<std::pair<Vertex, Vertex>> connector_edges;
    int variable_count = 0;
    int clause_count = 0;

    [[nodiscard]] auto literal_vertex(Literal literal) const -> Vertex { return 5 * literal.variable + (literal.negated ? 1 : 0); }
    [[nodiscard]] auto triangle_vertex(int variable, int t) const -> Vertex { return 5 * variable + 1 + t; }
    [[nodiscard]] auto gadget_vertex(int clause, int t) const -> Vertex { return 5 * variable_count + 12 * clause + t - 1; }
};

/// Per variable: x_i, not x_i, x_i^1, x_i^2, x_i^3 with the triangle and the
/// three edges at x_i^1 and x_i; per clause: a copy of `gadget`; then one
/// connector per clause slot from the literal to s^t_j.
auto build_reduction(const Formula &formula, const GadgetEdges &gadget = default_clause_gadget()) -> ReductionGraph;

/// Witness with max indegree 2 for a satisfying assignment. Throws
/// ReductionError when some clause gadget has no extension.
auto assignment_to_orientation(const Formula &formula, const Assignment &assignment,
                               const GadgetEdges &gadget = default_clause_gadget()) -> Orientation;

/// Reads x_i true iff its literal vertex has indegree 1.
auto orientation_to_assignment(const Formula &formula, const Orientation &orientation,
                               const GadgetEdges &gadget = default_clause_gadget()) -> Assignment;

} // namespace orient
