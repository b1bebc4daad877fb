#include <orient/reduction.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace orient {

// CNF ------------------------------------------------------------------------

auto parse_cnf(std::string_view text) -> Formula
{
    Formula formula;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<Literal> pending;

    std::istringstream in{std::string{text}};
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto where = [&] { return "line " + std::to_string(line_number) + ": "; };
        std::istringstream words{line};
        std::string word;
        if (! (words >> word) || word.starts_with('c'))
            continue;
        if (word == "%")
            break;
        if (word == "p") {
            std::string kind;
            if (have_header || ! (words >> kind >> formula.variable_count >> declared_clauses) || kind != "cnf"
                || formula.variable_count < 0 || declared_clauses < 0)
                throw ParseError(where() + "malformed problem line");
            have_header = true;
            continue;
        }
        if (! have_header)
            throw ParseError(where() + "clause before the 'p cnf' header");

        do {
            int value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size())
                throw ParseError(where() + "bad literal '" + word + "'");
            if (value == 0) {
                if (pending.size() != 3)
                    throw ParseError(where() + "clause " + std::to_string(formula.clauses.size() + 1) + " has "
                                     + std::to_string(pending.size()) + " literals, expected 3");
                formula.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            int variable = std::abs(value);
            if (variable > formula.variable_count)
                throw ParseError(where() + "variable " + std::to_string(variable) + " out of range");
            pending.push_back({variable - 1, value < 0});
        } while (words >> word);
    }

    if (! have_header)
        throw ParseError("missing 'p cnf' header");
    if (! pending.empty())
        throw ParseError("unterminated final clause");
    if (static_cast<int>(formula.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found "
                         + std::to_string(formula.clauses.size()));
    return formula;
}

auto to_dimacs(const Formula &formula) -> std::string
{
    std::ostringstream out;
    out << "p cnf " << formula.variable_count << ' ' << formula.clauses.size() << '\n';
    for (const auto &clause : formula.clauses) {
        for (const auto &literal : clause)
            out << (literal.negated ? -1 : 1) * (literal.variable + 1) << ' ';
        out << "0\n";
    }
    return out.str();
}

auto satisfies(const Formula &formula, const Assignment &assignment) -> bool
{
    return std::ranges::all_of(formula.clauses, [&](const Clause &clause) {
        return std::ranges::any_of(clause, [&](const Literal &l) { return assignment[l.variable] != l.negated; });
    });
}

auto incidence_graph(const Formula &formula) -> IncidenceGraph
{
    const int k = static_cast<int>(formula.clauses.size());
    auto literal_vertex = [&](const Literal &l) { return k + 2 * l.variable + (l.negated ? 1 : 0); };

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < formula.variable_count; ++i)
        pairs.emplace_back(k + 2 * i, k + 2 * i + 1);
    for (int j = 0; j < k; ++j) {
        std::set<int> seen;
        for (const auto &literal : formula.clauses[j])
            if (seen.insert(literal_vertex(literal)).second)
                pairs.emplace_back(j, literal_vertex(literal));
    }

    IncidenceGraph out{Graph{k + 2 * formula.variable_count, pairs}, true};
    const int n = out.graph.vertex_count();
    if (n >= 3)
        out.euler_bound_holds = out.graph.edge_count() <= 3 * n - 6;
    return out;
}

// Clause gadget ---------------------------------------------------------------

namespace {

// s^t as stored
constexpr auto s(int t) -> int { return t - 1; }

auto rotate(int vertex) -> int
{
    // s^1..s^3 and s^4..s^6 cycle; s^7 -> s^9 -> s^11 and s^8 -> s^10 -> s^12
    static constexpr std::array<int, 12> image{s(2), s(3), s(1), s(5), s(6), s(4),
                                               s(9), s(10), s(11), s(12), s(7), s(8)};
    return image[vertex];
}

auto normalised(GadgetEdges edges) -> GadgetEdges
{
    for (auto &[a, b] : edges)
        if (a > b)
            std::swap(a, b);
    std::ranges::sort(edges);
    return edges;
}

auto is_rotation_invariant(const GadgetEdges &edges) -> bool
{
    GadgetEdges image;
    for (const auto &[a, b] : edges)
        image.emplace_back(rotate(a), rotate(b));
    return normalised(image) == normalised(edges);
}

auto validate_gadget(const GadgetEdges &edges) -> Graph
{
    for (const auto &[a, b] : edges)
        if (a < 0 || b < 0 || a >= gadget_vertex_count || b >= gadget_vertex_count)
            throw InvalidInput("gadget edge (" + std::to_string(a) + "," + std::to_string(b)
                               + ") is outside s^1..s^12");
    Graph graph{gadget_vertex_count, edges};
    for (int t = 1; t <= 3; ++t)
        if (graph.degree(s(t)) == 0)
            throw InvalidInput("gadget boundary vertex s^" + std::to_string(t) + " has no edges");
    return graph;
}

// Depth-first completion of the gadget's internal edges under a boundary pattern.
struct GadgetSearch {
    const Graph &graph;
    std::vector<int> target; // exact final indegree for boundary vertices, -1 otherwise
    std::vector<int> indegree;
    std::vector<int> remaining;
    std::vector<bool> reversed;

    auto cap(int v) const -> int { return target[v] >= 0 ? target[v] : 2; }

    auto settled_ok(int v) const -> bool
    {
        if (target[v] >= 0 && indegree[v] != target[v])
            return false;
        for (const auto &[w, e] : graph.incident(v))
            if (remaining[w] == 0 && indegree[w] == indegree[v])
                return false;
        return true;
    }

    auto run(EdgeIndex e) -> bool
    {
        if (e == graph.edge_count())
            return true;
        const auto &[a, b] = graph.edge(e);
        for (int head : {b, a}) {
            reversed[e] = head == a;
            ++indegree[head];
            --remaining[a];
            --remaining[b];
            bool ok = indegree[head] <= cap(head) && (remaining[a] > 0 || settled_ok(a))
                && (remaining[b] > 0 || settled_ok(b)) && run(e + 1);
            if (ok)
                return true;
            --indegree[head];
            ++remaining[a];
            ++remaining[b];
        }
        return false;
    }
};

auto all_patterns() -> std::vector<BoundaryPattern>
{
    std::vector<BoundaryPattern> out;
    for (int bits = 0; bits < 8; ++bits)
        out.push_back({1 + (bits >> 2 & 1), 1 + (bits >> 1 & 1), 1 + (bits & 1)});
    return out;
}

auto connected(const Graph &graph) -> bool
{
    return connected_components(graph).size() == 1;
}

} // namespace

auto required_gadget_edges() -> GadgetEdges
{
    return {{s(1), s(4)}, {s(2), s(5)}, {s(3), s(6)}, {s(7), s(4)},
            {s(8), s(5)}, {s(12), s(4)}, {s(7), s(8)}, {s(11), s(12)}};
}

auto default_clause_gadget() -> GadgetEdges
{
    return {{s(1), s(4)}, {s(2), s(5)}, {s(3), s(6)},  {s(7), s(4)},  {s(8), s(5)},  {s(12), s(4)},
            {s(7), s(8)}, {s(11), s(12)}, {s(9), s(5)}, {s(10), s(6)}, {s(11), s(6)}, {s(9), s(10)}};
}

auto gadget_extension(const GadgetEdges &edges, const BoundaryPattern &pattern) -> std::optional<std::vector<bool>>
{
    Graph graph = validate_gadget(edges);
    GadgetSearch search{graph, std::vector<int>(gadget_vertex_count, -1), std::vector<int>(gadget_vertex_count, 0),
                        std::vector<int>(gadget_vertex_count, 0), std::vector<bool>(graph.edge_count(), false)};
    for (int v = 0; v < gadget_vertex_count; ++v)
        search.remaining[v] = graph.degree(v);
    for (int t = 0; t < 3; ++t) {
        if (pattern[t] < 1 || pattern[t] > 2)
            throw InvalidInput("boundary pattern entries must be 1 or 2");
        search.target[t] = pattern[t];
        search.indegree[t] = 1; // the connector points into s^t
    }
    if (! search.run(0))
        return std::nullopt;
    return search.reversed;
}

auto gadget_contract_check(const GadgetEdges &edges) -> GadgetReport
{
    validate_gadget(edges);
    GadgetReport report;
    report.passed = true;
    for (const auto &pattern : all_patterns()) {
        bool should = pattern != BoundaryPattern{1, 1, 1};
        PatternOutcome outcome{pattern, should, gadget_extension(edges, pattern)};
        report.passed = report.passed && outcome.ok();
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

auto search_gadget_completions(int max_extra) -> std::vector<GadgetCandidate>
{
    const auto required = normalised(required_gadget_edges());
    std::vector<std::pair<int, int>> pool;
    for (int a = s(4); a < gadget_vertex_count; ++a)
        for (int b = a + 1; b < gadget_vertex_count; ++b)
            if (! std::ranges::binary_search(required, std::pair{a, b}))
                pool.emplace_back(a, b);

    std::vector<int> degree(gadget_vertex_count, 0);
    for (const auto &[a, b] : required) {
        ++degree[a];
        ++degree[b];
    }

    const int edge_limit = 16;
    std::vector<GadgetCandidate> found;
    GadgetEdges current = required;
    std::function<void(std::size_t, int)> extend = [&](std::size_t from, int budget) {
        Graph graph{gadget_vertex_count, current};
        if (connected(graph) && gadget_contract_check(current).passed)
            found.push_back({normalised(current), is_rotation_invariant(current)});
        if (budget == 0 || static_cast<int>(current.size()) == edge_limit)
            return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            auto [a, b] = pool[i];
            if (degree[a] == 3 || degree[b] == 3)
                continue;
            ++degree[a];
            ++degree[b];
            current.push_back(pool[i]);
            extend(i + 1, budget - 1);
            current.pop_back();
            --degree[a];
            --degree[b];
        }
    };
    extend(0, max_extra);

    std::ranges::stable_sort(found, [](const GadgetCandidate &x, const GadgetCandidate &y) {
        if (x.symmetric != y.symmetric)
            return x.symmetric;
        if (x.edges.size() != y.edges.size())
            return x.edges.size() < y.edges.size();
        return x.edges < y.edges;
    });
    return found;
}

// Reduction graph -------------------------------------------------------------

auto Role::to_string() const -> std::string
{
    switch (kind) {
    case RoleKind::PositiveLiteral: return "PositiveLiteral(" + std::to_string(index + 1) + ")";
    case RoleKind::NegativeLiteral: return "NegativeLiteral(" + std::to_string(index + 1) + ")";
    case RoleKind::TriangleVertex:
        return "TriangleVertex(" + std::to_string(index + 1) + "," + std::to_string(position) + ")";
    case RoleKind::GadgetVertex:
        return "GadgetVertex(" + std::to_string(index + 1) + "," + std::to_string(position) + ")";
    }
    return "?";
}

auto build_reduction(const Formula &formula, const GadgetEdges &gadget) -> ReductionGraph
{
    validate_gadget(gadget);
    ReductionGraph out;
    out.variable_count = formula.variable_count;
    out.clause_count = static_cast<int>(formula.clauses.size());

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < formula.variable_count; ++i) {
        Vertex x = out.literal_vertex({i, false});
        Vertex not_x = out.literal_vertex({i, true});
        Vertex t1 = out.triangle_vertex(i, 1), t2 = out.triangle_vertex(i, 2), t3 = out.triangle_vertex(i, 3);
        pairs.insert(pairs.end(), {{t1, t2}, {t2, t3}, {t1, t3}, {x, t1}, {not_x, t1}, {x, not_x}});
        out.roles.push_back({RoleKind::PositiveLiteral, i});
        out.roles.push_back({RoleKind::NegativeLiteral, i});
        for (int t = 1; t <= 3; ++t)
            out.roles.push_back({RoleKind::TriangleVertex, i, t});
    }
    for (int j = 0; j < out.clause_count; ++j) {
        for (int t = 1; t <= gadget_vertex_count; ++t)
            out.roles.push_back({RoleKind::GadgetVertex, j, t});
        for (const auto &[a, b] : gadget)
            pairs.emplace_back(out.gadget_vertex(j, a + 1), out.gadget_vertex(j, b + 1));
        for (int t = 1; t <= 3; ++t) {
            const auto &literal = formula.clauses[j][t - 1];
            if (literal.variable < 0 || literal.variable >= formula.variable_count)
                throw InvalidInput("clause " + std::to_string(j + 1) + " uses an undeclared variable");
            std::pair connector{out.literal_vertex(literal), out.gadget_vertex(j, t)};
            pairs.push_back(connector);
            out.connector_edges.push_back(connector);
        }
    }
    out.graph = Graph{5 * out.variable_count + gadget_vertex_count * out.clause_count, pairs};
    return out;
}

auto assignment_to_orientation(const Formula &formula, const Assignment &assignment, const GadgetEdges &gadget)
    -> Orientation
{
    if (static_cast<int>(assignment.size()) != formula.variable_count)
        throw InvalidInput("assignment size does not match the formula");
    auto reduction = build_reduction(formula, gadget);
    const Graph &graph = reduction.graph;
    std::vector<Vertex> head(graph.edge_count(), -1);
    auto direct = [&](Vertex from, Vertex to) { head[*graph.find_edge(from, to)] = to; };

    for (int i = 0; i < formula.variable_count; ++i) {
        Vertex x = reduction.literal_vertex({i, false});
        Vertex not_x = reduction.literal_vertex({i, true});
        Vertex t1 = reduction.triangle_vertex(i, 1);
        for (Vertex w : {reduction.triangle_vertex(i, 2), reduction.triangle_vertex(i, 3), x, not_x})
            direct(t1, w);
        direct(reduction.triangle_vertex(i, 2), reduction.triangle_vertex(i, 3));
        if (assignment[i])
            direct(x, not_x);
        else
            direct(not_x, x);
    }

    for (int j = 0; j < reduction.clause_count; ++j) {
        BoundaryPattern pattern{};
        for (int t = 1; t <= 3; ++t) {
            const auto &literal = formula.clauses[j][t - 1];
            direct(reduction.literal_vertex(literal), reduction.gadget_vertex(j, t));
            // true literal has indegree 1, so s^t needs 2
            bool literal_true = assignment[literal.variable] != literal.negated;
            pattern[t - 1] = literal_true ? 2 : 1;
        }
        auto extension = gadget_extension(gadget, pattern);
        if (! extension)
            throw ReductionError("clause " + std::to_string(j + 1) + " gadget has no extension: assignment does not satisfy it");
        for (std::size_t g = 0; g < gadget.size(); ++g) {
            auto [a, b] = gadget[g];
            Vertex u = reduction.gadget_vertex(j, a + 1), v = reduction.gadget_vertex(j, b + 1);
            if ((*extension)[g])
                direct(v, u);
            else
                direct(u, v);
        }
    }

    auto orientation = Orientation::from_heads(graph, [&](EdgeIndex e) { return head[e]; });
    if (! is_proper_orientation(graph, orientation) || max_indegree(orientation) > 2)
        throw std::logic_error("assembled reduction witness is not a proper orientation with max indegree 2");
    return orientation;
}

auto orientation_to_assignment(const Formula &formula, const Orientation &orientation, const GadgetEdges &gadget)
    -> Assignment
{
    auto reduction = build_reduction(formula, gadget);
    if (orientation.edge_count() != reduction.graph.edge_count())
        throw InvalidInput("orientation does not belong to this reduction graph");
    if (auto bad = first_violation(reduction.graph, orientation))
        throw ReductionError("orientation is not proper at edge " + std::to_string(*bad));
    if (max_indegree(orientation) > 2)
        throw ReductionError("orientation has max indegree " + std::to_string(max_indegree(orientation)) + " > 2");

    Assignment assignment(formula.variable_count);
    for (int i = 0; i < formula.variable_count; ++i) {
        int d = orientation.indegree(reduction.literal_vertex({i, false}));
        if (d != 1 && d != 2)
            throw ReductionError("literal x" + std::to_string(i + 1) + " has indegree " + std::to_string(d));
        assignment[i] = d == 1;
    }
    if (! satisfies(formula, assignment))
        throw std::logic_error("decoded assignment does not satisfy the formula");
    return assignment;
}

} // namespace orient
