// Command-line front end: exact solving, constructions, the 3-SAT reduction,
// witness verification and DOT export.
//
// Exit codes: 0 success / yes, 1 certified no, 2 input error, 3 resource cap.

#include <orient/bounds.hpp>
#include <orient/constructions.hpp>
#include <orient/exact.hpp>
#include <orient/io.hpp>
#include <orient/reduction.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

using namespace orient;

namespace {

enum Exit : int { ok = 0, certified_no = 1, input_error = 2, cap_exceeded = 3 };

struct RunReport {
    std::string command;
    int n = 0;
    int m = 0;
    std::optional<int> regular;
    bool bipartite = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void describe(const Graph &graph)
    {
        n = graph.vertex_count();
        m = graph.edge_count();
        regular = regularity(graph);
        bipartite = is_bipartite(graph).has_value();
    }

    // commentary goes to stderr so stdout stays machine-readable
    void summary() const
    {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cerr << command << ": n=" << n << " m=" << m << " regular="
                  << (regular ? std::to_string(*regular) : std::string{"no"}) << " bipartite=" << (bipartite ? "yes" : "no")
                  << " time_ms=" << ms << '\n';
    }
};

auto load_graph(const std::string &path) -> Graph
{
    return parse_edge_list(read_file(path));
}

auto witness_path(const std::string &output, const std::string &input) -> std::string
{
    return output.empty() ? input + ".orient" : output;
}

auto cmd_solve(const std::string &path, int cap, bool parallel, const std::string &output) -> int
{
    RunReport report{"solve"};
    Graph graph = load_graph(path);
    report.describe(graph);
    auto result = proper_orientation_number(graph, SolveOptions{cap, default_chromatic_cap, parallel});
    auto out = witness_path(output, path);
    write_file(out, format_orientation(result.witness));
    std::cout << result.value << '\n' << "witness " << out << '\n';
    std::cerr << "bounds [" << result.bounds.lower << ", " << result.bounds.upper << "] lower by "
              << to_string(result.bounds.lower_reason) << ", nodes " << result.nodes_explored << '\n';
    report.summary();
    return ok;
}

auto cmd_decide(const std::string &path, int k, bool parallel, const std::string &output) -> int
{
    RunReport report{"decide"};
    Graph graph = load_graph(path);
    report.describe(graph);
    auto decision = search(graph, k, SearchOptions{parallel});
    std::cerr << "nodes " << decision.nodes_explored << '\n';
    report.summary();
    if (! decision.witness) {
        std::cout << "no\n";
        return certified_no;
    }
    auto out = witness_path(output, path);
    write_file(out, format_orientation(*decision.witness));
    std::cout << "yes\n" << "witness " << out << '\n';
    return ok;
}

auto cmd_construct(const std::string &path, const std::string &mode, const std::string &output) -> int
{
    RunReport report{"construct " + mode};
    Graph graph = load_graph(path);
    report.describe(graph);
    auto out = witness_path(output, path);

    if (mode == "bipartite-odd-regular") {
        auto orientation = orient_bipartite_odd_regular(graph);
        write_file(out, format_orientation(orientation));
        std::cout << "max_indegree " << max_indegree(orientation) << '\n';
    }
    else if (mode == "line-graph") {
        auto classified = edge_colouring_exact(graph);
        std::cerr << "edge colouring: " << classified.colouring.colour_count << " colours, "
                  << to_string(classified.edge_class) << '\n';
        if (classified.edge_class != EdgeClass::Class1)
            throw InvalidInput("line-graph construction needs a Class 1 graph; this one is Class 2");
        auto result = orient_line_graph(graph, classified.colouring);
        auto line_path = out + ".line";
        write_file(line_path, format_edge_list(result.line.graph));
        write_file(out + ".colouring", format_edge_colouring(classified.colouring));
        write_file(out, format_orientation(result.orientation));
        std::cout << "max_indegree " << max_indegree(result.orientation) << '\n' << "line_graph " << line_path << '\n';
    }
    else if (mode == "greedy") {
        auto greedy = greedy_orientation(graph);
        write_file(out, format_orientation(greedy.orientation));
        std::cout << "max_indegree " << greedy.achieved << '\n';
        if (greedy.ratio)
            std::cout << "ratio " << *greedy.ratio << " theta " << *greedy.theta << '\n';
    }
    else if (mode == "cubic") {
        auto result = cubic_proper_orientation_number(graph);
        write_file(out, format_orientation(result.witness));
        std::cout << "value " << result.value << '\n' << "max_indegree " << max_indegree(result.witness) << '\n';
    }
    else
        throw InvalidInput("unknown construction mode '" + mode + "'");

    std::cout << "witness " << out << '\n';
    report.summary();
    return ok;
}

auto cmd_reduce(const std::string &path, bool solve, bool parallel, const std::string &output) -> int
{
    RunReport report{"reduce"};
    Formula formula = parse_cnf(read_file(path));
    auto incidence = incidence_graph(formula);
    if (! incidence.euler_bound_holds)
        std::cerr << "warning: incidence graph fails m <= 3n - 6, the formula is not planar\n";

    auto reduction = build_reduction(formula);
    report.describe(reduction.graph);
    auto base = output.empty() ? path + ".reduced" : output;
    write_file(base, format_edge_list(reduction.graph));
    write_file(base + ".roles.json", format_role_sidecar(reduction.roles));
    std::cout << "graph " << base << '\n' << "roles " << base << ".roles.json\n";

    if (solve) {
        auto decision = search(reduction.graph, 2, SearchOptions{parallel});
        std::cerr << "nodes " << decision.nodes_explored << '\n';
        if (! decision.witness) {
            std::cout << "UNSAT\n";
            report.summary();
            return certified_no;
        }
        auto assignment = orientation_to_assignment(formula, *decision.witness);
        write_file(base + ".orient", format_orientation(*decision.witness));
        std::cout << "SAT\nassignment";
        for (int i = 0; i < formula.variable_count; ++i)
            std::cout << ' ' << (assignment[i] ? i + 1 : -(i + 1));
        std::cout << "\nwitness " << base << ".orient\n";
    }
    report.summary();
    return ok;
}

auto cmd_verify(const std::string &graph_path, const std::string &orientation_path, int k) -> int
{
    RunReport report{"verify"};
    Graph graph = load_graph(graph_path);
    report.describe(graph);
    auto orientation = parse_orientation(read_file(orientation_path), graph);
    report.summary();
    if (auto bad = first_violation(graph, orientation)) {
        const auto &[u, v] = graph.edge(*bad);
        std::cout << "violation edge (" << u << "," << v << "): " << orientation.indegree(u) << " = "
                  << orientation.indegree(v) << '\n';
        return certified_no;
    }
    if (max_indegree(orientation) > k) {
        std::cout << "max_indegree " << max_indegree(orientation) << " exceeds " << k << '\n';
        return certified_no;
    }
    std::cout << "ok max_indegree " << max_indegree(orientation) << '\n';
    return ok;
}

auto cmd_export_dot(const std::string &graph_path, const std::string &orientation_path, const std::string &roles_path)
    -> int
{
    Graph graph = load_graph(graph_path);
    std::optional<Orientation> orientation;
    std::optional<std::vector<std::string>> roles;
    if (! orientation_path.empty())
        orientation = parse_orientation(read_file(orientation_path), graph);
    if (! roles_path.empty())
        roles = parse_role_sidecar(read_file(roles_path), graph.vertex_count());
    std::cout << to_dot(graph, DotOptions{orientation ? &*orientation : nullptr, roles ? &*roles : nullptr});
    return ok;
}

} // namespace

auto main(int argc, char **argv) -> int
{
    CLI::App app{"Proper orientations: exact solving, constructions and the 3-SAT reduction"};
    app.require_subcommand(1);

    std::string graph_path, orientation_path, roles_path, output, mode;
    int cap = default_solve_cap, k = 0;
    bool parallel = false, solve = false;

    auto *solve_cmd = app.add_subcommand("solve", "exact proper orientation number with a witness");
    solve_cmd->add_option("graph", graph_path, "edge-list file")->required();
    solve_cmd->add_option("--cap", cap, "largest edge count to solve exactly");
    solve_cmd->add_flag("--parallel", parallel, "split the search across threads");
    solve_cmd->add_option("--output", output, "witness path (default GRAPH.orient)");

    auto *decide_cmd = app.add_subcommand("decide", "is there a proper orientation with max indegree <= k");
    decide_cmd->add_option("graph", graph_path, "edge-list file")->required();
    decide_cmd->add_option("k", k, "indegree bound")->required()->check(CLI::NonNegativeNumber);
    decide_cmd->add_flag("--parallel", parallel, "split the search across threads");
    decide_cmd->add_option("--output", output, "witness path (default GRAPH.orient)");

    auto *construct_cmd = app.add_subcommand("construct", "polynomial constructions");
    construct_cmd->add_option("graph", graph_path, "edge-list file")->required();
    construct_cmd->add_option("mode", mode, "construction")
        ->required()
        ->check(CLI::IsMember({"bipartite-odd-regular", "line-graph", "greedy", "cubic"}));
    construct_cmd->add_option("--output", output, "witness path (default GRAPH.orient)");

    auto *reduce_cmd = app.add_subcommand("reduce", "build the reduction graph of a 3-CNF formula");
    reduce_cmd->add_option("cnf", graph_path, "DIMACS CNF file")->required();
    reduce_cmd->add_flag("--solve", solve, "decide max indegree 2 and decode an assignment");
    reduce_cmd->add_flag("--parallel", parallel, "split the search across threads");
    reduce_cmd->add_option("--output", output, "edge-list path (default CNF.reduced)");

    auto *verify_cmd = app.add_subcommand("verify", "check a witness orientation");
    verify_cmd->add_option("graph", graph_path, "edge-list file")->required();
    verify_cmd->add_option("orientation", orientation_path, "orientation file")->required();
    verify_cmd->add_option("k", k, "indegree bound")->required()->check(CLI::NonNegativeNumber);

    auto *dot_cmd = app.add_subcommand("export-dot", "Graphviz output on stdout");
    dot_cmd->add_option("graph", graph_path, "edge-list file")->required();
    dot_cmd->add_option("orientation", orientation_path, "orientation file");
    dot_cmd->add_option("--roles", roles_path, "JSON role sidecar");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(graph_path, cap, parallel, output);
        if (*decide_cmd)
            return cmd_decide(graph_path, k, parallel, output);
        if (*construct_cmd)
            return cmd_construct(graph_path, mode, output);
        if (*reduce_cmd)
            return cmd_reduce(graph_path, solve, parallel, output);
        if (*verify_cmd)
            return cmd_verify(graph_path, orientation_path, k);
        if (*dot_cmd)
            return cmd_export_dot(graph_path, orientation_path, roles_path);
    }
    catch (const CapExceeded &e) {
        std::cerr << "error: " << e.what() << '\n';
        return cap_exceeded;
    }
    catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}
