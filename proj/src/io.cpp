#include <orient/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace orient {

namespace {

// Whitespace-separated integers, line by line, skipping blank lines.
struct IntReader {
    std::istringstream in;
    int line_number = 0;

    explicit IntReader(std::string_view text) : in(std::string{text}) {}

    auto next_line(std::vector<long long> &values) -> bool
    {
        std::string line;
        while (std::getline(in, line)) {
            ++line_number;
            values.clear();
            std::istringstream words{line};
            std::string word;
            while (words >> word) {
                std::size_t used = 0;
                long long value = 0;
                try {
                    value = std::stoll(word, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (used != word.size())
                    throw ParseError("line " + std::to_string(line_number) + ": not an integer '" + word + "'");
                values.push_back(value);
            }
            if (! values.empty())
                return true;
        }
        return false;
    }

    auto expect_pair(const char *what) -> std::pair<long long, long long>
    {
        std::vector<long long> values;
        if (! next_line(values))
            throw ParseError(std::string{"unexpected end of input, expected "} + what);
        if (values.size() != 2)
            throw ParseError("line " + std::to_string(line_number) + ": expected two integers for " + what);
        return {values[0], values[1]};
    }

    void expect_end()
    {
        std::vector<long long> values;
        if (next_line(values))
            throw ParseError("line " + std::to_string(line_number) + ": trailing data");
    }
};

} // namespace

auto parse_edge_list(std::string_view text) -> Graph
{
    IntReader reader{text};
    auto [n, m] = reader.expect_pair("header 'n m'");
    if (n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000)
        throw ParseError("header 'n m' out of range");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (long long i = 0; i < m; ++i) {
        auto [u, v] = reader.expect_pair("edge 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("line " + std::to_string(reader.line_number) + ": vertex out of range");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    reader.expect_end();
    try {
        return Graph{static_cast<int>(n), pairs};
    }
    catch (const InvalidInput &e) {
        throw ParseError(e.what());
    }
}

auto format_edge_list(const Graph &graph) -> std::string
{
    std::ostringstream out;
    out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (const auto &[u, v] : graph.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto parse_orientation(std::string_view text, const Graph &graph) -> Orientation
{
    IntReader reader{text};
    std::vector<bool> reversed;
    std::vector<long long> values;
    while (reader.next_line(values)) {
        if (values.size() != 2)
            throw ParseError("line " + std::to_string(reader.line_number) + ": expected 'tail head'");
        auto e = static_cast<EdgeIndex>(reversed.size());
        if (e >= graph.edge_count())
            throw InvalidInput("orientation has more lines than the graph has edges ("
                               + std::to_string(graph.edge_count()) + ")");
        const auto &edge = graph.edge(e);
        if (values[0] == edge.u && values[1] == edge.v)
            reversed.push_back(false);
        else if (values[0] == edge.v && values[1] == edge.u)
            reversed.push_back(true);
        else
            throw InvalidInput("line " + std::to_string(reader.line_number) + ": (" + std::to_string(values[0]) + ","
                               + std::to_string(values[1]) + ") is not edge " + std::to_string(e));
    }
    if (static_cast<int>(reversed.size()) != graph.edge_count())
        throw InvalidInput("orientation has " + std::to_string(reversed.size()) + " lines, graph has "
                           + std::to_string(graph.edge_count()) + " edges");
    return Orientation{graph, std::move(reversed)};
}

auto format_orientation(const Orientation &orientation) -> std::string
{
    std::ostringstream out;
    for (EdgeIndex e = 0; e < orientation.edge_count(); ++e)
        out << orientation.tail(e) << ' ' << orientation.head(e) << '\n';
    return out.str();
}

auto format_edge_colouring(const EdgeColouring &colouring) -> std::string
{
    std::ostringstream out;
    for (std::size_t e = 0; e < colouring.colours.size(); ++e)
        out << e << ' ' << colouring.colours[e] << '\n';
    return out.str();
}

auto format_role_sidecar(std::span<const Role> roles) -> std::string
{
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < roles.size(); ++v)
        doc[std::to_string(v)] = roles[v].to_string();
    return doc.dump(2) + "\n";
}

auto parse_role_sidecar(std::string_view text, int vertex_count) -> std::vector<std::string>
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string{"role sidecar: "} + e.what());
    }
    if (! doc.is_object())
        throw ParseError("role sidecar must be a JSON object");
    std::vector<std::string> roles(vertex_count);
    for (const auto &[key, value] : doc.items()) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(key, &used);
        }
        catch (const std::exception &) {
        }
        if (used != key.size() || v < 0 || v >= vertex_count || ! value.is_string())
            throw ParseError("role sidecar: bad entry '" + key + "'");
        roles[v] = value.get<std::string>();
    }
    return roles;
}

namespace {

auto shape_for(const std::string &role) -> std::string_view
{
    if (role.starts_with("PositiveLiteral") || role.starts_with("NegativeLiteral"))
        return "box";
    if (role.starts_with("TriangleVertex"))
        return "triangle";
    if (role.starts_with("GadgetVertex"))
        return "circle";
    return "ellipse";
}

} // namespace

auto to_dot(const Graph &graph, const DotOptions &options) -> std::string
{
    std::ostringstream out;
    const bool directed = options.orientation != nullptr;
    out << (directed ? "digraph" : "graph") << " G {\n";
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << v;
        if (options.roles && ! (*options.roles)[v].empty())
            out << "\\n" << (*options.roles)[v];
        if (directed)
            out << "\\nin=" << options.orientation->indegree(v);
        out << '"';
        if (options.roles)
            out << ", shape=" << shape_for((*options.roles)[v]);
        out << "];\n";
    }
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
        if (directed)
            out << "  " << options.orientation->tail(e) << " -> " << options.orientation->head(e) << ";\n";
        else
            out << "  " << graph.edge(e).u << " -- " << graph.edge(e).v << ";\n";
    }
    out << "}\n";
    return out.str();
}

auto read_file(const std::string &path) -> std::string
{
    std::ifstream in{path, std::ios::binary};
    if (! in)
        throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, std::string_view contents)
{
    std::ofstream out{path, std::ios::binary};
    if (! out)
        throw std::runtime_error("cannot write " + path);
    out << contents;
}

} // namespace orient
