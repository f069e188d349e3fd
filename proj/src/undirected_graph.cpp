#include "cbn/undirected_graph.hpp"

#include <algorithm>
#include <sstream>

#include "cbn/errors.hpp"

namespace cbn {

UndirectedGraph::UndirectedGraph(std::size_t num_vertices,
                                 std::vector<std::pair<Vertex, Vertex>> edges)
    : edges_(std::move(edges)), adjacency_(num_vertices) {
    for (auto& [u, v] : edges_) {
        if (u >= num_vertices || v >= num_vertices) {
            throw MalformedGraph("edge (" + vertex_name(u) + ", " + vertex_name(v) +
                                 ") references a vertex outside 1.." + std::to_string(num_vertices));
        }
        if (u == v) throw MalformedGraph("self-edge on " + vertex_name(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw MalformedGraph("duplicate edge (" + vertex_name(dup->first) + ", " +
                             vertex_name(dup->second) + ")");
    }
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

UndirectedGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t nv = 0, ne = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#' || first == "c") continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (!have_header) {
            long long v = -1, e = -1;
            if (first != "p" || !(ls >> v >> e) || v < 0 || e < 0) {
                throw MalformedGraph(where + "expected header 'p <|V|> <|E|>'");
            }
            nv = static_cast<std::size_t>(v);
            ne = static_cast<std::size_t>(e);
            have_header = true;
            continue;
        }
        std::istringstream es(line);
        long long u = 0, v = 0;
        std::string rest;
        if (!(es >> u >> v) || (es >> rest && rest[0] != '#')) {
            throw MalformedGraph(where + "expected edge 'u v'");
        }
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > nv || static_cast<std::size_t>(v) > nv) {
            throw MalformedGraph(where + "vertex out of range 1.." + std::to_string(nv));
        }
        edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    }
    if (!have_header) throw MalformedGraph("missing header 'p <|V|> <|E|>'");
    if (edges.size() != ne) {
        throw MalformedGraph("header declares " + std::to_string(ne) + " edges, found " +
                             std::to_string(edges.size()));
    }
    return UndirectedGraph(nv, std::move(edges));
}

std::string serialize_edge_list(const UndirectedGraph& g) {
    std::ostringstream os;
    os << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

std::string vertex_name(Vertex v) { return "v" + std::to_string(std::size_t{v} + 1); }

bool is_dominating_set(const UndirectedGraph& g, std::span<const Vertex> set) {
    std::vector<std::uint8_t> dominated(g.num_vertices(), 0);
    for (Vertex d : set) {
        if (d >= g.num_vertices()) return false;
        dominated[d] = 1;
        for (Vertex w : g.neighbors(d)) dominated[w] = 1;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](auto b) { return b != 0; });
}

} // namespace cbn
