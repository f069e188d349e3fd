#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbn {

using Vertex = std::uint32_t;

/// Simple undirected graph on vertices [0, n). Printed as v1..vn.
///
/// Edges are normalised to (u < v) and kept sorted; self-edges and duplicate
/// edges are rejected with MalformedGraph.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(std::size_t num_vertices, std::vector<std::pair<Vertex, Vertex>> edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const std::pair<Vertex, Vertex>> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    bool is_isolated(Vertex v) const { return adjacency_.at(v).empty(); }

private:
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Edge-list format: a header `p <|V|> <|E|>` followed by `u v` lines with
/// 1-based vertex numbers. Lines starting with `#` or `c` are comments.
UndirectedGraph parse_edge_list(std::string_view text);

std::string serialize_edge_list(const UndirectedGraph& g);

std::string vertex_name(Vertex v);

/// True iff every vertex outside `set` has a neighbour in `set`.
bool is_dominating_set(const UndirectedGraph& g, std::span<const Vertex> set);

} // namespace cbn
