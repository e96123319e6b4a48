#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wod/vertex_set.hpp"

namespace wod {

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Neighborhoods are stored as one VertexSet row per vertex so that parity
/// and intersection queries run word-parallel.
class Graph {
  public:
    /// Builds a graph from an edge list. Duplicate edges collapse.
    /// Throws ZeroOrder / EndpointOutOfRange / SelfLoop.
    static Graph from_edge_list(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return order_; }
    std::size_t edge_count() const { return edge_count_; }

    const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    int degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

  private:
    explicit Graph(int order) : order_(order), rows_(static_cast<std::size_t>(order), VertexSet(order)) {}

    int order_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

/// `copies` vertex-disjoint copies of g; copy c occupies indices
/// [c*n, (c+1)*n). Throws ZeroCopies when copies < 1.
Graph disjoint_copies(const Graph& g, int copies);

int max_degree(const Graph& g);
VertexSet isolated_vertices(const Graph& g);
VertexSet universal_vertices(const Graph& g);

/// A proper 2-coloring if one exists, found by breadth-first layering,
/// component by component; each component's lowest-index vertex lands in the
/// first side. Absent exactly when the graph has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for dropped vertices
    std::vector<int> new_to_old;
};

/// Subgraph induced by `keep` (must be non-empty), with index maps.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Drops isolated vertices. Throws AllIsolated when nothing would remain.
InducedSubgraph strip_isolated(const Graph& g);

/// Text format: a "n m" header line followed by m "u v" edge lines with
/// 0-based endpoints; lines whose first non-blank character is '#' are
/// comments. Serialization emits edges with u < v in lexicographic order.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace wod
