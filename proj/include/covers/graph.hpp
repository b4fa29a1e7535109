#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace covers {

using VertexId = int;

// Dense map from the vertices of one graph into another (index = source vertex).
using VertexMap = std::vector<VertexId>;

// Simple undirected graph: no loops, no multi-edges, vertices 0..n-1.
// Adjacency lists are kept sorted ascending so every iteration order is
// deterministic and outputs are reproducible across runs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Builds a graph from an edge list; validates range, loops and duplicates.
    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<VertexId>> adj_;
    int edge_count_ = 0;

    void check_vertex(VertexId v) const;
};

// Raised by parse_graph; the message already includes the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// Text format: line 1 = "n m"; then m lines "u v"; '#' starts a comment line.
// Serialization writes edges with u < v in lexicographic order plus a final
// newline; parsing accepts either endpoint order and a missing final newline.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph gen_path(int n);      // P_n, n >= 1
Graph gen_cycle(int n);     // C_n, n >= 3
Graph gen_complete(int n);  // K_n, n >= 1
Graph gen_star(int leaves); // K_{1,leaves}, center = vertex 0
Graph gen_petersen();

// Returns the union graph and the offset at which H's vertices were placed.
std::pair<Graph, int> disjoint_union(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

inline constexpr int kUnreachable = -1;

// BFS distances from x; unreachable vertices get kUnreachable.
std::vector<int> bfs_levels(const Graph& g, VertexId x);

bool is_connected(const Graph& g);

// Maximum BFS distance from x; throws std::invalid_argument if g is disconnected.
int eccentricity(const Graph& g, VertexId x);

} // namespace covers
