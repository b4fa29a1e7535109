#include "covers/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace covers {

Graph::Graph(int n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        }
        if (u == v) {
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        }
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
            throw std::invalid_argument("duplicate edge in edge list");
        }
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    }
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) {
        return false;
    }
    std::string rest;
    return !(ss >> rest);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = 0, m = 0;
    bool have_header = false;
    std::vector<std::pair<VertexId, VertexId>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        if (blank(line)) {
            continue;
        }
        long long a = 0, b = 0;
        if (!parse_two_ints(line, a, b)) {
            throw ParseError(lineno, have_header ? "malformed edge line: \"" + line + "\""
                                                 : "malformed header: \"" + line + "\"");
        }
        if (!have_header) {
            if (a < 0 || b < 0) {
                throw ParseError(lineno, "negative count in header");
            }
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError(lineno, "more than " + std::to_string(m) + " edges listed");
        }
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw ParseError(lineno, "vertex index out of range [0," + std::to_string(n) +
                                     "): " + std::to_string(a) + " " + std::to_string(b));
        }
        if (a == b) {
            throw ParseError(lineno, "loop edge at vertex " + std::to_string(a));
        }
        if (a > b) {
            std::swap(a, b);
        }
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (!have_header) {
        throw ParseError(lineno + 1, "missing header line \"n m\"");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(edges.size()));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            throw ParseError(lineno + 1, "duplicate edge " + std::to_string(edges[i].first) +
                                         " " + std::to_string(edges[i].second));
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph gen_path(int n) {
    if (n < 1) {
        throw std::invalid_argument("path needs at least 1 vertex");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph gen_complete(int n) {
    if (n < 1) {
        throw std::invalid_argument("complete graph needs at least 1 vertex");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_star(int leaves) {
    if (leaves < 0) {
        throw std::invalid_argument("leaf count must be nonnegative");
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, i);
    }
    return Graph::from_edges(leaves + 1, edges);
}

Graph gen_petersen() {
    // Kneser graph K(5,2): vertices = 2-subsets of {0..4}, adjacent iff disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) {
            subsets.emplace_back(a, b);
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) {
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        }
    }
    return Graph::from_edges(static_cast<int>(subsets.size()), edges);
}

std::pair<Graph, int> disjoint_union(const Graph& g, const Graph& h) {
    const int offset = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> edges = g.edges();
    for (const auto& [u, v] : h.edges()) {
        edges.emplace_back(u + offset, v + offset);
    }
    return {Graph::from_edges(offset + h.vertex_count(), edges), offset};
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        std::size_t k = 0;
        for (VertexId v = u + 1; v < n; ++v) {
            while (k < nbrs.size() && nbrs[k] < v) {
                ++k;
            }
            if (k == nbrs.size() || nbrs[k] != v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::vector<int> bfs_levels(const Graph& g, VertexId x) {
    g.neighbors(x); // validates x
    std::vector<int> level(g.vertex_count(), kUnreachable);
    std::deque<VertexId> queue{x};
    level[x] = 0;
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (level[w] == kUnreachable) {
                level[w] = level[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return level;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) {
        return true;
    }
    const auto level = bfs_levels(g, 0);
    return std::find(level.begin(), level.end(), kUnreachable) == level.end();
}

int eccentricity(const Graph& g, VertexId x) {
    const auto level = bfs_levels(g, x);
    int ecc = 0;
    for (int d : level) {
        if (d == kUnreachable) {
            throw std::invalid_argument("eccentricity requires a connected graph");
        }
        ecc = std::max(ecc, d);
    }
    return ecc;
}

} // namespace covers
