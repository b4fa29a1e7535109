#include "covers/cover.hpp"

#include "covers/equivalence.hpp"
#include "covers/refinement.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace covers {

RootedTree RootedTree::from_parents(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    if (n == 0) {
        throw std::invalid_argument("tree needs at least one node");
    }
    if (parent[0] != -1) {
        throw std::invalid_argument("node 0 must be the root");
    }
    RootedTree t;
    t.parent = parent;
    t.children.assign(n, {});
    std::vector<int> depth(n, 0);
    for (int i = 1; i < n; ++i) {
        if (parent[i] < 0 || parent[i] >= i) {
            throw std::invalid_argument("parent of node " + std::to_string(i) +
                                        " must precede it");
        }
        t.children[parent[i]].push_back(i);
        depth[i] = depth[parent[i]] + 1;
        t.depth = std::max(t.depth, depth[i]);
    }
    return t;
}

bool is_covering_map(const Graph& h, const Graph& g, const VertexMap& alpha) {
    if (!is_connected(h)) {
        throw std::invalid_argument("covering-map check requires a connected source graph");
    }
    if (static_cast<int>(alpha.size()) != h.vertex_count()) {
        throw std::invalid_argument("vertex map must be total on the source graph");
    }
    for (VertexId image : alpha) {
        if (image < 0 || image >= g.vertex_count()) {
            throw std::invalid_argument("vertex map image out of range");
        }
    }

    std::vector<bool> hit(g.vertex_count(), false);
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        hit[alpha[v]] = true;
        // alpha must map N(v) bijectively onto N(alpha(v)); comparing the
        // sorted image list against the target adjacency checks both the
        // homomorphism property and local bijectivity at once.
        std::vector<VertexId> images;
        images.reserve(h.degree(v));
        for (VertexId w : h.neighbors(v)) {
            images.push_back(alpha[w]);
        }
        std::sort(images.begin(), images.end());
        if (images != g.neighbors(alpha[v])) {
            return false;
        }
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
}

TruncatedCover truncated_ucover(const Graph& g, VertexId x, int t, long long node_budget) {
    if (!is_connected(g)) {
        throw std::invalid_argument("universal-cover unfolding requires a connected graph");
    }
    if (t < 0) {
        throw std::invalid_argument("negative truncation depth");
    }
    g.neighbors(x); // validates x
    if (node_budget < 1) {
        throw BudgetExceeded(node_budget);
    }

    TruncatedCover out;
    out.tree.parent = {-1};
    out.tree.children = {{}};
    out.projection = {x};
    std::vector<int> depth{0};

    // Nodes are walks; a node's children extend it by one non-backtracking
    // step. BFS generation keeps the topological (parent-first) layout.
    for (std::size_t head = 0; head < out.tree.parent.size(); ++head) {
        const int node = static_cast<int>(head);
        if (depth[node] == t) {
            continue;
        }
        const VertexId at = out.projection[node];
        const int par = out.tree.parent[node];
        const VertexId came_from = par < 0 ? -1 : out.projection[par];
        for (VertexId w : g.neighbors(at)) {
            if (w == came_from) {
                continue;
            }
            if (static_cast<long long>(out.tree.parent.size()) >= node_budget) {
                throw BudgetExceeded(node_budget);
            }
            const int child = static_cast<int>(out.tree.parent.size());
            out.tree.parent.push_back(node);
            out.tree.children.emplace_back();
            out.tree.children[node].push_back(child);
            out.projection.push_back(w);
            depth.push_back(depth[node] + 1);
        }
    }
    out.tree.depth = depth.back(); // BFS order: the last node is deepest
    return out;
}

namespace {

// Streams the canonical string of the subtree at a node, one character at a
// time, visiting children in an already-canonical order. Used to compare two
// subtree strings without materializing either (they can be long on path-like
// trees).
class CanonCursor {
public:
    CanonCursor(const std::vector<std::vector<int>>& sorted_children, int root)
        : children_(sorted_children) {
        stack_.push_back({root, 0});
        pending_open_ = true;
    }

    // Returns '(' , ')' or 0 at end of stream.
    char next() {
        if (stack_.empty()) {
            return 0;
        }
        if (pending_open_) {
            pending_open_ = false;
            return '(';
        }
        auto& [node, slot] = stack_.back();
        if (slot == static_cast<int>(children_[node].size())) {
            stack_.pop_back();
            return ')';
        }
        const int child = children_[node][slot++];
        stack_.push_back({child, 0});
        return '(';
    }

private:
    const std::vector<std::vector<int>>& children_;
    std::vector<std::pair<int, int>> stack_;
    bool pending_open_ = false;
};

} // namespace

CanonForm ahu_canon(const RootedTree& t) {
    const int n = t.node_count();
    if (n == 0) {
        throw std::invalid_argument("cannot canonicalize an empty tree");
    }

    std::vector<int> height(n, 0);
    for (int i = n - 1; i >= 1; --i) {
        height[t.parent[i]] = std::max(height[t.parent[i]], height[i] + 1);
    }
    std::vector<std::vector<int>> by_height(height[0] + 1);
    for (int i = 0; i < n; ++i) {
        by_height[height[i]].push_back(i);
    }

    // klass[i]: isomorphism class of the subtree at node i. Distinct classes
    // have distinct canonical strings, so string order is a total order on
    // classes; it is resolved lazily via CanonCursor and memoized.
    std::vector<int> klass(n, -1);
    std::vector<std::vector<int>> sorted_children(n);
    std::map<std::vector<int>, int> class_of_signature;
    std::map<std::pair<int, int>, bool> class_less; // key (a, b) with a < b numerically

    auto structural_less = [&](int a, int b) {
        CanonCursor ca(sorted_children, a), cb(sorted_children, b);
        for (;;) {
            const char x = ca.next();
            const char y = cb.next();
            if (x != y) {
                return x < y; // covers end-of-stream: 0 < '(' and 0 < ')'
            }
            if (x == 0) {
                return false; // equal strings
            }
        }
    };
    auto canon_less = [&](int a, int b) {
        if (klass[a] == klass[b]) {
            return false;
        }
        const auto key = std::minmax(klass[a], klass[b]);
        auto it = class_less.find(key);
        if (it == class_less.end()) {
            const bool low_first = klass[a] < klass[b] ? structural_less(a, b)
                                                       : !structural_less(a, b);
            it = class_less.emplace(key, low_first).first;
        }
        return klass[a] < klass[b] ? it->second : !it->second;
    };

    for (const auto& level : by_height) {
        for (int node : level) {
            sorted_children[node] = t.children[node];
            std::sort(sorted_children[node].begin(), sorted_children[node].end(), canon_less);
            std::vector<int> sig;
            sig.reserve(sorted_children[node].size());
            for (int c : sorted_children[node]) {
                sig.push_back(klass[c]);
            }
            const auto [it, inserted] =
                class_of_signature.emplace(std::move(sig), static_cast<int>(class_of_signature.size()));
            klass[node] = it->second;
        }
    }

    CanonForm out;
    out.reserve(2 * static_cast<std::size_t>(n));
    CanonCursor cur(sorted_children, 0);
    for (char c = cur.next(); c != 0; c = cur.next()) {
        out.push_back(c);
    }
    return out;
}

bool trunc_iso(const Graph& g, VertexId x, const Graph& h, VertexId y, int t,
               long long node_budget) {
    const auto tg = truncated_ucover(g, x, t, node_budget);
    const auto th = truncated_ucover(h, y, t, node_budget);
    return ahu_canon(tg.tree) == ahu_canon(th.tree);
}

namespace {

void require_connected_pair(const Graph& g, const Graph& h) {
    if (!is_connected(g) || !is_connected(h)) {
        throw std::invalid_argument("universal-cover comparison requires connected graphs");
    }
}

} // namespace

bool ucover_iso(const Graph& g, VertexId x, const Graph& h, VertexId y) {
    require_connected_pair(g, h);
    g.neighbors(x);
    h.neighbors(y);
    // Colors at the stable round equal colors at round 2n-1, which settle the
    // infinite unfoldings.
    const JointRefinement j = joint_refinement(g, h);
    const int last = j.history.stab + 1;
    return j.color_g(last, x) == j.color_h(last, y);
}

std::optional<int> distinguishing_depth(const Graph& g, VertexId x, const Graph& h, VertexId y) {
    require_connected_pair(g, h);
    // First round at which the counting-bisimulation game separates the
    // roots; by the game-color correspondence this is the minimal t with
    // non-isomorphic depth-t truncations.
    return bisim_depth(g, x, h, y);
}

} // namespace covers
