#pragma once

#include "covers/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covers {

// Rooted tree in topological layout: node 0 is the root and every node's
// parent has a smaller index.
struct RootedTree {
    std::vector<int> parent;                // -1 for the root
    std::vector<std::vector<int>> children;
    int depth = 0;

    int node_count() const { return static_cast<int>(parent.size()); }

    static RootedTree from_parents(const std::vector<int>& parent);
};

// Canonical string over '(' and ')': equal strings iff the rooted trees are
// isomorphic. Length is twice the node count.
using CanonForm = std::string;

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(long long budget)
        : std::runtime_error("unfolding exceeds node budget of " + std::to_string(budget)) {}
};

inline constexpr long long kDefaultNodeBudget = 1'000'000;

// True iff alpha : V(H) -> V(G) is a covering map: a surjective homomorphism
// restricting to a bijection N(v) -> N(alpha(v)) at every v.
bool is_covering_map(const Graph& h, const Graph& g, const VertexMap& alpha);

struct TruncatedCover {
    RootedTree tree;
    VertexMap projection; // node -> graph vertex (last vertex of the walk)
};

// Tree of all non-backtracking walks of length <= t starting at x.
TruncatedCover truncated_ucover(const Graph& g, VertexId x, int t,
                                long long node_budget = kDefaultNodeBudget);

CanonForm ahu_canon(const RootedTree& t);

// Depth-t truncations of the universal covers at x and y are isomorphic
// (decided tree-side; throws BudgetExceeded when the unfoldings are too big,
// in which case callers fall back to the refinement route).
bool trunc_iso(const Graph& g, VertexId x, const Graph& h, VertexId y, int t,
               long long node_budget = kDefaultNodeBudget);

// Full universal-cover isomorphism, decided via joint refinement (colors at
// depth 2n-1 settle the infinite trees); never builds a tree.
bool ucover_iso(const Graph& g, VertexId x, const Graph& h, VertexId y);

// Minimal t at which the depth-t truncations differ; absent when the
// universal covers are isomorphic.
std::optional<int> distinguishing_depth(const Graph& g, VertexId x, const Graph& h, VertexId y);

} // namespace covers
