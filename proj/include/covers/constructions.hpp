#pragma once

#include "covers/graph.hpp"

#include <string>
#include <vector>

namespace covers {

// Parameters of the extremal pair (G_{s,t}, H_{s,t}).
struct ConstructionParams {
    int s = 3; // odd, >= 3
    int t = 2; // >= 2

    int n() const { return (t + 1) * (s + 10) - 5; }
    int l() const { return t * (s + 5) - 1; }

    void validate() const; // throws std::invalid_argument
};

// Vertex type codes, chosen so that integer order equals the orientation
// order PAD < P1 < P2 < ... < A < B < C. Path vertices carry their
// palindromic rank (P1 = 1, P2 = 2, ...); PAD marks padding pendants.
inline constexpr int kTypePad = 0;
inline constexpr int kTypeA = 1'000'000'000;
inline constexpr int kTypeB = 1'000'000'001;
inline constexpr int kTypeC = 1'000'000'002;

std::string type_name(int code);

// A construction output: the graph plus the root (the unique degree-1
// vertex), per-vertex types and per-vertex levels (distance to the root).
struct LabeledGraph {
    Graph graph;
    VertexId root = 0;
    std::vector<int> types;
    std::vector<int> levels;
};

// The repeated s+10-vertex building block: typed path p_1..p_s, an A vertex,
// two B-C-C-B diamonds, and a top A vertex. bottom (= p_1) and top (= the
// upper A) are the chaining attachment points.
struct BlockFragment {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // local ids
    std::vector<int> types;
    int bottom = 0;
    int top = 0;
};

BlockFragment tail_block(int s);

LabeledGraph construct_gst(const ConstructionParams& p);
LabeledGraph construct_hst(const ConstructionParams& p);

// Equal-size pair on exactly n vertices: the largest fitting (s=2t+1, t)
// instance padded with k pendant vertices on each root.
struct Theorem1Pair {
    LabeledGraph g;
    LabeledGraph h;
    int t = 0;
    int s = 0;
    int k = 0; // padding pendants per root
    int l = 0;
};

Theorem1Pair construct_theorem1_pair(int n);

struct Arc {
    VertexId from = 0;
    VertexId to = 0;

    bool operator==(const Arc&) const = default;
};

// Orients every edge from the lower to the higher vertex type
// (PAD < P1 < P2 < ... < A < B < C); throws std::logic_error if an edge
// joins two vertices of equal type.
std::vector<Arc> orient_by_type(const LabeledGraph& lg);

} // namespace covers
