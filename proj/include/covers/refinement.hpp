#pragma once

#include "covers/graph.hpp"

#include <vector>

namespace covers {

// One refinement round's vertex coloring. Ids are dense (exactly
// {0..class_count-1}) and canonical: id order equals the lexicographic order
// of the signatures (old id, sorted neighbor ids) that produced them, so two
// runs on isomorphic inputs agree up to the isomorphism.
struct Coloring {
    std::vector<int> color;
    int class_count = 0;

    bool operator==(const Coloring&) const = default;
};

Coloring uniform_coloring(const Graph& g);

// One round of color refinement; new ids are canonical ranks of the
// signatures (old id, sorted multiset of neighbor old ids).
Coloring refine_step(const Graph& g, const Coloring& c);

// The full refinement run C^0 .. C^{stab+1}; the last two rounds are equal.
struct RefinementHistory {
    std::vector<Coloring> rounds;
    int stab = 0;
    int graph_size = 0;

    const Coloring& stable() const { return rounds.back(); }

    // Color of v at the given round; rounds past stab+1 repeat the stable
    // coloring, so the round index is clamped.
    int color_at(int round, VertexId v) const;
};

RefinementHistory run_refinement(const Graph& g);

// Refinement run on the disjoint union of two graphs, so colors on both
// sides are directly comparable. Also records the rounds at which the
// restrictions to each side stop splitting (those equal each side's own
// stabilization index).
struct JointRefinement {
    RefinementHistory history;
    int offset = 0; // H's vertex i sits at union id offset + i
    int stab_g = 0;
    int stab_h = 0;

    int color_g(int round, VertexId v) const { return history.color_at(round, v); }
    int color_h(int round, VertexId v) const { return history.color_at(round, offset + v); }
};

JointRefinement joint_refinement(const Graph& g, const Graph& h);

// m[c][c2] = number of neighbors in stable class c2 of any vertex in stable
// class c; well-defined because the stable partition is equitable.
struct DegreeRefinementMatrix {
    std::vector<std::vector<int>> m;

    int class_count() const { return static_cast<int>(m.size()); }
};

DegreeRefinementMatrix degree_refinement_matrix(const Graph& g);

// Sorted distinct colors appearing on vertices [begin, end) of a coloring.
std::vector<int> color_set(const Coloring& c, int begin, int end);

} // namespace covers
