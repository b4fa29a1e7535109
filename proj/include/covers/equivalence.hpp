#pragma once

#include "covers/graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace covers {

// Depth of the distinguishing game; absent = the players' resources never
// run out (the inputs are equivalent).
using GameOutcome = std::optional<int>;

// Minimal round at which the counting-bisimulation game at the two roots
// tips to the first player; equals the first round where joint refinement
// colors the roots differently. Absent when the colors agree forever.
GameOutcome bisim_depth(const Graph& g, VertexId u, const Graph& h, VertexId v);

// Common-cover decision with the three equivalent test conditions:
//   sets_intersect   - stable color sets of the two sides share a color,
//   sets_equal       - stable color sets coincide (evaluated at round 2n-1),
//   stab_round_equal - color sets coincide at round stab(G)+1.
// The decision is taken from stab_round_equal; all three must agree.
struct CommonCoverResult {
    bool decision = false;
    bool sets_intersect = false;
    bool sets_equal = false;
    bool stab_round_equal = false;
};

CommonCoverResult have_common_cover(const Graph& g, const Graph& h);

// Indistinguishability by sentences of two-variable counting logic:
// equal vertex counts plus equal color sets at round s+1, where s is the
// stabilization index of a connected input (complements are used when
// neither input is connected).
bool fo2c_equivalent(const Graph& g, const Graph& h);

inline constexpr int kDefaultSizeGuard = 64;

class SizeGuardExceeded : public std::runtime_error {
public:
    explicit SizeGuardExceeded(int guard)
        : std::runtime_error("input exceeds the exact-solver size guard of " +
                             std::to_string(guard) + " vertices") {}
};

// Survival tables of the 2-pebble counting game in bijection form, indexed
// by vertex pairs (a in G, b in H):
//   pair_alive   - both pebbles placed, position {(a,b),(u,v)};
//   single_alive - one pebble placed;
//   empty_alive  - no pebble placed yet.
// advance() computes round r+1 from round r; each (re)placement against a
// stationary pair is decided by a perfect-matching test.
class PairTable {
public:
    PairTable(const Graph& g, const Graph& h);

    void advance();

    int round() const { return round_; }
    bool pair_alive(VertexId a, VertexId b, VertexId u, VertexId v) const;
    bool single_alive(VertexId a, VertexId b) const;
    bool empty_alive() const { return empty_alive_; }
    bool fixpoint() const { return fixpoint_; }

private:
    const Graph* g_;
    const Graph* h_;
    int ng_, nh_, round_ = 0;
    std::vector<char> t_; // [(a*nh+b) * ng*nh + (u*nh+v)]
    std::vector<char> s_; // [a*nh+b]
    bool empty_alive_ = true;
    bool fixpoint_ = false;

    std::size_t pair_index(VertexId a, VertexId b) const;
};

// Exact minimum quantifier depth of a distinguishing sentence, by backward
// induction over empty/one-pebble/two-pebble game states; absent when the
// tables reach a fixpoint with the second player still alive.
GameOutcome fo2c_depth(const Graph& g, const Graph& h, int size_guard = kDefaultSizeGuard);

struct DepthBounds {
    bool equivalent = false;
    int lower = 0; // 1 when distinguishable
    int upper = 0; // min(stab(G), stab(H)) + 2, capped at n+1
};

DepthBounds fo2c_depth_bounds(const Graph& g, const Graph& h);

} // namespace covers
