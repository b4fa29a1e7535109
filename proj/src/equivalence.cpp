#include "covers/equivalence.hpp"

#include "covers/refinement.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <utility>

namespace covers {

GameOutcome bisim_depth(const Graph& g, VertexId u, const Graph& h, VertexId v) {
    g.neighbors(u);
    h.neighbors(v);
    const JointRefinement j = joint_refinement(g, h);
    for (int i = 0; i <= j.history.stab + 1; ++i) {
        if (j.color_g(i, u) != j.color_h(i, v)) {
            return i;
        }
    }
    return std::nullopt;
}

CommonCoverResult have_common_cover(const Graph& g, const Graph& h) {
    if (!is_connected(g) || !is_connected(h)) {
        throw std::invalid_argument("common-cover decision requires connected graphs");
    }
    const JointRefinement j = joint_refinement(g, h);
    const auto& hist = j.history;
    const int n_union = g.vertex_count() + h.vertex_count();

    // Colors at round 2n-1 equal the stable colors (2n-1 >= stab of the
    // union), so the deep-round conditions read off the last stored round.
    const int deep = std::min(2 * std::max(g.vertex_count(), h.vertex_count()) - 1,
                              hist.stab + 1);
    const auto deep_g = color_set(hist.rounds[deep], 0, j.offset);
    const auto deep_h = color_set(hist.rounds[deep], j.offset, n_union);

    CommonCoverResult r;
    std::vector<int> shared;
    std::set_intersection(deep_g.begin(), deep_g.end(), deep_h.begin(), deep_h.end(),
                          std::back_inserter(shared));
    r.sets_intersect = !shared.empty();
    r.sets_equal = deep_g == deep_h;

    const int round4 = std::min(j.stab_g + 1, hist.stab + 1);
    r.stab_round_equal = color_set(hist.rounds[round4], 0, j.offset) ==
                         color_set(hist.rounds[round4], j.offset, n_union);

    r.decision = r.stab_round_equal;
    if (r.sets_intersect != r.sets_equal || r.sets_equal != r.stab_round_equal) {
        throw std::logic_error("common-cover conditions disagree");
    }
    return r;
}

bool fo2c_equivalent(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) {
        return false;
    }
    if (!is_connected(g)) {
        if (is_connected(h)) {
            return fo2c_equivalent(h, g);
        }
        // The complement of a disconnected graph is connected, and
        // two-variable counting equivalence is complement-invariant.
        return fo2c_equivalent(complement(g), complement(h));
    }
    const JointRefinement j = joint_refinement(g, h);
    const int round = std::min(j.stab_g + 1, j.history.stab + 1);
    const int n_union = g.vertex_count() + h.vertex_count();
    return color_set(j.history.rounds[round], 0, j.offset) ==
           color_set(j.history.rounds[round], j.offset, n_union);
}

namespace {

// Perfect matching between two n-element sides with a flat allowed-row table
// (allowed[x*n + y]), by Hopcroft-Karp layered augmentation.
bool has_perfect_matching(int n, const char* allowed) {
    if (n == 0) {
        return true;
    }
    std::vector<int> match_l(n, -1), match_r(n, -1), dist(n);

    auto bfs = [&]() {
        std::deque<int> queue;
        bool reachable_free = false;
        for (int x = 0; x < n; ++x) {
            dist[x] = match_l[x] < 0 ? 0 : -1;
            if (dist[x] == 0) {
                queue.push_back(x);
            }
        }
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            const char* row = allowed + static_cast<std::size_t>(x) * n;
            for (int y = 0; y < n; ++y) {
                if (!row[y]) {
                    continue;
                }
                const int next = match_r[y];
                if (next < 0) {
                    reachable_free = true;
                } else if (dist[next] < 0) {
                    dist[next] = dist[x] + 1;
                    queue.push_back(next);
                }
            }
        }
        return reachable_free;
    };

    auto dfs = [&](auto&& self, int x) -> bool {
        const char* row = allowed + static_cast<std::size_t>(x) * n;
        for (int y = 0; y < n; ++y) {
            if (!row[y]) {
                continue;
            }
            const int next = match_r[y];
            if (next < 0 || (dist[next] == dist[x] + 1 && self(self, next))) {
                match_l[x] = y;
                match_r[y] = x;
                return true;
            }
        }
        dist[x] = -1;
        return false;
    };

    int matched = 0;
    while (bfs()) {
        for (int x = 0; x < n; ++x) {
            if (match_l[x] < 0 && dfs(dfs, x)) {
                ++matched;
            }
        }
    }
    return matched == n;
}

} // namespace

PairTable::PairTable(const Graph& g, const Graph& h)
    : g_(&g), h_(&h), ng_(g.vertex_count()), nh_(h.vertex_count()) {
    const std::size_t pairs = static_cast<std::size_t>(ng_) * nh_;
    s_.assign(pairs, 1);
    t_.assign(pairs * pairs, 0);
    // Round 0: a two-pebble position survives iff it is a partial
    // isomorphism: equalities and adjacencies must match across the sides.
    for (VertexId a = 0; a < ng_; ++a) {
        for (VertexId b = 0; b < nh_; ++b) {
            const std::size_t p = pair_index(a, b);
            for (VertexId u = 0; u < ng_; ++u) {
                const bool same_g = a == u;
                const bool adj_g = g.has_edge(a, u);
                for (VertexId v = 0; v < nh_; ++v) {
                    const bool consistent =
                        (same_g == (b == v)) && (adj_g == h.has_edge(b, v));
                    t_[p * pairs + pair_index(u, v)] = consistent ? 1 : 0;
                }
            }
        }
    }
}

std::size_t PairTable::pair_index(VertexId a, VertexId b) const {
    return static_cast<std::size_t>(a) * nh_ + b;
}

bool PairTable::pair_alive(VertexId a, VertexId b, VertexId u, VertexId v) const {
    const std::size_t pairs = static_cast<std::size_t>(ng_) * nh_;
    return t_[pair_index(a, b) * pairs + pair_index(u, v)] != 0;
}

bool PairTable::single_alive(VertexId a, VertexId b) const {
    return s_[pair_index(a, b)] != 0;
}

void PairTable::advance() {
    const std::size_t pairs = static_cast<std::size_t>(ng_) * nh_;
    const bool square = ng_ == nh_;

    // replace_ok[q]: a pebble lifted against stationary pair q can be re-placed,
    // i.e. the bijection over pairs still alive with q admits a perfect matching.
    // T is symmetric in its two pair slots, so row q is the contiguous slice.
    std::vector<char> replace_ok(pairs, 0);
    if (square) {
        for (std::size_t q = 0; q < pairs; ++q) {
            replace_ok[q] = has_perfect_matching(ng_, t_.data() + q * pairs) ? 1 : 0;
        }
    }
    const bool empty_next = square && has_perfect_matching(ng_, s_.data());

    std::vector<char> t_next(pairs * pairs, 0);
    std::vector<char> s_next(pairs, 0);
    for (std::size_t p = 0; p < pairs; ++p) {
        s_next[p] = (replace_ok[p] && empty_next) ? 1 : 0;
        if (!replace_ok[p]) {
            continue;
        }
        const char* t_row = t_.data() + p * pairs;
        char* out_row = t_next.data() + p * pairs;
        for (std::size_t q = 0; q < pairs; ++q) {
            out_row[q] = (t_row[q] && replace_ok[q]) ? 1 : 0;
        }
    }

    fixpoint_ = t_next == t_ && s_next == s_ && empty_next == empty_alive_;
    t_ = std::move(t_next);
    s_ = std::move(s_next);
    empty_alive_ = empty_next;
    ++round_;
}

GameOutcome fo2c_depth(const Graph& g, const Graph& h, int size_guard) {
    if (g.vertex_count() > size_guard || h.vertex_count() > size_guard) {
        throw SizeGuardExceeded(size_guard);
    }
    if (g.vertex_count() != h.vertex_count()) {
        return 1; // a counting quantifier on the vertex count distinguishes
    }
    const int cap = joint_refinement(g, h).history.stab + 3;
    PairTable table(g, h);
    for (int r = 1; r <= cap; ++r) {
        table.advance();
        if (!table.empty_alive()) {
            return r;
        }
        if (table.fixpoint()) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

DepthBounds fo2c_depth_bounds(const Graph& g, const Graph& h) {
    DepthBounds b;
    if (fo2c_equivalent(g, h)) {
        b.equivalent = true;
        return b;
    }
    const int n = std::max(g.vertex_count(), h.vertex_count());
    const int stab_min = std::min(run_refinement(g).stab, run_refinement(h).stab);
    b.lower = 1;
    b.upper = std::min(stab_min + 2, n + 1);
    return b;
}

} // namespace covers
