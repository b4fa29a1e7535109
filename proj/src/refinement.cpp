#include "covers/refinement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace covers {

Coloring uniform_coloring(const Graph& g) {
    Coloring c;
    c.color.assign(g.vertex_count(), 0);
    c.class_count = g.vertex_count() > 0 ? 1 : 0;
    return c;
}

Coloring refine_step(const Graph& g, const Coloring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.color.size()) != n) {
        throw std::invalid_argument("coloring size does not match vertex count");
    }

    using Signature = std::pair<int, std::vector<int>>;
    std::vector<Signature> sig(n);
    for (VertexId v = 0; v < n; ++v) {
        std::vector<int> nbr;
        nbr.reserve(g.degree(v));
        for (VertexId w : g.neighbors(v)) {
            nbr.push_back(c.color[w]);
        }
        std::sort(nbr.begin(), nbr.end());
        sig[v] = {c.color[v], std::move(nbr)};
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return sig[a] < sig[b]; });

    Coloring next;
    next.color.assign(n, 0);
    int id = -1;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) {
            ++id;
        }
        next.color[order[i]] = id;
    }
    next.class_count = id + 1;
    return next;
}

int RefinementHistory::color_at(int round, VertexId v) const {
    if (round < 0) {
        throw std::out_of_range("negative refinement round");
    }
    const int last = static_cast<int>(rounds.size()) - 1;
    return rounds[std::min(round, last)].color[v];
}

RefinementHistory run_refinement(const Graph& g) {
    RefinementHistory h;
    h.graph_size = g.vertex_count();
    h.rounds.push_back(uniform_coloring(g));
    for (;;) {
        Coloring next = refine_step(g, h.rounds.back());
        const bool stabilized = next.color == h.rounds.back().color;
        h.rounds.push_back(std::move(next));
        if (stabilized) {
            h.stab = static_cast<int>(h.rounds.size()) - 2;
            return h;
        }
    }
}

namespace {

// Distinct colors among vertices [begin, end) at the given round.
int class_count_in_range(const Coloring& c, int begin, int end) {
    std::vector<int> seen(c.color.begin() + begin, c.color.begin() + end);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

// First round at which the induced partition on [begin, end) stops splitting.
// The induced partitions form a refinement chain, so partitions at rounds
// i and i+1 are equal exactly when their class counts are.
int restriction_stab(const RefinementHistory& h, int begin, int end) {
    if (begin == end) {
        return 0;
    }
    int prev = class_count_in_range(h.rounds[0], begin, end);
    for (std::size_t i = 1; i < h.rounds.size(); ++i) {
        const int cur = class_count_in_range(h.rounds[i], begin, end);
        if (cur == prev) {
            return static_cast<int>(i) - 1;
        }
        prev = cur;
    }
    return static_cast<int>(h.rounds.size()) - 1;
}

} // namespace

JointRefinement joint_refinement(const Graph& g, const Graph& h) {
    auto [u, offset] = disjoint_union(g, h);
    JointRefinement j;
    j.history = run_refinement(u);
    j.offset = offset;
    j.stab_g = restriction_stab(j.history, 0, offset);
    j.stab_h = restriction_stab(j.history, offset, u.vertex_count());
    return j;
}

DegreeRefinementMatrix degree_refinement_matrix(const Graph& g) {
    const Coloring stable = run_refinement(g).stable();
    const int k = stable.class_count;
    DegreeRefinementMatrix drm;
    drm.m.assign(k, std::vector<int>(k, 0));

    std::vector<bool> filled(k, false);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> row(k, 0);
        for (VertexId w : g.neighbors(v)) {
            ++row[stable.color[w]];
        }
        const int c = stable.color[v];
        if (!filled[c]) {
            drm.m[c] = row;
            filled[c] = true;
        } else if (drm.m[c] != row) {
            throw std::logic_error("stable partition is not equitable");
        }
    }
    return drm;
}

std::vector<int> color_set(const Coloring& c, int begin, int end) {
    std::vector<int> out(c.color.begin() + begin, c.color.begin() + end);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace covers
