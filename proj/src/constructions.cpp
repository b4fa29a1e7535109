#include "covers/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace covers {

void ConstructionParams::validate() const {
    if (s < 3 || s % 2 == 0) {
        throw std::invalid_argument("s must be an odd integer >= 3");
    }
    if (t < 2) {
        throw std::invalid_argument("t must be an integer >= 2");
    }
}

std::string type_name(int code) {
    switch (code) {
    case kTypePad:
        return "PAD";
    case kTypeA:
        return "A";
    case kTypeB:
        return "B";
    case kTypeC:
        return "C";
    default:
        if (code >= 1 && code < kTypeA) {
            return "P" + std::to_string(code);
        }
        throw std::invalid_argument("unknown type code " + std::to_string(code));
    }
}

namespace {

// Palindromic rank of the i-th path vertex (1-based): P1 P2 ... P2 P1.
int path_rank(int i, int s) {
    return std::min(i, s + 1 - i);
}

struct Assembly {
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> types;

    int add(int type) {
        types.push_back(type);
        return n++;
    }
    void link(int u, int v) { edges.emplace_back(u, v); }

    // Appends the block's vertices and edges; returns its (bottom, top)
    // attachment points as global ids.
    std::pair<int, int> append(const BlockFragment& b) {
        const int offset = n;
        types.insert(types.end(), b.types.begin(), b.types.end());
        n += b.vertex_count;
        for (const auto& [u, v] : b.edges) {
            edges.emplace_back(u + offset, v + offset);
        }
        return {b.bottom + offset, b.top + offset};
    }

    // Typed path of s vertices chained internally; returns (first, last).
    std::pair<int, int> add_path(int s) {
        int first = -1, prev = -1;
        for (int i = 1; i <= s; ++i) {
            const int v = add(path_rank(i, s));
            if (prev >= 0) {
                link(prev, v);
            } else {
                first = v;
            }
            prev = v;
        }
        return {first, prev};
    }

    // B-C-C-B diamond hanging from `base`; returns the top B vertex.
    int add_diamond(int base) {
        const int b_lo = add(kTypeB);
        const int c1 = add(kTypeC);
        const int c2 = add(kTypeC);
        const int b_hi = add(kTypeB);
        link(base, b_lo);
        link(b_lo, c1);
        link(b_lo, c2);
        link(c1, b_hi);
        link(c2, b_hi);
        return b_hi;
    }
};

// The shared top gadget: an A vertex already present (`a_left`, and either
// the same or a second A vertex `a_right`) carrying B vertices whose two
// common C children close the graph.
void add_top_gadget(Assembly& a, int a_left, int a_right) {
    const int b_l = a.add(kTypeB);
    const int b_r = a.add(kTypeB);
    const int c1 = a.add(kTypeC);
    const int c2 = a.add(kTypeC);
    a.link(a_left, b_l);
    a.link(a_right, b_r);
    a.link(b_l, c1);
    a.link(b_r, c1);
    a.link(b_l, c2);
    a.link(b_r, c2);
}

void validate_family(const LabeledGraph& lg, const ConstructionParams& p) {
    const Graph& g = lg.graph;
    if (g.vertex_count() != p.n()) {
        throw std::logic_error("construction has wrong vertex count");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (v == lg.root ? d != 1 : (d != 2 && d != 3)) {
            throw std::logic_error("construction degree audit failed at vertex " +
                                   std::to_string(v));
        }
        if (lg.levels[v] == kUnreachable) {
            throw std::logic_error("construction is not connected");
        }
    }

    // Property A: away from the root, the neighbor-type multiset is a
    // function of the vertex's own type.
    std::map<int, std::vector<int>> profile;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == lg.root) {
            continue;
        }
        std::vector<int> nbr_types;
        for (VertexId w : g.neighbors(v)) {
            if (lg.types[w] == lg.types[v]) {
                throw std::logic_error("adjacent vertices share a type");
            }
            nbr_types.push_back(lg.types[w]);
        }
        std::sort(nbr_types.begin(), nbr_types.end());
        const auto [it, inserted] = profile.emplace(lg.types[v], nbr_types);
        if (!inserted && it->second != nbr_types) {
            throw std::logic_error("type profile is not single-valued");
        }
    }

    // Property B: every level below l is type-homogeneous.
    std::map<int, int> level_type;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (lg.levels[v] >= p.l()) {
            continue;
        }
        const auto [it, inserted] = level_type.emplace(lg.levels[v], lg.types[v]);
        if (!inserted && it->second != lg.types[v]) {
            throw std::logic_error("level below l carries two types");
        }
    }
}

LabeledGraph finalize_family(Assembly&& a, VertexId root, const ConstructionParams& p) {
    LabeledGraph lg;
    lg.graph = Graph::from_edges(a.n, a.edges);
    lg.root = root;
    lg.types = std::move(a.types);
    lg.levels = bfs_levels(lg.graph, root);
    validate_family(lg, p);
    return lg;
}

} // namespace

BlockFragment tail_block(int s) {
    if (s < 3 || s % 2 == 0) {
        throw std::invalid_argument("s must be an odd integer >= 3");
    }
    Assembly a;
    const auto [p_first, p_last] = a.add_path(s);
    const int a_bot = a.add(kTypeA);
    a.link(p_last, a_bot);
    const int top_l = a.add_diamond(a_bot);
    const int top_r = a.add_diamond(a_bot);
    const int a_top = a.add(kTypeA);
    a.link(top_l, a_top);
    a.link(top_r, a_top);

    BlockFragment b;
    b.vertex_count = a.n;
    b.edges = std::move(a.edges);
    b.types = std::move(a.types);
    b.bottom = p_first;
    b.top = a_top;
    return b;
}

LabeledGraph construct_gst(const ConstructionParams& p) {
    p.validate();
    const BlockFragment block = tail_block(p.s);
    Assembly a;
    int root = -1, prev_top = -1;
    for (int i = 0; i < p.t; ++i) {
        const auto [bottom, top] = a.append(block);
        if (prev_top >= 0) {
            a.link(prev_top, bottom);
        } else {
            root = bottom;
        }
        prev_top = top;
    }
    // Head extension: one more typed path to a final A vertex, closed by the
    // top gadget with both B's on that single A.
    const auto [q_first, q_last] = a.add_path(p.s);
    a.link(prev_top, q_first);
    const int a_head = a.add(kTypeA);
    a.link(q_last, a_head);
    add_top_gadget(a, a_head, a_head);
    return finalize_family(std::move(a), root, p);
}

LabeledGraph construct_hst(const ConstructionParams& p) {
    p.validate();
    const BlockFragment block = tail_block(p.s);
    Assembly a;
    int root = -1, prev_top = -1;
    for (int i = 0; i < p.t - 1; ++i) {
        const auto [bottom, top] = a.append(block);
        if (prev_top >= 0) {
            a.link(prev_top, bottom);
        } else {
            root = bottom;
        }
        prev_top = top;
    }
    // Head block: path to a middle A vertex carrying two diamonds whose tops
    // attach to two separate A vertices; those are joined by a horizontal
    // typed path and closed by the same top gadget.
    const auto [q_first, q_last] = a.add_path(p.s);
    if (prev_top >= 0) {
        a.link(prev_top, q_first);
    } else {
        root = q_first; // t = 1 would start here; excluded by validate()
    }
    const int a_mid = a.add(kTypeA);
    a.link(q_last, a_mid);
    const int top_l = a.add_diamond(a_mid);
    const int top_r = a.add_diamond(a_mid);
    const int a_left = a.add(kTypeA);
    const int a_right = a.add(kTypeA);
    a.link(top_l, a_left);
    a.link(top_r, a_right);
    const auto [r_first, r_last] = a.add_path(p.s);
    a.link(a_left, r_first);
    a.link(r_last, a_right);
    add_top_gadget(a, a_left, a_right);
    return finalize_family(std::move(a), root, p);
}

Theorem1Pair construct_theorem1_pair(int n) {
    Theorem1Pair out;
    out.t = 0;
    for (int t = 2; 2 * t * t + 13 * t + 6 <= n; ++t) {
        out.t = t;
    }
    if (out.t < 2) {
        throw std::invalid_argument("n must be at least 40 (the smallest padded instance)");
    }
    out.s = 2 * out.t + 1;
    const ConstructionParams params{out.s, out.t};
    out.k = n - params.n();
    out.l = params.l();

    const auto pad = [&](LabeledGraph lg) {
        auto edges = lg.graph.edges();
        const int base = lg.graph.vertex_count();
        for (int i = 0; i < out.k; ++i) {
            edges.emplace_back(lg.root, base + i);
            lg.types.push_back(kTypePad);
        }
        lg.graph = Graph::from_edges(base + out.k, edges);
        lg.levels = bfs_levels(lg.graph, lg.root);
        return lg;
    };
    out.g = pad(construct_gst(params));
    out.h = pad(construct_hst(params));
    if (out.g.graph.vertex_count() != n || out.h.graph.vertex_count() != n) {
        throw std::logic_error("padded construction has wrong vertex count");
    }
    return out;
}

std::vector<Arc> orient_by_type(const LabeledGraph& lg) {
    std::vector<Arc> arcs;
    arcs.reserve(lg.graph.edge_count());
    for (const auto& [u, v] : lg.graph.edges()) {
        const int tu = lg.types[u];
        const int tv = lg.types[v];
        if (tu == tv) {
            throw std::logic_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " joins two vertices of the same type");
        }
        arcs.push_back(tu < tv ? Arc{u, v} : Arc{v, u});
    }
    return arcs;
}

} // namespace covers
