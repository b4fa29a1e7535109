#include "covers/experiments.hpp"

#include "covers/constructions.hpp"
#include "covers/cover.hpp"
#include "covers/equivalence.hpp"
#include "covers/refinement.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace covers {

void ExperimentReport::param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
}

void ExperimentReport::param(const std::string& key, long long value) {
    params.emplace_back(key, std::to_string(value));
}

namespace {

void push_row(ExperimentReport& r, const std::string& instance, long long measured,
              long long expected, const std::string& provenance, bool row_pass) {
    r.rows.push_back({instance, measured, expected, provenance, row_pass});
    r.pass = r.pass && row_pass;
}

} // namespace

void ExperimentReport::expect_eq(const std::string& instance, long long measured,
                                 long long expected, const std::string& provenance) {
    push_row(*this, instance, measured, expected, provenance, measured == expected);
}

void ExperimentReport::expect_ge(const std::string& instance, long long measured,
                                 long long expected, const std::string& provenance) {
    push_row(*this, instance, measured, expected, provenance, measured >= expected);
}

void ExperimentReport::expect_gt(const std::string& instance, long long measured,
                                 long long expected, const std::string& provenance) {
    push_row(*this, instance, measured, expected, provenance, measured > expected);
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) {
        j["params"][key] = value;
    }
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        j["rows"].push_back({{"instance", row.instance},
                             {"measured", row.measured},
                             {"expected", row.expected},
                             {"provenance", row.provenance},
                             {"pass", row.pass}});
    }
    j["pass"] = pass;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    out << "instance,measured,expected,provenance,pass\n";
    for (const auto& row : rows) {
        if (row.instance.find(',') != std::string::npos) {
            throw std::logic_error("row instance must not contain a comma");
        }
        out << row.instance << ',' << row.measured << ',' << row.expected << ','
            << row.provenance << ',' << (row.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

namespace {

constexpr const char* kFormula = "formula";
constexpr const char* kFixture = "fixture";

// Exact stabilization indices of the standard instances, measured once and
// pinned as regression values.
struct StabFixture {
    int s, t;
    int stab_g, stab_h, stab_union;
};

constexpr StabFixture kStabFixtures[] = {
    {3, 2, 17, 15, 31},
    {3, 3, 25, 23, 47},
    {5, 2, 22, 19, 39},
    {5, 3, 32, 29, 59},
    {7, 3, 39, 35, 71},
};

const StabFixture* stab_fixture(int s, int t) {
    for (const auto& f : kStabFixtures) {
        if (f.s == s && f.t == t) {
            return &f;
        }
    }
    return nullptr;
}

std::string tag(int s, int t) {
    return "s=" + std::to_string(s) + " t=" + std::to_string(t);
}

} // namespace

ExperimentReport experiment_norris(const std::vector<int>& t_list) {
    ExperimentReport rep;
    rep.experiment = "norris";
    std::string ts;
    for (int t : t_list) {
        ts += (ts.empty() ? "" : " ") + std::to_string(t);
    }
    rep.param("t_list", ts);

    for (int t : t_list) {
        if (t < 2) {
            throw std::invalid_argument("every t must be at least 2");
        }
        const int s = 2 * t + 1;
        const ConstructionParams p{s, t};
        const int n = p.n();
        const long long r = 2LL * n - 14LL * t - 14; // = 2l with l = t(s+5)-1
        const LabeledGraph g = construct_gst(p);
        const LabeledGraph h = construct_hst(p);
        const auto depth = distinguishing_depth(g.graph, g.root, h.graph, h.root);
        const long long measured = depth ? *depth : -1;
        const std::string where = "t=" + std::to_string(t) + " n=" + std::to_string(n);

        rep.expect_eq(where + " distinguishing depth", measured, r + 1, kFormula);
        if (t >= 3) {
            // Certifies that truncation depth n does not suffice; at t=2 the
            // formula gives r+1 = 39 < n = 40 so there is nothing to certify.
            rep.expect_gt(where + " depth exceeds n", measured, n, kFormula);
        }
        const double cover_bound = 2.0 * n - 16.0 * std::sqrt(static_cast<double>(n));
        if (cover_bound > 0) {
            push_row(rep, where + " r exceeds shallow-agreement bound", r,
                     static_cast<long long>(std::floor(cover_bound)), kFormula,
                     static_cast<double>(r) > cover_bound);
        }
    }
    return rep;
}

ExperimentReport experiment_corollary(int s, int t) {
    const ConstructionParams p{s, t};
    p.validate();
    ExperimentReport rep;
    rep.experiment = "corollary";
    rep.param("s", s);
    rep.param("t", t);
    rep.param("n", p.n());
    rep.param("l", p.l());

    const LabeledGraph g = construct_gst(p);
    const LabeledGraph h = construct_hst(p);
    const int stab_g = run_refinement(g.graph).stab;
    const int stab_h = run_refinement(h.graph).stab;
    const int stab_union = joint_refinement(g.graph, h.graph).history.stab;
    const int l = p.l();

    rep.expect_ge(tag(s, t) + " stab of union vs 2l+1", stab_union, 2 * l + 1, kFormula);
    rep.expect_ge(tag(s, t) + " stab of G vs l-1", stab_g, l - 1, kFormula);
    if (const StabFixture* f = stab_fixture(s, t)) {
        rep.expect_eq(tag(s, t) + " stab of G", stab_g, f->stab_g, kFixture);
        rep.expect_eq(tag(s, t) + " stab of H", stab_h, f->stab_h, kFixture);
        rep.expect_eq(tag(s, t) + " stab of union", stab_union, f->stab_union, kFixture);
    } else {
        rep.expect_eq(tag(s, t) + " stab of H vs l", stab_h, l, kFormula);
    }
    return rep;
}

Graph random_connected_graph(std::mt19937_64& rng, int n_max) {
    if (n_max < 2) {
        throw std::invalid_argument("n_max must be at least 2");
    }
    const int n = 2 + static_cast<int>(rng() % (n_max - 1));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<int>(rng() % v), v);
    }
    std::set<std::pair<VertexId, VertexId>> present(edges.begin(), edges.end());
    const int extra = static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v) {
            continue;
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (present.insert({u, v}).second) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

// Canonical strings of every depth-i truncation at every root of g, for
// i = 0..max_depth. One unfolding at max_depth per root; prefixes reuse it.
std::vector<std::vector<CanonForm>> all_truncation_canons(const Graph& g, int max_depth) {
    std::vector<std::vector<CanonForm>> canons(g.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        for (int d = 0; d <= max_depth; ++d) {
            canons[x].push_back(ahu_canon(truncated_ucover(g, x, d).tree));
        }
    }
    return canons;
}

} // namespace

ExperimentReport experiment_property_suite(std::uint64_t seed, int count) {
    if (count < 1) {
        throw std::invalid_argument("count must be positive");
    }
    ExperimentReport rep;
    rep.experiment = "properties";
    rep.param("seed", static_cast<long long>(seed));
    rep.param("count", count);

    std::mt19937_64 rng(seed);

    // Tree engine vs color engine: over random connected pairs, every root
    // pair and every depth up to stab(union)+1, truncation isomorphism must
    // coincide with color-refinement equality.
    long long checks = 0, agreements = 0;
    for (int i = 0; i < count; ++i) {
        const Graph g = random_connected_graph(rng, 10);
        const Graph h = random_connected_graph(rng, 10);
        const JointRefinement j = joint_refinement(g, h);
        const int max_depth = j.history.stab + 1;
        const auto cg = all_truncation_canons(g, max_depth);
        const auto ch = all_truncation_canons(h, max_depth);
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            for (VertexId y = 0; y < h.vertex_count(); ++y) {
                for (int d = 0; d <= max_depth; ++d) {
                    const bool tree_iso = cg[x][d] == ch[y][d];
                    const bool color_eq = j.color_g(d, x) == j.color_h(d, y);
                    ++checks;
                    agreements += tree_iso == color_eq ? 1 : 0;
                }
            }
        }
    }
    rep.expect_eq("tree-vs-color agreement over " + std::to_string(count) + " pairs",
                  agreements, checks, kFormula);

    // Common-cover conditions: have_common_cover asserts internally that the
    // three conditions coincide; on small pairs also confirm the decision
    // matches root-pair universal-cover isomorphism.
    long long cc_runs = 0, cc_ok = 0, root_checks = 0, root_ok = 0;
    auto probe = [&](const Graph& g, const Graph& h) {
        const CommonCoverResult r = have_common_cover(g, h);
        ++cc_runs;
        ++cc_ok; // have_common_cover throws if the conditions disagree
        if (g.vertex_count() <= 8 && h.vertex_count() <= 8) {
            bool some_root = false;
            for (VertexId x = 0; x < g.vertex_count() && !some_root; ++x) {
                for (VertexId y = 0; y < h.vertex_count() && !some_root; ++y) {
                    some_root = ucover_iso(g, x, h, y);
                }
            }
            ++root_checks;
            root_ok += some_root == r.decision ? 1 : 0;
        }
        return r.decision;
    };
    for (int i = 0; i < 100; ++i) {
        probe(random_connected_graph(rng, 10), random_connected_graph(rng, 10));
    }
    for (const auto& f : kStabFixtures) {
        const ConstructionParams p{f.s, f.t};
        const bool decision = probe(construct_gst(p).graph, construct_hst(p).graph);
        // The sources claim nothing here; the measured answer (no shared
        // stable color, hence no common cover) is pinned as a regression value.
        rep.expect_eq(tag(f.s, f.t) + " pair has a common cover", decision ? 1 : 0, 0,
                      kFixture);
    }
    rep.expect_eq("common-cover condition agreement", cc_ok, cc_runs, kFormula);
    rep.expect_eq("common-cover decision vs root-pair search", root_ok, root_checks,
                  kFormula);

    // Regularity sweep: connected regular graphs stabilize immediately.
    long long regular_total = 0, regular_zero = 0;
    auto sweep = [&](const Graph& g) {
        ++regular_total;
        regular_zero += run_refinement(g).stab == 0 ? 1 : 0;
    };
    for (int n = 3; n <= 20; ++n) {
        sweep(gen_cycle(n));
    }
    sweep(gen_complete(4));
    sweep(gen_petersen());
    rep.expect_eq("regular sweep stab=0", regular_zero, regular_total, kFormula);

    return rep;
}

namespace {

// Exhaustive S(n) values measured by this enumerator on first run and pinned.
constexpr int kMaxStabPinned[] = {0, 0, 0, 1, 1, 2, 3, 4}; // index = n, n <= 7

// Stabilization index over adjacency bitmasks, allocation-free; used only by
// the exhaustive sweep (the unit tests tie it to run_refinement).
int bitmask_stab(int n, const std::array<std::uint8_t, 8>& adj) {
    std::array<int, 8> color{};
    int classes = 1;
    for (int round = 0;; ++round) {
        std::array<std::array<int, 9>, 8> sig{};
        for (int v = 0; v < n; ++v) {
            sig[v][0] = color[v];
            int deg = 0;
            for (int w = 0; w < n; ++w) {
                if (adj[v] >> w & 1) {
                    sig[v][1 + deg++] = color[w];
                }
            }
            std::sort(sig[v].begin() + 1, sig[v].begin() + 1 + deg);
            for (int k = 1 + deg; k < 9; ++k) {
                sig[v][k] = -1;
            }
        }
        std::array<int, 8> order{};
        for (int v = 0; v < n; ++v) {
            order[v] = v;
        }
        std::sort(order.begin(), order.begin() + n,
                  [&](int a, int b) { return sig[a] < sig[b]; });
        std::array<int, 8> next{};
        int id = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) {
                ++id;
            }
            next[order[i]] = id;
        }
        if (id + 1 == classes) {
            return round;
        }
        classes = id + 1;
        color = next;
    }
}

} // namespace

ExperimentReport experiment_max_stab(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    if (n_max > 7) {
        throw std::invalid_argument("n_max above 7 is not exhaustively enumerable here");
    }
    ExperimentReport rep;
    rep.experiment = "maxstab";
    rep.param("n_max", n_max);

    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                slots.emplace_back(u, v);
            }
        }
        int best = -1;
        std::uint64_t best_mask = 0;
        for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
            std::array<std::uint8_t, 8> adj{};
            for (std::size_t i = 0; i < slots.size(); ++i) {
                if (mask >> i & 1) {
                    adj[slots[i].first] |= std::uint8_t(1) << slots[i].second;
                    adj[slots[i].second] |= std::uint8_t(1) << slots[i].first;
                }
            }
            const int stab = bitmask_stab(n, adj);
            if (stab > best) {
                best = stab;
                best_mask = mask;
            }
        }
        std::string witness = "witness";
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (best_mask >> i & 1) {
                witness += " " + std::to_string(slots[i].first) + "-" +
                           std::to_string(slots[i].second);
            }
        }
        rep.expect_eq("n=" + std::to_string(n) + " max stab (" + witness + ")", best,
                      kMaxStabPinned[n], n <= 2 ? kFormula : kFixture);
    }
    return rep;
}

} // namespace covers
