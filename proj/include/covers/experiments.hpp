#pragma once

#include "covers/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace covers {

struct ReportRow {
    std::string instance;
    long long measured = 0;
    long long expected = 0;
    std::string provenance; // "formula" (closed form) or "fixture" (pinned measurement)
    bool pass = false;
};

struct ExperimentReport {
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<ReportRow> rows;
    bool pass = true;

    void param(const std::string& key, const std::string& value);
    void param(const std::string& key, long long value);

    // Equality row: passes iff measured == expected.
    void expect_eq(const std::string& instance, long long measured, long long expected,
                   const std::string& provenance);
    // Lower-bound row: passes iff measured >= expected.
    void expect_ge(const std::string& instance, long long measured, long long expected,
                   const std::string& provenance);
    // Strict-bound row: passes iff measured > expected.
    void expect_gt(const std::string& instance, long long measured, long long expected,
                   const std::string& provenance);

    std::string to_json() const;
    std::string to_csv() const;
};

// Depth-law and depth-vs-n identities of the padded family along a list of t
// values (s = 2t+1 throughout).
ExperimentReport experiment_norris(const std::vector<int>& t_list);

// Stabilization indices of one (s,t) instance: lower bounds from the depth
// law plus pinned exact values for the standard instances.
ExperimentReport experiment_corollary(int s, int t);

// Seeded cross-validation: tree-engine vs color-engine agreement, the three
// common-cover conditions, and the regular-graph sweep.
ExperimentReport experiment_property_suite(std::uint64_t seed, int count);

// Exhaustive S(n) = max stabilization index over all n-vertex graphs,
// n <= n_max <= 7, with one witness per n.
ExperimentReport experiment_max_stab(int n_max);

// Random connected graph on 2..n_max vertices: a random attachment tree plus
// up to two extra edges. Uses raw engine draws only, so results are
// identical across platforms for a fixed seed.
Graph random_connected_graph(std::mt19937_64& rng, int n_max);

} // namespace covers
