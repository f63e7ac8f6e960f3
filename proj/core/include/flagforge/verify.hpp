#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagforge/complex.hpp"

namespace flagforge {

struct SearchWitness {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

// Result of an exhaustive small-graph scan: which values of one face number
// are attainable when another is pinned.  Exhaustive only within the vertex
// budget; excluded values are claims about the scanned domain, nothing more.
struct SearchReport {
    int fix_card = 0;
    Int fix_count = 0;
    int report_card = 0;
    int max_vertices = 0;
    std::map<Int, SearchWitness> attained;
    std::vector<Int> excluded_in_domain;  // gaps in [0, max attained]
};

// Scan all graphs (up to isomorphism) on at most max_vertices non-isolated
// vertices with exactly fix_count cliques of fix_card vertices; report the
// attained counts of report_card-cliques.  max_vertices <= 9.
SearchReport search_flag_profiles(int fix_card, const Int& fix_count,
                                  int report_card, int max_vertices);

struct VerifyMismatch {
    int index = 0;
    Int got = 0;
    Int want = 0;
};

// Recompute the face vector by brute force and compare entrywise
// (also catches faces beyond the expected dimension).  nullopt = pass.
std::optional<VerifyMismatch> verify_graph(const VertexColoredGraph& g,
                                           const FaceVector& expected);

// Canonical edge code for graphs on <= 9 vertices: iterated degree
// refinement, then lexicographic minimization over the label permutations
// the refinement leaves open.
std::uint64_t canonical_code(int n, const std::vector<std::pair<int, int>>& edges);

struct SuiteCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    bool all_pass() const;
};

struct SuiteRanges {
    int turan_n_max = 30;
    int turan_r_max = 4;
    int turan_k_max = 4;
    int turan_brute_n_max = 18;
    long long cascade_m_max = 300;
    int cascade_k_max = 4;
    int cascade_r_max = 5;
    long long cost_m_max = 3000;
    int cost_k_max = 5;
    long long ceiling_m_max = 2000;
    int ceiling_k_max = 5;
    int ceiling_r_max = 6;
    int random_trials = 200;
};

using TuranFn = std::function<Int(const Int&, const Int&, int)>;

// Batch cross-checks of the closed forms against brute force and against
// each other; turan_fn substitutes the formula under test (mutation hook).
SuiteReport bound_consistency_suite(const SuiteRanges& ranges = {},
                                    TuranFn turan_fn = nullptr);

}  // namespace flagforge
