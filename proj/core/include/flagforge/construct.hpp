#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagforge/complex.hpp"
#include "flagforge/decompose.hpp"

namespace flagforge {

// Outcome of the adjacent-extra-vertices test for one candidate pair:
// the overlap budget q, the floor inequality from the main construction,
// and the realized overlap p (-1 = leave the pair non-adjacent).
struct PairFeasibility {
    Int q = -1;
    Int p = -1;
    Int floor_lhs = 0;
    Int floor_rhs = 0;
    bool middle_zone = false;
};

// Floor test for making consecutive extra vertices adjacent with exactly
// q common base neighbors, applied to a balanced stage base on n0 vertices
// and `level` parts.  rem_budget is what is left of the stage's top-card
// face budget after the current vertex's own link.
PairFeasibility pair_extra_vertices(const Int& n0, int level, const Int& n_prev,
                                    const Int& n_cur, const Int& rem_budget);

struct StageExtraTrace {
    Int n;
    Int q = -1;
    Int p = -1;
    bool middle_zone = false;
};

struct StageTrace {
    int level = 0;                 // this stage budgets faces on `level` vertices
    std::vector<Int> parts;        // base part sizes, non-increasing
    Int n0 = 0;                    // total base vertices
    Int target_m = 0;              // faces of cardinality `level` the stage carries
    Int m0 = 0;
    std::vector<StageExtraTrace> extras;
    std::vector<Int> glue_parts;   // intersection with the previous stage
    Int glue_faces = 0;            // top-card faces of the glue subgraph
    FaceVector gamma_f;            // ledger of this stage's complex alone
    FaceVector delta_f;            // cumulative ledger after gluing
    Int new_vertices = 0;
};

struct ConstructionFailure {
    int face_card = 0;             // budget of f_{face_card - 1} broke
    Int required = 0;
    Int allowed = 0;
    int at_stage = 0;
    std::string reason;            // "budget" | "overshoot" | "link_capacity" | ...
};

struct ConstructionPlan {
    std::string kind;              // two_face | dim | main | hvec
    int k = 0, p = 0, r = 0;
    Int m = 0, q = 0;
    std::vector<Int> target;       // goal vector including the leading 1
    std::string alloc_mode;        // balanced | explicit
    bool pairing = false;
    std::vector<StageTrace> stages;
    Int pendant_vertices = 0;
    std::optional<ConstructionFailure> failure;

    bool success() const { return !failure.has_value(); }
};

struct ConstructionResult {
    VertexColoredGraph graph;      // empty on failure
    ConstructionPlan plan;
};

// Part-allocation produced by the uneven-parts heuristic.  In balanced mode
// the stage bases come straight from the greedy Turan cascade; otherwise
// `suggested[j-1]` holds the rounded integer parts for the level-j stage.
struct Allocation {
    bool balanced_mode = true;
    bool monotone_ok = true;
    int repair_k = 0;              // width of the first block of the repair, 0 = none
    std::vector<std::vector<Real>> continuous;  // level j -> j values, non-increasing
    std::vector<std::vector<Int>> suggested;
    std::string note;
};

Allocation balanced_allocation(int d);
Allocation explicit_allocation(const std::vector<Int>& top_parts);

// Level-wise equal allocation first; on a monotonicity violation, re-solve
// with the two-block shape (x on the first k parts, y on the rest) by
// bisection on the level-d and level-k count equations.
Allocation allocate_parts(const FaceVector& target);

// Clique on n0 vertices plus greedy extra vertices, then pendant top-up.
ConstructionResult construct_two_face(int k, int p, const Int& m, const Int& q);

// Turan-graph base T_{n0,r}, extra vertices with Turan links, optional
// adjacent-pair tweak, pendant top-up; dimension at most r-1.
ConstructionResult construct_dim(int r, int k, int p, const Int& m, const Int& q,
                                 bool pairing = true);

// Staged construction over the full face vector: one stage per cardinality
// from d down to 1, each glued to the previous along a shared Turan subgraph.
ConstructionResult construct_main(const FaceVector& target, const Allocation& alloc);
ConstructionResult construct_main(const FaceVector& target);  // allocate_parts first

struct HvecResult {
    VertexColoredGraph graph;
    ConstructionPlan plan;
    HVector achieved;
};

// construct_main on the h-vector read as a face vector, then the
// plus-construction; verifies h(result) entrywise.
HvecResult construct_hvec(const HVector& target);

}  // namespace flagforge
