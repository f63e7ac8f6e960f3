#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagforge/numeric.hpp"

namespace flagforge {

// Face vector (1, f_0, f_1, ..., f_{d-1}); entries[0] = f_{-1} = 1.
struct FaceVector {
    std::vector<Int> entries;

    FaceVector() : entries{1} {}
    explicit FaceVector(std::vector<Int> e) : entries(std::move(e)) {}

    int dim_plus_one() const { return static_cast<int>(entries.size()) - 1; }
    // f(j) = number of faces on j vertices (f(0) = 1).
    Int f(int card) const {
        if (card < 0 || card >= static_cast<int>(entries.size())) return 0;
        return entries[static_cast<size_t>(card)];
    }
    void trim();  // drop trailing zero entries (but keep the leading 1)
    bool operator==(const FaceVector&) const = default;
};

// h-vector (h_0, ..., h_d); entries may be negative for general complexes.
struct HVector {
    std::vector<Int> entries;
    bool operator==(const HVector&) const = default;
};

// A graph with a color (part) id per vertex; the 1-skeleton whose clique
// complex is the object of interest.  Colors are 1-based.
class VertexColoredGraph {
public:
    VertexColoredGraph() = default;

    int add_vertex(int color);
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;

    int vertex_count() const { return n_; }
    int color(int v) const { return color_[static_cast<size_t>(v)]; }
    const std::vector<int>& colors() const { return color_; }
    std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted
    Int edge_count() const;

    int declared_colors() const { return declared_colors_; }
    void declare_colors(int c);  // >= max used color
    int used_colors() const;

    bool properly_colored() const;  // no edge joins same-colored vertices

    // neighbor bitmask words (word w covers vertices 64w..64w+63)
    const std::vector<uint64_t>& adj_words(int v) const { return adj_[static_cast<size_t>(v)]; }
    int words() const { return words_; }

private:
    int n_ = 0;
    int words_ = 0;
    int declared_colors_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<uint64_t>> adj_;
};

// Complete multipartite graph on the given part sizes; vertex i of part j
// carries color j+1, parts laid out consecutively (so "the first several
// vertices of each color" is well defined).
VertexColoredGraph build_multipartite(const std::vector<Int>& parts);

// Exact clique counts by cardinality: entry j = number of j-vertex cliques,
// 0 <= j <= max_card; trailing zeros trimmed.  Deterministic regardless of
// the thread count (threads <= 0 means the FLAGFORGE_THREADS default).
FaceVector clique_f_vector(const VertexColoredGraph& g, int max_card, int threads = 0);

int default_thread_count();
// Process-wide override of the FLAGFORGE_THREADS default (0 clears it).
void set_default_thread_count(int threads);

// Size of the largest clique (dimension + 1 of the clique complex).
int max_clique_size(const VertexColoredGraph& g);

HVector f_to_h(const FaceVector& f);
FaceVector h_to_f(const HVector& h);

// One additional vertex of each declared color, adjacent to everything of
// every other color.  Rejects improperly colored input.
VertexColoredGraph plus_construction(const VertexColoredGraph& g);

// True iff properly colored and the number of used colors is exactly
// (dimension of the clique complex) + 1.
bool is_balanced(const VertexColoredGraph& g);

// Explicit complex as a list of maximal faces (bitmask per facet); only
// used at desk scale (vertex-decomposability checks, plus-construction
// audits).  The void complex has no facets; {emptyset} has the facet 0.
struct SimplicialComplex {
    int n = 0;
    std::vector<std::uint32_t> facets;

    static SimplicialComplex from_faces(int n, std::vector<std::uint32_t> faces);
    bool contains(std::uint32_t face) const;
    std::uint32_t support() const;
};

// Maximal cliques of g (requires <= 32 vertices).
SimplicialComplex clique_complex(const VertexColoredGraph& g);

enum class VdResult { yes, no, too_large };

// Recursive shedding-vertex check; memoized.  Complexes on more than
// max_vertices vertices get an explicit too_large, never a wrong answer.
VdResult is_vertex_decomposable(const SimplicialComplex& c, int max_vertices = 25);

}  // namespace flagforge
