#include "flagforge/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace flagforge {

void FaceVector::trim() {
    while (entries.size() > 1 && entries.back() == 0) entries.pop_back();
}

int VertexColoredGraph::add_vertex(int color) {
    if (color < 1) throw std::invalid_argument("add_vertex: colors are 1-based");
    color_.push_back(color);
    declared_colors_ = std::max(declared_colors_, color);
    ++n_;
    int need = (n_ + 63) / 64;
    if (need > words_) {
        words_ = need;
        for (auto& row : adj_) row.resize(static_cast<size_t>(words_), 0);
    }
    adj_.emplace_back(static_cast<size_t>(words_), 0);
    return n_ - 1;
}

void VertexColoredGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("add_edge: bad vertex");
    adj_[static_cast<size_t>(u)][static_cast<size_t>(v) / 64] |= (uint64_t{1} << (v % 64));
    adj_[static_cast<size_t>(v)][static_cast<size_t>(u) / 64] |= (uint64_t{1} << (u % 64));
}

bool VertexColoredGraph::adjacent(int u, int v) const {
    return (adj_[static_cast<size_t>(u)][static_cast<size_t>(v) / 64] >> (v % 64)) & 1;
}

std::vector<std::pair<int, int>> VertexColoredGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Int VertexColoredGraph::edge_count() const {
    Int c = 0;
    for (int u = 0; u < n_; ++u) {
        int deg = 0;
        for (uint64_t w : adj_[static_cast<size_t>(u)]) deg += std::popcount(w);
        c += deg;
    }
    return c / 2;
}

void VertexColoredGraph::declare_colors(int c) {
    if (c < declared_colors_)
        throw std::invalid_argument("declare_colors: below a color already in use");
    declared_colors_ = c;
}

int VertexColoredGraph::used_colors() const {
    std::set<int> s(color_.begin(), color_.end());
    return static_cast<int>(s.size());
}

bool VertexColoredGraph::properly_colored() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v) && color_[static_cast<size_t>(u)] == color_[static_cast<size_t>(v)])
                return false;
    return true;
}

VertexColoredGraph build_multipartite(const std::vector<Int>& parts) {
    VertexColoredGraph g;
    std::vector<int> part_of;
    for (size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] < 0) throw std::invalid_argument("build_multipartite: negative part");
        long long sz = parts[j].convert_to<long long>();
        for (long long t = 0; t < sz; ++t) {
            g.add_vertex(static_cast<int>(j) + 1);
            part_of.push_back(static_cast<int>(j));
        }
    }
    g.declare_colors(static_cast<int>(parts.size()));
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)])
                g.add_edge(u, v);
    return g;
}

namespace {
int g_thread_override = 0;
}

void set_default_thread_count(int threads) { g_thread_override = threads; }

int default_thread_count() {
    if (g_thread_override >= 1) return g_thread_override;
    if (const char* env = std::getenv("FLAGFORGE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

namespace {

// Single-word path (n <= 64): enumerate cliques in increasing vertex order.
void count_cliques_word(const std::vector<uint64_t>& adj, int max_card,
                        uint64_t cand, int depth, std::vector<uint64_t>& counts) {
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;  // cand now holds only vertices > v
        ++counts[static_cast<size_t>(depth) + 1];
        if (depth + 1 < max_card) {
            uint64_t next = cand & adj[static_cast<size_t>(v)];
            if (next) count_cliques_word(adj, max_card, next, depth + 1, counts);
        }
    }
}

struct WideMask {
    std::vector<uint64_t> w;
    bool any() const {
        for (uint64_t x : w) if (x) return true;
        return false;
    }
};

void count_cliques_wide(const std::vector<std::vector<uint64_t>>& adj, int max_card,
                        const WideMask& cand, int depth, std::vector<uint64_t>& counts) {
    WideMask rest = cand;
    size_t words = rest.w.size();
    for (size_t wi = 0; wi < words; ++wi) {
        while (rest.w[wi]) {
            int v = static_cast<int>(wi) * 64 + std::countr_zero(rest.w[wi]);
            rest.w[wi] &= rest.w[wi] - 1;
            ++counts[static_cast<size_t>(depth) + 1];
            if (depth + 1 < max_card) {
                WideMask next;
                next.w.resize(words);
                bool nonzero = false;
                const auto& av = adj[static_cast<size_t>(v)];
                for (size_t t = 0; t < words; ++t) {
                    next.w[t] = rest.w[t] & av[t];
                    if (t < wi) next.w[t] = 0;  // rest already cleared below wi
                }
                // vertices below the current word were consumed already; the
                // masking above keeps only candidates > v
                for (size_t t = 0; t < words; ++t) nonzero = nonzero || next.w[t];
                if (nonzero) count_cliques_wide(adj, max_card, next, depth + 1, counts);
            }
        }
    }
}

}  // namespace

FaceVector clique_f_vector(const VertexColoredGraph& g, int max_card, int threads) {
    if (max_card < 1) throw std::invalid_argument("clique_f_vector: max_card >= 1");
    if (threads <= 0) threads = default_thread_count();
    int n = g.vertex_count();
    std::vector<uint64_t> counts(static_cast<size_t>(max_card) + 1, 0);
    counts[0] = 1;

    if (n == 0) return FaceVector{};

    if (n <= 64) {
        std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.adj_words(v)[0];
        auto run = [&](int t, std::vector<uint64_t>& local) {
            for (int v = t; v < n; v += threads) {
                ++local[1];
                if (max_card >= 2) {
                    uint64_t above = (v == 63) ? 0 : (~uint64_t{0} << (v + 1));
                    uint64_t next = adj[static_cast<size_t>(v)] & above;
                    if (n < 64) next &= (uint64_t{1} << n) - 1;
                    if (next) count_cliques_word(adj, max_card, next, 1, local);
                }
            }
        };
        if (threads == 1) {
            run(0, counts);
        } else {
            std::vector<std::vector<uint64_t>> partial(
                static_cast<size_t>(threads),
                std::vector<uint64_t>(static_cast<size_t>(max_card) + 1, 0));
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&, t] { run(t, partial[static_cast<size_t>(t)]); });
            for (auto& th : pool) th.join();
            for (const auto& p : partial)
                for (size_t i = 1; i <= static_cast<size_t>(max_card); ++i) counts[i] += p[i];
        }
    } else {
        int words = g.words();
        std::vector<std::vector<uint64_t>> adj(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.adj_words(v);
        auto run = [&](int t, std::vector<uint64_t>& local) {
            for (int v = t; v < n; v += threads) {
                ++local[1];
                if (max_card < 2) continue;
                WideMask next;
                next.w.assign(static_cast<size_t>(words), 0);
                const auto& av = adj[static_cast<size_t>(v)];
                for (int u = v + 1; u < n; ++u)
                    if ((av[static_cast<size_t>(u) / 64] >> (u % 64)) & 1)
                        next.w[static_cast<size_t>(u) / 64] |= (uint64_t{1} << (u % 64));
                if (next.any()) count_cliques_wide(adj, max_card, next, 1, local);
            }
        };
        if (threads == 1) {
            run(0, counts);
        } else {
            std::vector<std::vector<uint64_t>> partial(
                static_cast<size_t>(threads),
                std::vector<uint64_t>(static_cast<size_t>(max_card) + 1, 0));
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&, t] { run(t, partial[static_cast<size_t>(t)]); });
            for (auto& th : pool) th.join();
            for (const auto& p : partial)
                for (size_t i = 1; i <= static_cast<size_t>(max_card); ++i) counts[i] += p[i];
        }
    }

    FaceVector out;
    out.entries.assign(counts.size(), 0);
    for (size_t i = 0; i < counts.size(); ++i) out.entries[i] = counts[i];
    out.trim();
    return out;
}

int max_clique_size(const VertexColoredGraph& g) {
    if (g.vertex_count() == 0) return 0;
    // proper upper bound: number of used colors if properly colored, else n
    int cap = g.properly_colored() ? g.used_colors() : g.vertex_count();
    FaceVector f = clique_f_vector(g, cap);
    return f.dim_plus_one();
}

HVector f_to_h(const FaceVector& f) {
    if (f.entries.empty() || f.entries[0] != 1)
        throw std::invalid_argument("f_to_h: entries must start with f_{-1} = 1");
    int d = f.dim_plus_one();
    HVector h;
    h.entries.assign(static_cast<size_t>(d) + 1, 0);
    for (int kk = 0; kk <= d; ++kk) {
        Int s = 0;
        for (int i = 0; i <= kk; ++i) {
            Int term = binom(Int(d) - i, Int(kk) - i) * f.f(i);
            if ((kk - i) % 2 == 0) s += term; else s -= term;
        }
        h.entries[static_cast<size_t>(kk)] = s;
    }
    return h;
}

FaceVector h_to_f(const HVector& h) {
    if (h.entries.empty() || h.entries[0] != 1)
        throw std::invalid_argument("h_to_f: h_0 must be 1");
    int d = static_cast<int>(h.entries.size()) - 1;
    FaceVector f;
    f.entries.assign(static_cast<size_t>(d) + 1, 0);
    for (int kk = 0; kk <= d; ++kk) {
        Int s = 0;
        for (int i = 0; i <= kk; ++i)
            s += binom(Int(d) - i, Int(kk) - i) * h.entries[static_cast<size_t>(i)];
        f.entries[static_cast<size_t>(kk)] = s;
    }
    return f;
}

VertexColoredGraph plus_construction(const VertexColoredGraph& g) {
    if (!g.properly_colored())
        throw std::invalid_argument("plus_construction: input is not properly colored");
    VertexColoredGraph out = g;
    int base = g.vertex_count();
    int colors = g.declared_colors();
    for (int c = 1; c <= colors; ++c) out.add_vertex(c);
    for (int c = 1; c <= colors; ++c) {
        int x = base + c - 1;
        for (int v = 0; v < out.vertex_count(); ++v)
            if (v != x && out.color(v) != c) out.add_edge(x, v);
    }
    return out;
}

bool is_balanced(const VertexColoredGraph& g) {
    if (!g.properly_colored()) return false;
    return g.used_colors() == max_clique_size(g);
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<std::uint32_t> faces) {
    SimplicialComplex c;
    c.n = n;
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::uint32_t f : faces) {
        bool maximal = true;
        for (std::uint32_t other : faces)
            if (other != f && (f & other) == f) { maximal = false; break; }
        if (maximal) c.facets.push_back(f);
    }
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
    for (std::uint32_t f : facets)
        if ((face & f) == face) return true;
    return false;
}

std::uint32_t SimplicialComplex::support() const {
    std::uint32_t s = 0;
    for (std::uint32_t f : facets) s |= f;
    return s;
}

SimplicialComplex clique_complex(const VertexColoredGraph& g) {
    int n = g.vertex_count();
    if (n > 32) throw std::invalid_argument("clique_complex: needs <= 32 vertices");
    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[static_cast<size_t>(u)] |= (1u << v);
    // Bron-Kerbosch with pivoting
    std::vector<std::uint32_t> maximal;
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    auto bk = [&](auto&& self, std::uint32_t R, std::uint32_t P, std::uint32_t X) -> void {
        if (P == 0 && X == 0) { maximal.push_back(R); return; }
        std::uint32_t PX = P | X;
        int pivot = std::countr_zero(PX);
        int best = -1;
        for (std::uint32_t t = PX; t; t &= t - 1) {
            int u = std::countr_zero(t);
            int deg = std::popcount(P & adj[static_cast<size_t>(u)]);
            if (deg > best) { best = deg; pivot = u; }
        }
        std::uint32_t ext = P & ~adj[static_cast<size_t>(pivot)];
        for (std::uint32_t t = ext; t; t &= t - 1) {
            int v = std::countr_zero(t);
            std::uint32_t bit = 1u << v;
            self(self, R | bit, P & adj[static_cast<size_t>(v)], X & adj[static_cast<size_t>(v)]);
            P &= ~bit;
            X |= bit;
        }
    };
    if (n > 0) bk(bk, 0, all, 0);
    SimplicialComplex c;
    c.n = n;
    if (n == 0) {
        c.facets = {0};  // the empty complex {emptyset}
        return c;
    }
    std::sort(maximal.begin(), maximal.end());
    c.facets = std::move(maximal);
    return c;
}

namespace {

std::vector<std::uint32_t> link_facets(const SimplicialComplex& c, int v) {
    std::uint32_t bit = 1u << v;
    std::vector<std::uint32_t> out;
    for (std::uint32_t f : c.facets)
        if (f & bit) out.push_back(f & ~bit);
    return out;
}

std::vector<std::uint32_t> deletion_facets(const SimplicialComplex& c, int v) {
    std::uint32_t bit = 1u << v;
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f : c.facets) faces.push_back(f & ~bit);
    return SimplicialComplex::from_faces(c.n, std::move(faces)).facets;
}

bool vd_impl(const SimplicialComplex& c, std::map<std::vector<std::uint32_t>, bool>& memo) {
    // Simplices (void, {emptyset}, or a single facet) are vertex decomposable.
    if (c.facets.size() <= 1) return true;
    auto it = memo.find(c.facets);
    if (it != memo.end()) return it->second;
    memo.emplace(c.facets, false);  // guard against re-entry; updated below

    std::uint32_t supp = c.support();
    bool ok = false;
    for (std::uint32_t t = supp; t && !ok; t &= t - 1) {
        int v = std::countr_zero(t);
        std::vector<std::uint32_t> lk = link_facets(c, v);
        if (lk.empty()) continue;  // v not a vertex (cannot happen: supp)
        std::vector<std::uint32_t> del = deletion_facets(c, v);
        // shedding: no facet of del(v) is a face of lk(v),
        // i.e. G + v is not a face of c for any facet G of del(v)
        std::uint32_t bit = 1u << v;
        bool shedding = true;
        for (std::uint32_t gfacet : del)
            if (c.contains(gfacet | bit)) { shedding = false; break; }
        if (!shedding) continue;
        SimplicialComplex dc;
        dc.n = c.n;
        dc.facets = del;
        SimplicialComplex lc;
        lc.n = c.n;
        std::sort(lk.begin(), lk.end());
        lc.facets = std::move(lk);
        if (vd_impl(dc, memo) && vd_impl(lc, memo)) ok = true;
    }
    memo[c.facets] = ok;
    return ok;
}

}  // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& c, int max_vertices) {
    if (std::popcount(c.support()) > max_vertices) return VdResult::too_large;
    std::map<std::vector<std::uint32_t>, bool> memo;
    return vd_impl(c, memo) ? VdResult::yes : VdResult::no;
}

}  // namespace flagforge
