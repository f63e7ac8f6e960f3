#include "flagforge/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "flagforge/bounds.hpp"
#include "flagforge/construct.hpp"
#include "flagforge/decompose.hpp"

namespace flagforge {

namespace {

// edge slot numbering for K_v, pairs (i, j) with i < j in lexicographic order
std::vector<std::pair<int, int>> edge_slots(int v) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) slots.emplace_back(i, j);
    return slots;
}

// number of s-cliques inside `mask` (vertices pairwise adjacent per adj)
void cliques_in_mask(const std::vector<std::uint32_t>& adj, std::uint32_t mask,
                     int depth, int max_depth, std::vector<long long>& out) {
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        ++out[static_cast<size_t>(depth) + 1];
        if (depth + 1 < max_depth)
            cliques_in_mask(adj, mask & adj[static_cast<size_t>(v)], depth + 1, max_depth, out);
    }
}

struct ScanState {
    int v = 0;                      // vertices in this pass
    int max_card = 0;               // track counts up to this cardinality
    std::vector<std::uint32_t> adj;
    std::vector<long long> cnt;     // cnt[t] = t-cliques, cnt[1] = v at leaves only
    std::vector<std::vector<long long>> deltas;  // per pushed edge

    void push_edge(int a, int b) {
        std::vector<long long> delta(static_cast<size_t>(max_card) + 1, 0);
        std::uint32_t common = adj[static_cast<size_t>(a)] & adj[static_cast<size_t>(b)];
        // cliques gaining both endpoints: subsets of the common neighborhood
        delta[2] = 1;
        if (max_card > 2 && common)
            cliques_in_mask(adj, common, 2, max_card, delta);
        for (int t = 2; t <= max_card; ++t) cnt[static_cast<size_t>(t)] += delta[static_cast<size_t>(t)];
        adj[static_cast<size_t>(a)] |= (1u << b);
        adj[static_cast<size_t>(b)] |= (1u << a);
        deltas.push_back(std::move(delta));
    }
    void pop_edge(int a, int b) {
        adj[static_cast<size_t>(a)] &= ~(1u << b);
        adj[static_cast<size_t>(b)] &= ~(1u << a);
        const auto& delta = deltas.back();
        for (int t = 2; t <= max_card; ++t) cnt[static_cast<size_t>(t)] -= delta[static_cast<size_t>(t)];
        deltas.pop_back();
    }
};

}  // namespace

std::uint64_t canonical_code(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > 9) throw std::invalid_argument("canonical_code: needs 0 <= n <= 9");
    if (n <= 1) return 0;
    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (auto [a, b] : edges) {
        adj[static_cast<size_t>(a)] |= (1u << b);
        adj[static_cast<size_t>(b)] |= (1u << a);
    }
    // iterated degree refinement
    std::vector<std::uint64_t> color(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = std::popcount(adj[static_cast<size_t>(v)]);
    for (int round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            for (int u = 0; u < n; ++u)
                if ((adj[static_cast<size_t>(v)] >> u) & 1) nb.push_back(color[static_cast<size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = color[static_cast<size_t>(v)] * 1000003ull + 0x9e3779b97f4a7c15ull;
            for (std::uint64_t x : nb) h = h * 1099511628211ull + x + 1;
            next[static_cast<size_t>(v)] = h;
        }
        if (next == color) break;
        color = next;
    }
    // vertices grouped by refinement class (class order by hash value),
    // permutations explored only within classes
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[static_cast<size_t>(a)] != color[static_cast<size_t>(b)])
            return color[static_cast<size_t>(a)] < color[static_cast<size_t>(b)];
        return a < b;
    });
    std::vector<std::pair<size_t, size_t>> groups;  // [begin, end) in order
    size_t s = 0;
    while (s < order.size()) {
        size_t e = s + 1;
        while (e < order.size() &&
               color[static_cast<size_t>(order[e])] == color[static_cast<size_t>(order[s])])
            ++e;
        groups.emplace_back(s, e);
        s = e;
    }
    auto slots = edge_slots(n);
    std::uint64_t best = ~0ull;
    // perm[i] = original vertex placed at position i
    std::vector<int> perm = order;
    auto eval = [&]() {
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
        std::uint64_t code = 0;
        for (size_t t = 0; t < slots.size(); ++t) {
            auto [i, j] = slots[t];
            int a = perm[static_cast<size_t>(i)], b = perm[static_cast<size_t>(j)];
            if ((adj[static_cast<size_t>(a)] >> b) & 1) code |= (1ull << t);
        }
        if (code < best) best = code;
    };
    // recursive product of within-class permutations
    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == groups.size()) {
            eval();
            return;
        }
        auto [b, e] = groups[gi];
        std::sort(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e));
        do {
            self(self, gi + 1);
        } while (std::next_permutation(perm.begin() + static_cast<long>(b),
                                       perm.begin() + static_cast<long>(e)));
    };
    rec(rec, 0);
    return best;
}

SearchReport search_flag_profiles(int fix_card, const Int& fix_count, int report_card,
                                  int max_vertices) {
    if (max_vertices < 0 || max_vertices > 9)
        throw std::invalid_argument("search_flag_profiles: vertex budget must be <= 9");
    if (fix_card < 1 || report_card < 1)
        throw std::invalid_argument("search_flag_profiles: cardinalities must be >= 1");
    if (fix_count < 0) throw std::invalid_argument("search_flag_profiles: fix_count >= 0");

    SearchReport rep;
    rep.fix_card = fix_card;
    rep.fix_count = fix_count;
    rep.report_card = report_card;
    rep.max_vertices = max_vertices;

    long long want = fix_count.convert_to<long long>();
    int max_card = std::max(fix_card, report_card);

    for (int v = 0; v <= max_vertices; ++v) {
        // quick domain cuts
        if (fix_card == 1 && want != v) continue;
        if (fix_card >= 2 && v > 0 && want > 0 && v < fix_card) continue;
        auto slots = edge_slots(v);
        ScanState st;
        st.v = v;
        st.max_card = max_card;
        st.adj.assign(static_cast<size_t>(v), 0);
        st.cnt.assign(static_cast<size_t>(max_card) + 1, 0);

        auto leaf = [&]() {
            if (fix_card >= 2 && st.cnt[static_cast<size_t>(fix_card)] != want) return;
            for (int u = 0; u < v; ++u)
                if (st.adj[static_cast<size_t>(u)] == 0) return;  // isolated vertex
            long long value = (report_card == 1)
                                  ? v
                                  : st.cnt[static_cast<size_t>(report_card)];
            Int key = value;
            if (!rep.attained.count(key)) {
                SearchWitness w;
                w.vertices = v;
                for (int a = 0; a < v; ++a)
                    for (int b = a + 1; b < v; ++b)
                        if ((st.adj[static_cast<size_t>(a)] >> b) & 1) w.edges.emplace_back(a, b);
                rep.attained.emplace(key, std::move(w));
            }
        };

        if (v == 0) {
            if (want == 0 || fix_card == 1) leaf();
            continue;
        }

        if (fix_card == 2) {
            // choose exactly `want` edges
            auto rec2 = [&](auto&& self, size_t slot, long long left) -> void {
                if (left == 0) {
                    leaf();
                    return;
                }
                if (static_cast<long long>(slots.size() - slot) < left) return;
                auto [a, b] = slots[slot];
                st.push_edge(a, b);
                self(self, slot + 1, left - 1);
                st.pop_edge(a, b);
                self(self, slot + 1, left);
            };
            rec2(rec2, 0, want);
        } else {
            // all edge subsets; the fixed count only grows as edges arrive
            auto rec = [&](auto&& self, size_t slot) -> void {
                if (fix_card >= 2 && st.cnt[static_cast<size_t>(fix_card)] > want) return;
                if (slot == slots.size()) {
                    leaf();
                    return;
                }
                auto [a, b] = slots[slot];
                st.push_edge(a, b);
                self(self, slot + 1);
                st.pop_edge(a, b);
                self(self, slot + 1);
            };
            rec(rec, 0);
        }
    }

    if (!rep.attained.empty()) {
        Int top = rep.attained.rbegin()->first;
        for (Int x = 0; x <= top; ++x)
            if (!rep.attained.count(x)) rep.excluded_in_domain.push_back(x);
    }
    return rep;
}

std::optional<VerifyMismatch> verify_graph(const VertexColoredGraph& g,
                                           const FaceVector& expected) {
    int d = expected.dim_plus_one();
    int cap = std::min(g.vertex_count(), d + 1);
    FaceVector got = cap >= 1 ? clique_f_vector(g, cap) : FaceVector{};
    int len = std::max(got.dim_plus_one(), d) + 1;
    for (int t = 0; t < len; ++t)
        if (got.f(t) != expected.f(t))
            return VerifyMismatch{t, got.f(t), expected.f(t)};
    return std::nullopt;
}

bool SuiteReport::all_pass() const {
    for (const SuiteCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

template <typename F>
SuiteCheck run_check(const std::string& name, F&& body) {
    SuiteCheck c;
    c.name = name;
    try {
        std::string detail;
        c.pass = body(detail);
        c.detail = detail;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

// exhaustive count of admissible plain cascades of m at level k
long long count_plain_reps(const Int& m, int k) {
    long long found = 0;
    auto rec = [&](auto&& self, const Int& rem, int bottom, const Int& top_bound) -> void {
        if (rem == 0) {
            ++found;
            return;
        }
        if (bottom < 1) return;
        if (bottom == 1) {  // binom(t, 1) = t: only t = rem can close the sum
            if (rem >= 1 && rem < top_bound) ++found;
            return;
        }
        for (Int top = bottom; top < top_bound; ++top) {
            Int val = binom(top, bottom);
            if (val > rem) break;
            self(self, rem - val, bottom - 1, top);
        }
    };
    rec(rec, m, k, m + k + 1);
    return found;
}

long long count_colored_reps(const Int& m, int k, int r) {
    long long found = 0;
    auto rec = [&](auto&& self, const Int& rem, int bottom, int sub,
                   const Int& gap_bound) -> void {
        if (rem == 0) {
            ++found;
            return;
        }
        if (bottom < 1 || sub < bottom) return;
        if (bottom == 1) {  // turan(t, 1, sub) = t
            if (rem >= 1 && rem < gap_bound) ++found;
            return;
        }
        for (Int top = bottom; top < gap_bound; ++top) {
            Int val = turan_count(top, bottom, sub);
            if (val > rem) break;
            self(self, rem - val, bottom - 1, sub - 1, top - top / sub);
        }
    };
    rec(rec, m, k, r, m + k + 1);
    return found;
}

}  // namespace

SuiteReport bound_consistency_suite(const SuiteRanges& R, TuranFn turan_fn) {
    if (!turan_fn)
        turan_fn = [](const Int& n, const Int& k, int r) { return turan_count(n, k, r); };
    SuiteReport rep;

    rep.checks.push_back(run_check("turan-recurrence", [&](std::string& detail) {
        for (int r = 1; r <= R.turan_r_max; ++r)
            for (int n = 1; n <= R.turan_n_max; ++n)
                for (int k = 0; k <= R.turan_k_max; ++k) {
                    // n = p*r + q with 0 < q <= r: the newest vertex joined a
                    // part that held p vertices
                    Int p = Int(n - 1) / r;
                    Int lhs = turan_fn(n, k, r);
                    Int rhs = turan_fn(n - 1, k, r) + turan_fn(Int(n) - p - 1, Int(k) - 1, r - 1);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "n=" << n << " k=" << k << " r=" << r << " lhs=" << lhs
                           << " rhs=" << rhs;
                        detail = os.str();
                        return false;
                    }
                }
        return true;
    }));

    rep.checks.push_back(run_check("turan-vs-bruteforce", [&](std::string& detail) {
        for (int r = 1; r <= R.turan_r_max; ++r)
            for (int n = 0; n <= R.turan_brute_n_max; ++n) {
                VertexColoredGraph g = build_multipartite(turan_parts(n, r).sizes);
                FaceVector f = clique_f_vector(g, std::max(1, R.turan_k_max));
                for (int k = 1; k <= R.turan_k_max; ++k)
                    if (turan_fn(n, k, r) != f.f(k)) {
                        std::ostringstream os;
                        os << "n=" << n << " k=" << k << " r=" << r;
                        detail = os.str();
                        return false;
                    }
            }
        return true;
    }));

    rep.checks.push_back(run_check("turan-vs-multipartite", [&](std::string& detail) {
        for (int r = 1; r <= R.turan_r_max; ++r)
            for (int n = 0; n <= R.turan_n_max; ++n)
                for (int k = 0; k <= R.turan_k_max; ++k)
                    if (turan_fn(n, k, r) !=
                        multipartite_count(turan_parts(n, r).sizes, k)) {
                        std::ostringstream os;
                        os << "n=" << n << " k=" << k << " r=" << r;
                        detail = os.str();
                        return false;
                    }
        return true;
    }));

    rep.checks.push_back(run_check("cascade-uniqueness", [&](std::string& detail) {
        for (int k = 1; k <= R.cascade_k_max; ++k)
            for (long long m = 1; m <= R.cascade_m_max; ++m) {
                if (count_plain_reps(m, k) != 1) {
                    detail = "plain m=" + std::to_string(m) + " k=" + std::to_string(k);
                    return false;
                }
                if (kk_rep(m, k).evaluate() != m) {
                    detail = "plain eval m=" + std::to_string(m);
                    return false;
                }
            }
        for (int r = 2; r <= R.cascade_r_max; ++r)
            for (int k = 1; k <= std::min(r, R.cascade_k_max); ++k)
                for (long long m = 1; m <= R.cascade_m_max / 2; ++m) {
                    if (count_colored_reps(m, k, r) != 1) {
                        detail = "colored m=" + std::to_string(m) + " k=" +
                                 std::to_string(k) + " r=" + std::to_string(r);
                        return false;
                    }
                    if (color_rep(m, k, r).evaluate() != m) {
                        detail = "colored eval m=" + std::to_string(m);
                        return false;
                    }
                }
        return true;
    }));

    rep.checks.push_back(run_check("cost-tail-agreement", [&](std::string& detail) {
        // Tails of the two-face construction: m = sum binom(n_i, k-1) over
        // i >= 2 must reproduce c_p^k(m) as the sum of binom(n_i, p-1).
        for (int k = 3; k <= R.cost_k_max; ++k)
            for (int p = 2; p < k; ++p)
                for (long long m = 1; m <= R.cost_m_max; m += 7) {
                    CascadeRep tail = kk_rep(m, k - 1);
                    bool all_k1 = true;
                    Int expect = 0, val = 0;
                    for (const CascadeTerm& t : tail.terms) {
                        if (t.bottom != k - 1) { all_k1 = false; break; }
                        expect += binom(t.top, p - 1);
                        val += binom(t.top, k - 1);
                    }
                    if (!all_k1) continue;  // tail leaves the k-1 level; not a construction tail
                    if (c_cost(val, k, p) != expect) {
                        detail = "c_cost m=" + std::to_string(m);
                        return false;
                    }
                }
        for (int r = 3; r <= R.ceiling_r_max; ++r)
            for (int k = 3; k <= std::min(r, R.cost_k_max); ++k)
                for (int p = 2; p < k; ++p)
                    for (long long m = 1; m <= R.cost_m_max / 3; m += 5) {
                        CascadeRep tail = color_rep(m, k - 1, r - 1);
                        bool all_k1 = true;
                        Int expect = 0, val = 0;
                        for (const CascadeTerm& t : tail.terms) {
                            if (t.bottom != k - 1 || t.sub != r - 1) { all_k1 = false; break; }
                            expect += turan_count(t.top, p - 1, r - 1);
                            val += turan_count(t.top, k - 1, r - 1);
                        }
                        if (!all_k1) continue;
                        if (d_cost(val, k, p, r) != expect) {
                            detail = "d_cost m=" + std::to_string(m);
                            return false;
                        }
                    }
        return true;
    }));

    rep.checks.push_back(run_check("cost-ceilings", [&](std::string& detail) {
        for (int k = 3; k <= R.ceiling_k_max; ++k)
            for (int p = 2; p < k; ++p)
                for (long long m = 0; m <= R.ceiling_m_max; ++m)
                    if (!c_cost_upper_holds(c_cost(m, k, p), m, k, p)) {
                        detail = "c m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                 " p=" + std::to_string(p);
                        return false;
                    }
        for (int r = 3; r <= R.ceiling_r_max; ++r)
            for (int k = 3; k <= std::min(r, R.ceiling_k_max); ++k)
                for (int p = 2; p < k; ++p)
                    for (long long m = 0; m <= R.ceiling_m_max / 2; ++m)
                        if (!d_cost_upper_holds(d_cost(m, k, p, r), m, k, p, r)) {
                            detail = "d m=" + std::to_string(m);
                            return false;
                        }
        return true;
    }));

    rep.checks.push_back(run_check("ffk-dominates-kk", [&](std::string& detail) {
        // The colored bound should be at least the plain shadow bound.  This
        // is a test, not an axiom: a counterexample is flagged, not silenced.
        for (int k = 2; k <= 4; ++k)
            for (int p = 1; p < k; ++p)
                for (int r = k; r <= 6; ++r)
                    for (long long m = 1; m <= 500; ++m)
                        if (ffk_bound(m, k, p, r) < kk_shadow(m, k, p)) {
                            detail = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                     " p=" + std::to_string(p) + " r=" + std::to_string(r);
                            return false;
                        }
        return true;
    }));

    rep.checks.push_back(run_check("equal-vertices-random-multipartite",
                                   [&](std::string& detail) {
        std::mt19937 rng(20240 + 7);
        for (int trial = 0; trial < R.random_trials; ++trial) {
            int d = 2 + static_cast<int>(rng() % 4);
            std::vector<Int> parts;
            for (int i = 0; i < d; ++i) parts.push_back(1 + static_cast<int>(rng() % 9));
            std::sort(parts.begin(), parts.end(), std::greater<Int>());
            for (int k = 2; k <= d; ++k)
                for (int p = 1; p < k; ++p) {
                    Int m = multipartite_count(parts, k);
                    Int fp = multipartite_count(parts, p);
                    if (m == 0) continue;
                    if (!equal_vertices_bound_holds(fp, d, k, p, m)) {
                        std::ostringstream os;
                        os << "d=" << d << " k=" << k << " p=" << p;
                        detail = os.str();
                        return false;
                    }
                }
        }
        return true;
    }));

    rep.checks.push_back(run_check("golden-flag-bounds", [&](std::string& detail) {
        // Every constructed flag complex obeys the two-branch lower bound and
        // the colored inequalities at r = d (consecutive face numbers).
        std::vector<FaceVector> targets;
        targets.push_back(FaceVector{{Int(1), Int(100), Int(1000), Int(2000)}});
        targets.push_back(FaceVector{{Int(1), Int(62), Int(1161), Int(5832)}});
        targets.push_back(FaceVector{{Int(1), Int(6), Int(9), Int(4)}});
        for (const FaceVector& t : targets) {
            ConstructionResult res = construct_main(t);
            if (!res.plan.success()) {
                detail = "construction failed unexpectedly";
                return false;
            }
            int d = t.dim_plus_one();
            for (int k = 3; k <= d; ++k)
                for (int p = 1; p < k; ++p) {
                    auto b = flag_lower_bound(t.f(k), k, p);
                    if (b && t.f(p) < b->value) {
                        detail = "flag bound violated";
                        return false;
                    }
                }
            for (int k = 2; k <= d; ++k)
                if (t.f(k - 1) < ffk_bound(t.f(k), k, k - 1, d)) {
                    detail = "ffk conformance violated";
                    return false;
                }
        }
        return true;
    }));

    return rep;
}

}  // namespace flagforge
