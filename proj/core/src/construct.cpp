#include "flagforge/construct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace flagforge {

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

Real nth_root(const Real& v, int n) {
    using boost::multiprecision::pow;
    if (v <= 0) return Real(0);
    return pow(v, Real(1) / n);
}

Real real_elementary_symmetric(const std::vector<Real>& vals, int k) {
    if (k < 0) return Real(0);
    if (k == 0) return Real(1);
    if (k > static_cast<int>(vals.size())) return Real(0);
    std::vector<Real> e(static_cast<size_t>(k) + 1, Real(0));
    e[0] = 1;
    for (const Real& a : vals)
        for (int j = k; j >= 1; --j)
            e[static_cast<size_t>(j)] += a * e[static_cast<size_t>(j) - 1];
    return e[static_cast<size_t>(k)];
}

}  // namespace

PairFeasibility pair_extra_vertices(const Int& n0, int level, const Int& n_prev,
                                    const Int& n_cur, const Int& rem_budget) {
    PairFeasibility pf;
    if (rem_budget < 1 || level < 3) return pf;  // nothing to pair
    pf.q = turan_floor_top(rem_budget, level - 2, level - 2);
    Int cap2 = n0 - n0 / level - (n0 + 1) / level;
    pf.floor_lhs = cap2 + pf.q;
    pf.floor_rhs = n_prev - n_prev / (level - 1) + n_cur - n_cur / (level - 1);
    if (pf.floor_lhs >= pf.floor_rhs) {
        pf.p = pf.q;
    } else if (n0 + pf.q < n_prev + n_cur) {
        pf.p = -1;
    } else {
        // gap between the two stated conditions: the largest overlap p <= q
        // satisfying the floor inequality would do, but the inequality only
        // gets harder as the overlap shrinks, so no such p exists
        pf.middle_zone = true;
        pf.p = -1;
    }
    return pf;
}

namespace {

struct LinkPlacement {
    // per 0-based stage color, ascending vertex ids
    std::vector<std::vector<int>> sel;
};

// Pick the base vertices an extra vertex is adjacent to.  The link is a
// balanced Turan graph over all stage colors but excl (1-based); when
// overlap >= 0 the selection must meet the previous extra's selection in
// exactly `overlap` vertices arranged as a balanced Turan graph over the
// colors both extras use.
std::optional<LinkPlacement> place_link(const std::vector<std::vector<int>>& base_by_color,
                                        int r_colors, const Int& n, int excl1,
                                        const Int& overlap,
                                        const std::vector<std::vector<int>>* prev_sel,
                                        int prev_excl1) {
    int excl = excl1 - 1;
    std::vector<int> avail;
    for (int c = 0; c < r_colors; ++c)
        if (c != excl) avail.push_back(c);
    TuranParts link_parts = turan_parts(n, r_colors - 1);

    if (overlap < 0 || prev_sel == nullptr) {
        LinkPlacement out;
        out.sel.resize(static_cast<size_t>(r_colors));
        for (size_t t = 0; t < avail.size(); ++t) {
            long long want = to_ll(link_parts.sizes[t]);
            const auto& pool = base_by_color[static_cast<size_t>(avail[t])];
            if (want > static_cast<long long>(pool.size())) return std::nullopt;
            out.sel[static_cast<size_t>(avail[t])].assign(pool.begin(), pool.begin() + want);
        }
        return out;
    }

    // paired placement
    int special = prev_excl1 - 1;  // the previous extra skipped this color
    std::vector<int> common;
    for (int c = 0; c < r_colors; ++c)
        if (c != excl && c != special) common.push_back(c);
    int cc = static_cast<int>(common.size());
    if (cc < 1 || cc > 30) return std::nullopt;

    // the special color takes the smallest link part
    std::vector<Int> csizes(link_parts.sizes.begin(), link_parts.sizes.end() - 1);
    Int special_size = link_parts.sizes.back();
    TuranParts ov = turan_parts(overlap, cc);

    long long loA = csizes.empty() ? 0 : to_ll(csizes.back());
    int bigsA = 0;
    for (const Int& s : csizes)
        if (to_ll(s) > loA) ++bigsA;
    long long loO = to_ll(ov.sizes.back());
    int bigsO = 0;
    for (const Int& s : ov.sizes)
        if (to_ll(s) > loO) ++bigsO;

    if (special_size > Int(base_by_color[static_cast<size_t>(special)].size()))
        return std::nullopt;

    for (int maskA = 0; maskA < (1 << cc); ++maskA) {
        if (std::popcount(static_cast<unsigned>(maskA)) != bigsA) continue;
        for (int maskO = 0; maskO < (1 << cc); ++maskO) {
            if (std::popcount(static_cast<unsigned>(maskO)) != bigsO) continue;
            bool ok = true;
            for (int t = 0; t < cc && ok; ++t) {
                int c = common[static_cast<size_t>(t)];
                long long s = loA + ((maskA >> t) & 1);
                long long o = loO + ((maskO >> t) & 1);
                long long prev_s =
                    static_cast<long long>((*prev_sel)[static_cast<size_t>(c)].size());
                long long cap =
                    static_cast<long long>(base_by_color[static_cast<size_t>(c)].size());
                if (o > s || o > prev_s || prev_s + s - o > cap) ok = false;
            }
            if (!ok) continue;
            LinkPlacement out;
            out.sel.resize(static_cast<size_t>(r_colors));
            const auto& spool = base_by_color[static_cast<size_t>(special)];
            out.sel[static_cast<size_t>(special)].assign(
                spool.begin(), spool.begin() + to_ll(special_size));
            for (int t = 0; t < cc; ++t) {
                int c = common[static_cast<size_t>(t)];
                long long s = loA + ((maskA >> t) & 1);
                long long o = loO + ((maskO >> t) & 1);
                const auto& prev = (*prev_sel)[static_cast<size_t>(c)];
                const auto& pool = base_by_color[static_cast<size_t>(c)];
                auto& dst = out.sel[static_cast<size_t>(c)];
                dst.assign(prev.end() - o, prev.end());  // overlap: tail of prev's block
                for (size_t idx = 0; idx < pool.size() &&
                                     static_cast<long long>(dst.size()) < s; ++idx) {
                    int v = pool[idx];
                    if (!std::binary_search(prev.begin(), prev.end(), v))
                        dst.push_back(v);
                }
                std::sort(dst.begin(), dst.end());
                if (static_cast<long long>(dst.size()) != s) return std::nullopt;
            }
            return out;
        }
    }
    return std::nullopt;
}

struct StageBuildInput {
    int r_colors = 0;
    int k_card = 0;
    Int m0 = 0;
    bool pairing = false;
    bool balanced_base = true;
    Int n0_total = 0;
};

// Greedy extra-vertex loop shared by construct_dim and the main stages.
bool build_stage_extras(VertexColoredGraph& g,
                        const std::vector<std::vector<int>>& base_by_color,
                        const StageBuildInput& in,
                        std::vector<StageExtraTrace>& out, std::string& err) {
    Int m_prev = in.m0;
    std::vector<std::vector<int>> prev_sel;
    int prev_excl = -1, prev_vid = -1;
    Int prev_n = -1;
    int i = 0;
    while (m_prev > 0) {
        ++i;
        if (in.r_colors < 2) {
            err = "single-color stage cannot carry extra vertices";
            return false;
        }
        Int n_i = turan_floor_top(m_prev, in.k_card - 1, in.r_colors - 1);
        Int rem = m_prev - turan_count(n_i, in.k_card - 1, in.r_colors - 1);
        int excl = in.pairing ? ((i % 2 == 1) ? in.r_colors : in.r_colors - 1)
                              : in.r_colors;
        StageExtraTrace tr;
        tr.n = n_i;
        Int p = -1;
        std::optional<LinkPlacement> placed;
        if (in.pairing && i >= 2 && in.k_card >= 3 && rem >= 1) {
            Int q = turan_floor_top(rem, in.k_card - 2, in.r_colors - 2);
            tr.q = q;
            if (in.balanced_base) {
                // decision by the paper's floor inequality (the budget q here
                // uses bottoms k-2 rather than level-2 when k < r)
                Int cap2 = in.n0_total - in.n0_total / in.r_colors -
                           (in.n0_total + 1) / in.r_colors;
                Int rhs = prev_n - prev_n / (in.r_colors - 1) + n_i -
                          n_i / (in.r_colors - 1);
                if (cap2 + q >= rhs) {
                    p = q;
                } else if (in.n0_total + q < prev_n + n_i) {
                    p = -1;
                } else {
                    // middle zone: the inequality grows with the overlap, so
                    // no overlap <= q can satisfy it either
                    tr.middle_zone = true;
                    p = -1;
                }
                if (p >= 0) {
                    placed = place_link(base_by_color, in.r_colors, n_i, excl, p,
                                        &prev_sel, prev_excl);
                    if (!placed)
                        throw std::logic_error(
                            "paired link placement failed despite the floor inequality");
                }
            } else {
                // uneven base: pair exactly when a per-color placement exists
                placed = place_link(base_by_color, in.r_colors, n_i, excl, q,
                                    &prev_sel, prev_excl);
                if (placed) p = q;
            }
        }
        if (!placed) {
            p = -1;
            placed = place_link(base_by_color, in.r_colors, n_i, excl, Int(-1),
                                nullptr, 0);
            if (!placed) {
                err = "link capacity exceeded while placing an extra vertex";
                return false;
            }
        }
        tr.p = p;

        if (in.balanced_base) {
            // slack condition: otherwise n0 would have been larger
            if (n_i >= in.n0_total - in.n0_total / in.r_colors)
                throw std::logic_error("extra-vertex link exceeds the stage slack");
        }

        int vid = g.add_vertex(excl);
        for (const auto& ids : placed->sel)
            for (int u : ids) g.add_edge(vid, u);
        if (p >= 0) {
            g.add_edge(vid, prev_vid);
            Int commons = 0;
            for (int c = 0; c < in.r_colors; ++c) {
                const auto& a = placed->sel[static_cast<size_t>(c)];
                const auto& b = prev_sel[static_cast<size_t>(c)];
                for (int v : a)
                    if (std::binary_search(b.begin(), b.end(), v)) ++commons;
            }
            if (commons != p)
                throw std::logic_error("paired overlap does not match the planned p_i");
        }

        Int m_next = rem - (p >= 0 ? turan_count(p, in.k_card - 2, in.r_colors - 2)
                                   : Int(0));
        if (!(m_next < m_prev))
            throw std::logic_error("stage budget failed to decrease");
        m_prev = m_next;
        prev_sel = placed->sel;
        prev_excl = excl;
        prev_vid = vid;
        prev_n = n_i;
        out.push_back(tr);
    }
    return true;
}

// Closed-form ledger of one stage complex: base counts plus the extra-vertex
// and paired-overlap contributions, for cardinalities 0..cap.
FaceVector stage_ledger(const std::vector<Int>& parts, int r_colors, int cap,
                        const std::vector<StageExtraTrace>& extras) {
    FaceVector f;
    f.entries.assign(static_cast<size_t>(cap) + 1, 0);
    f.entries[0] = 1;
    for (int t = 1; t <= cap; ++t) {
        Int v = multipartite_count(parts, t);
        for (const StageExtraTrace& e : extras) {
            v += turan_count(e.n, Int(t) - 1, r_colors - 1);
            if (e.p >= 0) v += turan_count(e.p, Int(t) - 2, r_colors - 2);
        }
        f.entries[static_cast<size_t>(t)] = v;
    }
    return f;
}

}  // namespace

ConstructionResult construct_two_face(int k, int p, const Int& m, const Int& q) {
    if (!(k > p && p >= 1) || m < 1 || q < 1)
        throw std::invalid_argument("construct_two_face: need k > p >= 1, m >= 1, q >= 1");
    ConstructionResult res;
    ConstructionPlan& plan = res.plan;
    plan.kind = "two_face";
    plan.k = k;
    plan.p = p;
    plan.m = m;
    plan.q = q;

    Int n0 = binom_floor_top(m, k);
    Int rem = m - binom(n0, k);
    std::vector<Int> links;
    while (rem > 0) {
        Int ni = binom_floor_top(rem, k - 1);
        links.push_back(ni);
        rem -= binom(ni, k - 1);
    }

    Int f_p = binom(n0, p);
    for (const Int& ni : links) f_p += binom(ni, p - 1);

    StageTrace st;
    st.level = k;
    st.n0 = n0;
    st.target_m = m;
    st.m0 = m - binom(n0, k);
    for (const Int& ni : links) {
        StageExtraTrace tr;
        tr.n = ni;
        st.extras.push_back(tr);
    }

    if (f_p > q) {
        plan.stages.push_back(st);
        plan.failure = ConstructionFailure{p, f_p, q, 1, "overshoot"};
        return res;
    }
    Int pendants = q - f_p;
    plan.pendant_vertices = pendants;

    VertexColoredGraph& g = res.graph;
    long long base = to_ll(n0);
    for (long long v = 0; v < base; ++v) g.add_vertex(static_cast<int>(v) + 1);
    for (long long u = 0; u < base; ++u)
        for (long long v = u + 1; v < base; ++v)
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
    int extra_color = static_cast<int>(base) + 1;
    for (const Int& ni : links) {
        int vid = g.add_vertex(extra_color);
        for (long long u = 0; u < to_ll(ni); ++u) g.add_edge(vid, static_cast<int>(u));
    }
    for (Int t = 0; t < pendants; ++t) {
        int vid = g.add_vertex(extra_color);
        for (int u = 0; u < p - 1; ++u) g.add_edge(vid, u);
    }

    // closed-form ledger: binomial base, binomial links, one card-p face per pendant
    FaceVector led;
    led.entries.assign(static_cast<size_t>(k) + 1, 0);
    led.entries[0] = 1;
    for (int t = 1; t <= k; ++t) {
        Int v = binom(n0, t);
        for (const Int& ni : links) v += binom(ni, t - 1);
        v += pendants * binom(p - 1, t - 1);
        led.entries[static_cast<size_t>(t)] = v;
    }
    st.gamma_f = led;
    st.delta_f = led;
    st.new_vertices = g.vertex_count();
    plan.stages.push_back(st);

    FaceVector brute = clique_f_vector(g, k);
    if (brute.f(k) != m || brute.f(p) != q)
        throw std::logic_error("two-face construction fails brute-force verification");
    return res;
}

ConstructionResult construct_dim(int r, int k, int p, const Int& m, const Int& q,
                                 bool pairing) {
    if (!(r >= k && k > p && p >= 1) || m < 1 || q < 1)
        throw std::invalid_argument("construct_dim: need r >= k > p >= 1, m >= 1, q >= 1");
    ConstructionResult res;
    ConstructionPlan& plan = res.plan;
    plan.kind = "dim";
    plan.k = k;
    plan.p = p;
    plan.r = r;
    plan.m = m;
    plan.q = q;
    plan.pairing = pairing;

    Int n0 = turan_floor_top(m, k, r);
    TuranParts parts = turan_parts(n0, r);

    VertexColoredGraph& g = res.graph;
    std::vector<std::vector<int>> base_by_color(static_cast<size_t>(r));
    for (int c = 0; c < r; ++c) {
        long long sz = to_ll(parts.sizes[static_cast<size_t>(c)]);
        for (long long t = 0; t < sz; ++t)
            base_by_color[static_cast<size_t>(c)].push_back(g.add_vertex(c + 1));
    }
    g.declare_colors(r);
    int nb = g.vertex_count();
    for (int u = 0; u < nb; ++u)
        for (int v = u + 1; v < nb; ++v)
            if (g.color(u) != g.color(v)) g.add_edge(u, v);

    StageTrace st;
    st.level = r;
    st.parts = parts.sizes;
    st.n0 = n0;
    st.target_m = m;
    st.m0 = m - turan_count(n0, k, r);

    StageBuildInput in;
    in.r_colors = r;
    in.k_card = k;
    in.m0 = st.m0;
    in.pairing = pairing;
    in.balanced_base = true;
    in.n0_total = n0;
    std::string err;
    if (!build_stage_extras(g, base_by_color, in, st.extras, err)) {
        plan.stages.push_back(st);
        plan.failure = ConstructionFailure{k, m, m, 1, err};
        return res;
    }

    FaceVector pre = stage_ledger(parts.sizes, r, k, st.extras);
    Int f_p = pre.f(p);
    if (f_p > q) {
        st.gamma_f = pre;
        st.delta_f = pre;
        plan.stages.push_back(st);
        plan.failure = ConstructionFailure{p, f_p, q, 1, "overshoot"};
        res.graph = VertexColoredGraph{};
        return res;
    }
    Int pendants = q - f_p;
    plan.pendant_vertices = pendants;
    for (Int t = 0; t < pendants; ++t) {
        int vid = g.add_vertex(p);  // adjacent only to colors 1..p-1
        for (int c = 0; c < p - 1; ++c)
            g.add_edge(vid, base_by_color[static_cast<size_t>(c)].front());
    }

    FaceVector led = pre;
    for (int t = 1; t <= k; ++t)
        led.entries[static_cast<size_t>(t)] += pendants * binom(p - 1, t - 1);
    st.gamma_f = led;
    st.delta_f = led;
    st.new_vertices = g.vertex_count();
    plan.stages.push_back(st);

    FaceVector brute = clique_f_vector(g, k);
    if (brute.f(k) != m || brute.f(p) != q)
        throw std::logic_error("dim construction fails brute-force verification");
    return res;
}

Allocation balanced_allocation(int) {
    Allocation a;
    a.balanced_mode = true;
    return a;
}

Allocation explicit_allocation(const std::vector<Int>& top_parts) {
    Allocation a;
    a.balanced_mode = false;
    int d = static_cast<int>(top_parts.size());
    std::vector<Int> sorted = top_parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
    a.suggested.resize(static_cast<size_t>(d));
    a.continuous.resize(static_cast<size_t>(d));
    for (int j = 1; j <= d; ++j) {
        auto& lvl = a.suggested[static_cast<size_t>(j) - 1];
        auto& cont = a.continuous[static_cast<size_t>(j) - 1];
        lvl.assign(sorted.begin(), sorted.begin() + j);
        for (const Int& v : lvl) cont.push_back(to_real(v));
    }
    a.note = "user-specified top-level parts";
    return a;
}

Allocation allocate_parts(const FaceVector& target) {
    int d = target.dim_plus_one();
    if (d < 1 || target.entries[0] != 1)
        throw std::invalid_argument("allocate_parts: malformed target");
    Allocation a;
    a.continuous.assign(static_cast<size_t>(d), {});

    // level-wise equal allocation, solved top down
    std::vector<Real> x(static_cast<size_t>(d) + 1, Real(0));
    auto forced_count = [&](int j) {
        // faces of cardinality j whose largest color exceeds j
        Real s = 0;
        for (int M = j + 1; M <= d; ++M) {
            const auto& lvl = a.continuous[static_cast<size_t>(M) - 1];
            std::vector<Real> head(lvl.begin(), lvl.end() - 1);
            s += lvl.back() * real_elementary_symmetric(head, j - 1);
        }
        return s;
    };
    x[static_cast<size_t>(d)] = nth_root(to_real(target.f(d)), d);
    a.continuous[static_cast<size_t>(d) - 1].assign(static_cast<size_t>(d),
                                                    x[static_cast<size_t>(d)]);
    int violation = 0;
    for (int j = d - 1; j >= 1; --j) {
        Real rem = to_real(target.f(j)) - forced_count(j);
        if (rem < 0) {
            a.monotone_ok = false;
            a.note = "level budget already exceeded by higher levels";
            rem = 0;
        }
        x[static_cast<size_t>(j)] = nth_root(rem, j);
        a.continuous[static_cast<size_t>(j) - 1].assign(static_cast<size_t>(j),
                                                        x[static_cast<size_t>(j)]);
        if (x[static_cast<size_t>(j)] < x[static_cast<size_t>(j) + 1] && violation == 0)
            violation = j;
    }

    if (violation == 0 && a.monotone_ok) {
        a.balanced_mode = true;
        return a;
    }

    // two-block repair: x on the first kk parts of the top level, y on the
    // rest, with the level-kk values tied to x
    int kk = violation + 1;
    if (kk >= d || target.f(d) < 1) {
        a.balanced_mode = true;
        a.monotone_ok = false;
        a.note = "no two-block repair available; falling back to balanced";
        return a;
    }
    a.balanced_mode = false;
    a.repair_k = kk;

    Real cd = to_real(target.f(d));
    Real ck = to_real(target.f(kk));
    auto level_k_count = [&](const Real& xx, const Real& yy) {
        // faces of cardinality kk: all within the first kk colors at level kk,
        // or mixed at the top level
        Real s = boost::multiprecision::pow(xx, kk);
        for (int t = 0; t < kk; ++t) {
            Real cnt = to_real(binom(kk, t) * binom(d - kk, Int(kk) - t));
            if (cnt == 0) continue;
            s += cnt * boost::multiprecision::pow(xx, t) *
                 boost::multiprecision::pow(yy, kk - t);
        }
        return s;
    };
    auto y_of = [&](const Real& xx) {
        return nth_root(cd / boost::multiprecision::pow(xx, kk), d - kk);
    };
    Real lo = nth_root(cd, d);
    Real hi = nth_root(ck, kk);
    if (level_k_count(lo, y_of(lo)) > ck) {
        a.balanced_mode = true;
        a.monotone_ok = false;
        a.note = "repair infeasible: equal-allocation count already exceeds the level budget";
        return a;
    }
    for (int it = 0; it < 300; ++it) {
        Real mid = (lo + hi) / 2;
        if (level_k_count(mid, y_of(mid)) <= ck) lo = mid; else hi = mid;
    }
    Real xx = lo, yy = y_of(lo);

    // prefer exact integers when the constraints factor
    {
        using boost::multiprecision::floor;
        for (long long dx = 0; dx <= 1; ++dx)
            for (long long dy = 0; dy <= 1; ++dy) {
                Int xi = Int(floor(xx).convert_to<long long>() + dx);
                Int yi = Int(floor(yy).convert_to<long long>() + dy);
                if (xi < 1 || yi < 0) continue;
                Int top = pow_int(xi, kk) * pow_int(yi, d - kk);
                Int lvl = pow_int(xi, kk);
                for (int t = 0; t < kk; ++t)
                    lvl += binom(kk, t) * binom(d - kk, Int(kk) - t) * pow_int(xi, t) *
                           pow_int(yi, kk - t);
                if (top == target.f(d) && lvl == target.f(kk)) {
                    xx = to_real(xi);
                    yy = to_real(yi);
                }
            }
    }

    for (int j = d; j >= kk; --j) {
        auto& lvl = a.continuous[static_cast<size_t>(j) - 1];
        lvl.assign(static_cast<size_t>(j), xx);
        if (j > kk) {
            // tail value at intermediate levels from the level equation
            if (j < d) {
                Real rem = to_real(target.f(j)) - forced_count(j);
                Real zz = (rem <= 0) ? yy
                                     : nth_root(rem / boost::multiprecision::pow(xx, kk),
                                                j - kk);
                if (zz < yy) zz = yy;
                if (zz > xx) { zz = xx; a.monotone_ok = false; }
                for (int c = kk; c < j; ++c) lvl[static_cast<size_t>(c)] = zz;
            } else {
                for (int c = kk; c < d; ++c) lvl[static_cast<size_t>(c)] = yy;
            }
        }
        x[static_cast<size_t>(j)] = xx;
    }
    for (int j = kk - 1; j >= 1; --j) {
        Real rem = to_real(target.f(j)) - forced_count(j);
        if (rem < 0) {
            a.monotone_ok = false;
            rem = 0;
        }
        x[static_cast<size_t>(j)] = nth_root(rem, j);
        a.continuous[static_cast<size_t>(j) - 1].assign(static_cast<size_t>(j),
                                                        x[static_cast<size_t>(j)]);
        if (x[static_cast<size_t>(j)] + Real("1e-40") < x[static_cast<size_t>(j) + 1])
            a.monotone_ok = false;
    }

    a.suggested.resize(static_cast<size_t>(d));
    for (int j = 1; j <= d; ++j) {
        auto& lvl = a.suggested[static_cast<size_t>(j) - 1];
        lvl.clear();
        for (const Real& v : a.continuous[static_cast<size_t>(j) - 1]) {
            Real r = boost::multiprecision::floor(v + Real("0.5"));
            lvl.push_back(Int(r.convert_to<long long>()));
        }
    }
    return a;
}

namespace {

// Grow the stage base from the glue toward the allocator's targets without
// exceeding the stage face budget; parts stay non-increasing.
std::vector<Int> fit_stage_parts(const std::vector<Int>& glue, int level,
                                 const std::vector<Real>& targets, const Int& budget) {
    std::vector<Int> parts(glue);
    parts.resize(static_cast<size_t>(level), 0);
    for (;;) {
        int best = -1;
        Real best_deficit = 0;
        for (int c = 0; c < level; ++c) {
            Int next = parts[static_cast<size_t>(c)] + 1;
            if (c > 0 && next > parts[static_cast<size_t>(c) - 1]) continue;
            Real tgt = (c < static_cast<int>(targets.size())) ? targets[static_cast<size_t>(c)]
                                                              : Real(0);
            Real cap = boost::multiprecision::ceil(tgt) + 1;
            if (to_real(next) > cap) continue;
            std::vector<Int> trial = parts;
            trial[static_cast<size_t>(c)] = next;
            if (multipartite_count(trial, level) > budget) continue;
            Real deficit = tgt - to_real(parts[static_cast<size_t>(c)]);
            if (best < 0 || deficit > best_deficit) {
                best = c;
                best_deficit = deficit;
            }
        }
        if (best < 0) break;
        parts[static_cast<size_t>(best)] += 1;
    }
    return parts;
}

}  // namespace

ConstructionResult construct_main(const FaceVector& target, const Allocation& alloc) {
    int d = target.dim_plus_one();
    if (d < 1 || target.entries.empty() || target.entries[0] != 1)
        throw std::invalid_argument("construct_main: target must be (1, c_1, ..., c_d)");
    ConstructionResult res;
    ConstructionPlan& plan = res.plan;
    plan.kind = "main";
    plan.target = target.entries;
    plan.alloc_mode = alloc.balanced_mode ? "balanced" : "explicit";
    plan.pairing = true;

    for (int j = 1; j <= d; ++j)
        if (target.f(j) < 1) {
            plan.failure = ConstructionFailure{j, target.f(j), 1, d, "nonpositive_target_entry"};
            return res;
        }

    VertexColoredGraph& g = res.graph;
    FaceVector delta;
    delta.entries.assign(static_cast<size_t>(d) + 1, 0);
    delta.entries[0] = 1;
    std::vector<std::vector<int>> prev_base;
    std::vector<Int> prev_parts;

    for (int j = d; j >= 1; --j) {
        StageTrace st;
        st.level = j;

        std::vector<Int> glue_parts;
        std::vector<std::vector<int>> glue_by_color;
        Int have = 0, glue_faces = 0;
        if (j < d) {
            have = delta.f(j);
            if (have > target.f(j)) {
                plan.failure =
                    ConstructionFailure{j, have, target.f(j), j + 1, "budget"};
                res.graph = VertexColoredGraph{};
                return res;
            }
            glue_parts.assign(prev_parts.begin(), prev_parts.begin() + j);
            glue_by_color.assign(prev_base.begin(), prev_base.begin() + j);
            glue_faces = multipartite_count(glue_parts, j);
        }
        Int M = target.f(j) - have + glue_faces;
        st.target_m = M;
        st.glue_parts = glue_parts;
        st.glue_faces = glue_faces;

        std::vector<Int> parts;
        if (j == 1) {
            parts = {M};  // isolated-vertex top-up stage
        } else if (alloc.balanced_mode) {
            Int n0 = turan_floor_top(M, j, j);
            parts = turan_parts(n0, j).sizes;
            for (int c = 0; c < j && j < d; ++c)
                if (parts[static_cast<size_t>(c)] < glue_parts[static_cast<size_t>(c)])
                    throw std::logic_error("balanced stage base cannot contain the glue");
        } else {
            std::vector<Real> targets;
            if (static_cast<int>(alloc.continuous.size()) >= j)
                targets = alloc.continuous[static_cast<size_t>(j) - 1];
            parts = fit_stage_parts(glue_parts, j, targets, M);
        }
        st.parts = parts;
        Int n0_total = 0;
        for (const Int& v : parts) n0_total += v;
        st.n0 = n0_total;
        st.m0 = M - multipartite_count(parts, j);

        // extend the glue to the stage base with fresh vertices
        std::vector<std::vector<int>> base_by_color(static_cast<size_t>(j));
        int old_count = g.vertex_count();
        for (int c = 0; c < j; ++c) {
            auto& lst = base_by_color[static_cast<size_t>(c)];
            if (j < d) lst = glue_by_color[static_cast<size_t>(c)];
            long long want = to_ll(parts[static_cast<size_t>(c)]);
            while (static_cast<long long>(lst.size()) < want) lst.push_back(g.add_vertex(c + 1));
        }
        if (g.declared_colors() < d && j == d) g.declare_colors(d);
        // complete multipartite edges within the stage base
        std::vector<int> base_flat;
        for (const auto& lst : base_by_color) base_flat.insert(base_flat.end(), lst.begin(), lst.end());
        for (size_t a1 = 0; a1 < base_flat.size(); ++a1)
            for (size_t a2 = a1 + 1; a2 < base_flat.size(); ++a2) {
                int u = base_flat[a1], v = base_flat[a2];
                if (g.color(u) != g.color(v) && !g.adjacent(u, v)) g.add_edge(u, v);
            }

        StageBuildInput in;
        in.r_colors = j;
        in.k_card = j;
        in.m0 = st.m0;
        in.pairing = true;
        in.balanced_base = alloc.balanced_mode;
        in.n0_total = n0_total;
        std::string err;
        if (!build_stage_extras(g, base_by_color, in, st.extras, err)) {
            plan.stages.push_back(st);
            plan.failure = ConstructionFailure{j, st.m0, st.m0, j, err};
            res.graph = VertexColoredGraph{};
            return res;
        }

        st.gamma_f = stage_ledger(parts, j, j, st.extras);
        FaceVector next_delta;
        next_delta.entries.assign(static_cast<size_t>(d) + 1, 0);
        next_delta.entries[0] = 1;
        for (int t = 1; t <= d; ++t)
            next_delta.entries[static_cast<size_t>(t)] =
                st.gamma_f.f(t) + delta.f(t) - multipartite_count(glue_parts, t);
        delta = next_delta;
        st.delta_f = delta;
        st.new_vertices = g.vertex_count() - old_count;
        plan.stages.push_back(st);
        prev_base = base_by_color;
        prev_parts = parts;
    }

    for (int t = 1; t <= d; ++t)
        if (delta.f(t) != target.f(t))
            throw std::logic_error("stage ledger does not reproduce the target");

    FaceVector brute = clique_f_vector(g, d);
    brute.entries.resize(static_cast<size_t>(d) + 1, 0);
    for (int t = 1; t <= d; ++t)
        if (brute.f(t) != target.f(t))
            throw std::logic_error("constructed graph fails brute-force verification");
    if (!is_balanced(g))
        throw std::logic_error("constructed complex is not balanced");
    return res;
}

ConstructionResult construct_main(const FaceVector& target) {
    return construct_main(target, allocate_parts(target));
}

HvecResult construct_hvec(const HVector& target) {
    if (target.entries.empty() || target.entries[0] != 1)
        throw std::invalid_argument("construct_hvec: h_0 must be 1");
    for (const Int& v : target.entries)
        if (v < 0) throw std::invalid_argument("construct_hvec: entries must be nonnegative");
    int d = static_cast<int>(target.entries.size()) - 1;

    HvecResult out;
    out.plan.kind = "hvec";
    out.plan.target = target.entries;

    bool all_zero = true;
    for (int i = 1; i <= d; ++i)
        if (target.entries[static_cast<size_t>(i)] != 0) all_zero = false;

    if (all_zero) {
        // empty complex on d colors; the plus-construction is a full simplex
        VertexColoredGraph empty;
        if (d > 0) empty.declare_colors(d);
        out.graph = plus_construction(empty);
        out.plan.alloc_mode = "balanced";
    } else {
        FaceVector ft{target.entries};
        ConstructionResult res = construct_main(ft);
        out.plan = res.plan;
        out.plan.kind = "hvec";
        if (!res.plan.success()) return out;
        out.graph = plus_construction(res.graph);
    }

    FaceVector f = clique_f_vector(out.graph, std::max(d, 1));
    f.entries.resize(static_cast<size_t>(d) + 1, 0);
    out.achieved = f_to_h(f);
    if (!(out.achieved == target))
        throw std::logic_error("plus-construction h-vector does not match the target");
    return out;
}

}  // namespace flagforge
