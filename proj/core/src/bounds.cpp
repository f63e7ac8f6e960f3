#include "flagforge/bounds.hpp"

#include <stdexcept>

namespace flagforge {

namespace {

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

Int kk_shadow(const Int& m, int k, int p) {
    if (m < 1 || k < 2 || p < 1 || p >= k)
        throw std::invalid_argument("kk_shadow: need m >= 1, k >= 2, 1 <= p < k");
    CascadeRep rep = kk_rep(m, k);
    Int s = 0;
    for (const CascadeTerm& t : rep.terms) s += binom(t.top, Int(t.bottom) - (k - p));
    return s;
}

Int kk_chain_down(const Int& m, int k, int i) {
    if (m < 1 || k < 1 || i < 1 || k - i < 1)
        throw std::invalid_argument("kk_chain_down: need m >= 1 and k - i >= 1");
    CascadeRep rep = kk_rep(m, k);
    Int s = 0;
    for (const CascadeTerm& t : rep.terms) s += binom(t.top, Int(t.bottom) - i);
    return s;
}

Int kk_chain_up(const Int& m, int k, int i) {
    if (m < 1 || k < 1 || i < 1)
        throw std::invalid_argument("kk_chain_up: need m >= 1, k >= 1, i >= 1");
    Int cur = m;
    int level = k;
    for (int step = 0; step < i && cur > 0; ++step) {
        CascadeRep rep = kk_rep(cur, level);
        Int next = 0;
        for (const CascadeTerm& t : rep.terms) next += binom(t.top, Int(t.bottom) + 1);
        cur = next;
        ++level;
    }
    return cur;
}

Int ffk_bound(const Int& m, int k, int p, int r) {
    if (m < 1 || k < 2 || p < 1 || p >= k || r < k)
        throw std::invalid_argument("ffk_bound: need m >= 1, r >= k > p >= 1");
    CascadeRep rep = color_rep(m, k, r);
    Int s = 0;
    for (const CascadeTerm& t : rep.terms)
        s += turan_count(t.top, Int(t.bottom) - (k - p), t.sub);
    return s;
}

Int c_cost(const Int& m, int k, int p) {
    if (m < 0 || k < 2 || p < 1 || p >= k)
        throw std::invalid_argument("c_cost: need m >= 0, k > p >= 1");
    Int rem = m, total = 0;
    while (rem > 0) {
        Int g = binom_floor_top(rem, k - 1);
        total += binom(g, p - 1);
        rem -= binom(g, k - 1);
    }
    return total;
}

Int d_cost(const Int& m, int k, int p, int r) {
    if (m < 0 || k < 2 || p < 1 || p >= k || r < k)
        throw std::invalid_argument("d_cost: need m >= 0, r >= k > p >= 1");
    Int rem = m, total = 0;
    while (rem > 0) {
        Int j = turan_floor_top(rem, k - 1, r - 1);
        total += turan_count(j, p - 1, r - 1);
        rem -= turan_count(j, k - 1, r - 1);
    }
    return total;
}

Real c_cost_upper(const Int& m, int k, int p) {
    if (k <= p || p <= 1) throw std::invalid_argument("c_cost_upper: need k > p > 1");
    using boost::multiprecision::pow;
    Real e1 = Real(k - p) / Real(k - 1);
    Real e2 = Real(p - 1) / Real(k - 1);
    return to_real(binom(k - 1, p - 1)) * pow(Real(k + 1) / 2, e1) * pow(to_real(m), e2);
}

Real d_cost_upper(const Int& m, int k, int p, int r) {
    if (k <= p || p <= 1 || r < k)
        throw std::invalid_argument("d_cost_upper: need r >= k > p > 1");
    using boost::multiprecision::pow;
    Real e = Real(p - 1) / Real(k - 1);
    return to_real(binom(r - 1, p - 1)) * pow(to_real(binom(r - 1, k - 1)), -e) *
           pow(Real(2), k - 1) * pow(to_real(m), e);
}

bool c_cost_upper_holds(const Int& c, const Int& m, int k, int p) {
    // c <= binom(k-1,p-1) * ((k+1)/2)^((k-p)/(k-1)) * m^((p-1)/(k-1))
    // raised to the (k-1)-th power; both sides nonnegative, so exact.
    Int lhs = pow_int(c, k - 1) * pow_int(2, k - p);
    Int rhs = pow_int(binom(k - 1, p - 1), k - 1) * pow_int(k + 1, k - p) *
              pow_int(m, p - 1);
    return lhs <= rhs;
}

bool d_cost_upper_holds(const Int& d, const Int& m, int k, int p, int r) {
    Int lhs = pow_int(d, k - 1) * pow_int(binom(r - 1, k - 1), p - 1);
    Int rhs = pow_int(binom(r - 1, p - 1), k - 1) *
              pow_int(2, (k - 1) * (k - 1)) * pow_int(m, p - 1);
    return lhs <= rhs;
}

Real limit_constant_two(int k, int p) {
    if (k <= p || p <= 1) throw std::invalid_argument("limit_constant_two: need k > p > 1");
    using boost::multiprecision::pow;
    Real e = Real(p - 1) / Real(k - 1);
    return pow(to_real(factorial(k - 1)), e) / to_real(factorial(p - 1));
}

Real limit_constant_dim(int r, int k, int p) {
    if (k <= p || p <= 1 || r < k)
        throw std::invalid_argument("limit_constant_dim: need r >= k > p > 1");
    using boost::multiprecision::pow;
    Real e = Real(p - 1) / Real(k - 1);
    return to_real(binom(r - 1, p - 1)) * pow(to_real(binom(r - 1, k - 1)), -e);
}

std::optional<BoundReport> flag_lower_bound(const Int& m, int k, int p) {
    if (k < 3) return std::nullopt;
    if (m < 1 || p < 1 || p >= k)
        throw std::invalid_argument("flag_lower_bound: need m >= 1, 1 <= p < k");
    BoundReport rep;
    rep.kind = BoundKind::flag_two_branch;

    FlagRep fr = flag_rep(m, k);
    Int b1 = binom(fr.n_k, p);
    if (fr.n_k1) b1 += binom(*fr.n_k1, p - 1);
    for (const CascadeTerm& t : fr.a_terms)
        b1 += binom(t.top, Int(t.bottom) - (k - p));
    rep.simplex_value = b1;

    Int r_colors = fr.n_k - 1;
    if (r_colors >= k) {
        int r = r_colors.convert_to<int>();
        CascadeRep cr = color_rep(m, k, r);
        Int b2 = 0;
        for (const CascadeTerm& t : cr.terms)
            b2 += turan_count(t.top, Int(t.bottom) - (k - p), t.sub);
        rep.colored_value = b2;
    }

    if (rep.colored_value && *rep.colored_value < rep.simplex_value) {
        rep.value = *rep.colored_value;
        rep.branch_taken = FlagBranch::colored_branch;
    } else {
        rep.value = rep.simplex_value;
        rep.branch_taken = FlagBranch::simplex_branch;
    }
    return rep;
}

Real equal_vertices_bound(int d, int k, int p, const Int& m) {
    if (p < 1 || p > k || k > d || m < 0)
        throw std::invalid_argument("equal_vertices_bound: need 1 <= p <= k <= d, m >= 0");
    using boost::multiprecision::pow;
    Real e = Real(p) / Real(k);
    return to_real(binom(d, p)) * pow(to_real(binom(d, k)), -e) * pow(to_real(m), e);
}

bool equal_vertices_bound_holds(const Int& f_p, int d, int k, int p, const Int& m) {
    // f_p >= binom(d,p) * binom(d,k)^(-p/k) * m^(p/k), both sides to the k-th power.
    Int lhs = pow_int(f_p, k) * pow_int(binom(d, k), p);
    Int rhs = pow_int(binom(d, p), k) * pow_int(m, p);
    return lhs >= rhs;
}

}  // namespace flagforge
