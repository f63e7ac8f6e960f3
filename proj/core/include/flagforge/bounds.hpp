#pragma once

#include <optional>

#include "flagforge/decompose.hpp"

namespace flagforge {

enum class BoundKind { kk_shadow, kk_chain, ffk, flag_two_branch, equal_vertices };
enum class FlagBranch { simplex_branch, colored_branch };

struct BoundReport {
    BoundKind kind = BoundKind::flag_two_branch;
    Int value = 0;
    std::optional<FlagBranch> branch_taken;
    Int simplex_value = 0;                 // branch 1 (always defined)
    std::optional<Int> colored_value;      // branch 2; absent when n_k - 1 < k
};

// g_p^k(m): Kruskal-Katona lower bound on f_{p-1} given f_{k-1} = m.
Int kk_shadow(const Int& m, int k, int p);

// Chained shadow bound i steps down: sum binom(n_{k-t}, k-t-i) over the
// cascade of m at level k (zero convention for negative bottoms).
Int kk_chain_down(const Int& m, int k, int i);

// Iterated shadow-inverse: max f_{k-1+i} of a complex with f_{k-1} = m.
Int kk_chain_up(const Int& m, int k, int i);

// j_{p,r}^k(m): Frankl-Furedi-Kalai colored lower bound via color_rep.
Int ffk_bound(const Int& m, int k, int p, int r);

// Construction tail cost c_p^k(m): repeatedly strip the largest
// binom(g, k-1) <= m, accumulating binom(g, p-1).
Int c_cost(const Int& m, int k, int p);

// Colored analog d_{p,r}^k(m), with turan coefficients at subscript r-1.
Int d_cost(const Int& m, int k, int p, int r);

// Proved ceilings (Real display values; the _holds variants compare
// exactly in integer arithmetic so the assertions cannot pass spuriously).
Real c_cost_upper(const Int& m, int k, int p);
Real d_cost_upper(const Int& m, int k, int p, int r);
bool c_cost_upper_holds(const Int& c, const Int& m, int k, int p);
bool d_cost_upper_holds(const Int& d, const Int& m, int k, int p, int r);

// Asymptotic constants of the two cost functions.
Real limit_constant_two(int k, int p);
Real limit_constant_dim(int r, int k, int p);

// Two-branch flag lower bound on f_{p-1} given f_{k-1} = m: the smaller of
// the simplex-containing bound (from flag_rep) and the colored bound at
// r = n_k - 1.  Requires k >= 3; callers fall back to kk_shadow below that.
std::optional<BoundReport> flag_lower_bound(const Int& m, int k, int p);

// binom(d,p) * binom(d,k)^(-p/k) * m^(p/k): the balanced-complex bound.
Real equal_vertices_bound(int d, int k, int p, const Int& m);
bool equal_vertices_bound_holds(const Int& f_p, int d, int k, int p, const Int& m);

}  // namespace flagforge
