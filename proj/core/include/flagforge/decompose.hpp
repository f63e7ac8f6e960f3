#pragma once

#include <optional>
#include <vector>

#include "flagforge/combinatorics.hpp"

namespace flagforge {

// One summand of a cascade: binom(top, bottom), or turan(top, bottom, sub)
// in the colored flavor; sub is ignored for the plain flavor.
struct CascadeTerm {
    Int top;
    int bottom;
    int sub = 0;
};

// Canonical greedy sum-of-coefficients representation of an integer.
// Plain:   m = sum binom(n_{k-i}, k-i), tops strictly decreasing,
//          last top n_{k-s} >= k-s > 0.
// Colored: m = sum turan(n_{k-i}, k-i, r-i) with the wider gap condition
//          n_{k-i} - floor(n_{k-i}/(r-i)) > n_{k-i-1}.
struct CascadeRep {
    enum class Flavor { plain, colored };
    Flavor flavor = Flavor::plain;
    int r = 0;  // colors at the leading term (colored flavor only)
    std::vector<CascadeTerm> terms;
    Int value = 0;

    Int evaluate() const;
};

// q = binom(a, k) + binom(b, k-1) + m with a > b and binom(b, k-2) > m >= 0.
// Colored flavor replaces binomials by turan coefficients at subscripts
// r, r-1 and tightens the gaps per the colored cascade.
struct TwoTermRep {
    Int a;
    Int b;
    Int m;
    int k = 0;
    bool colored = false;
    int r = 0;

    Int evaluate() const;
};

// m = binom(n_k, k) + binom(n_{k-1}, k-1) + sum binom(a_{k-i}, k-i), the
// two leading Kruskal-Katona terms followed by a cascade re-based one
// bottom lower.  n_k1 is absent (nullopt) when the remainder after the
// leading term is zero; absent terms evaluate to zero.
struct FlagRep {
    Int n_k;
    std::optional<Int> n_k1;
    std::vector<CascadeTerm> a_terms;  // bottoms k-1, k-2, ...
    int k = 0;

    Int evaluate() const;
};

// Unique plain cascade of m at level k (m >= 1, k >= 1).
CascadeRep kk_rep(const Int& m, int k);

// Unique colored cascade of m at level k with r colors (r >= k >= 1, m >= 1).
CascadeRep color_rep(const Int& m, int k, int r);

// Fold the cascade tail into a single remainder; when the cascade has a
// single term, b = k-2 so the middle coefficient vanishes.
TwoTermRep two_term_rep(const Int& q, int k);
TwoTermRep dim_two_term_rep(const Int& q, int k, int r);

// Two leading terms plus a re-based tail cascade (k >= 3).
FlagRep flag_rep(const Int& m, int k);

}  // namespace flagforge
