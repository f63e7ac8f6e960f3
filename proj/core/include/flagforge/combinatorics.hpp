#pragma once

#include <vector>

#include "flagforge/numeric.hpp"

namespace flagforge {

// Vertices-per-part of a balanced (Turan) partition, largest parts first.
struct TuranParts {
    std::vector<Int> sizes;

    Int total() const;
    int count() const { return static_cast<int>(sizes.size()); }
};

// Binomial coefficient with the zero conventions used throughout:
// binom(n, k) = 0 whenever k < 0 or k > n (covers n > 0 > k and n < 0).
Int binom(const Int& n, const Int& k);

// Balanced partition of n vertices into r parts: with n = p*r + q and
// 0 < q <= r, there are q parts of size p+1 and r-q parts of size p.
TuranParts turan_parts(const Int& n, int r);

// Number of k-cliques of the Turan graph T_{n,r}, via the explicit sum
//   sum_{i=0..q} binom(q,i) * binom(r-i,k-i) * p^{k-i},  n = p*r + q, 0 <= q < r.
// Conventions: 1 when k == 0 and n >= 0; 0 when k < 0, n < 0, k > r or k > n.
Int turan_count(const Int& n, const Int& k, int r);

// k-cliques of the complete multipartite graph with the given part sizes:
// the elementary symmetric polynomial e_k of the sizes.
Int multipartite_count(const std::vector<Int>& parts, const Int& k);

// Largest n with binom(n, k) <= m (m >= 0, k >= 1).  Greedy cascade step.
Int binom_floor_top(const Int& m, int k);

// Largest n with turan_count(n, k, r) <= m (m >= 0, r >= k >= 1).
Int turan_floor_top(const Int& m, int k, int r);

}  // namespace flagforge
