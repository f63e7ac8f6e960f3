#include "flagforge/combinatorics.hpp"

#include <stdexcept>

namespace flagforge {

Int TuranParts::total() const {
    Int s = 0;
    for (const Int& x : sizes) s += x;
    return s;
}

Int binom(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int r = 1;
    for (Int i = 1; i <= kk; ++i) {
        r *= (n - kk + i);
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

TuranParts turan_parts(const Int& n, int r) {
    if (r < 1) throw std::invalid_argument("turan_parts: r must be >= 1");
    if (n < 0) throw std::invalid_argument("turan_parts: n must be >= 0");
    Int p = n / r;
    Int q = n % r;
    if (q == 0 && n > 0) {  // convention 0 < q <= r
        p -= 1;
        q = r;
    }
    TuranParts out;
    out.sizes.reserve(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) out.sizes.push_back(Int(i) < q ? p + 1 : p);
    return out;
}

Int turan_count(const Int& n, const Int& k, int r) {
    if (k < 0 || n < 0) return 0;
    if (k == 0) return 1;
    if (k > r || k > n) return 0;
    // explicit formula with n = p*r + q, 0 <= q < r
    Int p = n / r;
    Int q = n % r;
    Int total = 0;
    for (Int i = 0; i <= q; ++i) {
        Int kk = k - i;
        if (kk < 0) break;
        Int term = binom(q, i) * binom(Int(r) - i, kk);
        if (term == 0) continue;
        if (p == 0) {
            if (kk != 0) continue;  // p^0 = 1, p^j = 0 for j > 0
            total += term;
        } else {
            total += term * pow_int(p, kk.convert_to<long long>());
        }
    }
    return total;
}

Int multipartite_count(const std::vector<Int>& parts, const Int& k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    long long kk = k.convert_to<long long>();
    if (kk > static_cast<long long>(parts.size())) return 0;
    // e_k via the usual one-row DP over parts
    std::vector<Int> e(static_cast<size_t>(kk) + 1, 0);
    e[0] = 1;
    for (const Int& a : parts) {
        for (long long j = kk; j >= 1; --j)
            e[static_cast<size_t>(j)] += a * e[static_cast<size_t>(j) - 1];
    }
    return e[static_cast<size_t>(kk)];
}

Int binom_floor_top(const Int& m, int k) {
    if (k < 1) throw std::invalid_argument("binom_floor_top: k must be >= 1");
    if (m < 0) throw std::invalid_argument("binom_floor_top: m must be >= 0");
    // binom(n,k) is strictly increasing in n for n >= k; start below k-1
    // so the answer may report binom = 0 tops only when m = 0 cannot happen
    // here (callers pass m >= 1 for cascade steps, but m = 0 is allowed and
    // yields k-1, the largest n with binom(n,k) = 0 <= 0 < binom(k,k) = 1).
    Int lo = Int(k) - 1, hi = Int(k);
    while (binom(hi, k) <= m) hi *= 2;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (binom(mid, k) <= m) lo = mid; else hi = mid - 1;
    }
    return lo;
}

Int turan_floor_top(const Int& m, int k, int r) {
    if (k < 1 || r < k) throw std::invalid_argument("turan_floor_top: need r >= k >= 1");
    if (m < 0) throw std::invalid_argument("turan_floor_top: m must be >= 0");
    Int lo = Int(k) - 1, hi = Int(k);
    while (turan_count(hi, k, r) <= m) hi *= 2;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (turan_count(mid, k, r) <= m) lo = mid; else hi = mid - 1;
    }
    return lo;
}

}  // namespace flagforge
