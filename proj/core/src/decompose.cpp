#include "flagforge/decompose.hpp"

#include <stdexcept>

namespace flagforge {

Int CascadeRep::evaluate() const {
    Int s = 0;
    for (const CascadeTerm& t : terms) {
        if (flavor == Flavor::plain)
            s += binom(t.top, t.bottom);
        else
            s += turan_count(t.top, t.bottom, t.sub);
    }
    return s;
}

Int TwoTermRep::evaluate() const {
    if (!colored) return binom(a, k) + binom(b, k - 1) + m;
    return turan_count(a, k, r) + turan_count(b, k - 1, r - 1) + m;
}

Int FlagRep::evaluate() const {
    Int s = binom(n_k, k);
    if (n_k1) s += binom(*n_k1, k - 1);
    for (const CascadeTerm& t : a_terms) s += binom(t.top, t.bottom);
    return s;
}

CascadeRep kk_rep(const Int& m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("kk_rep: need m >= 1, k >= 1");
    CascadeRep rep;
    rep.flavor = CascadeRep::Flavor::plain;
    rep.value = m;
    Int rem = m;
    int bottom = k;
    while (rem > 0) {
        if (bottom < 1) throw std::logic_error("kk_rep: cascade ran past bottom 1");
        Int top = binom_floor_top(rem, bottom);
        rep.terms.push_back({top, bottom, 0});
        rem -= binom(top, bottom);
        --bottom;
    }
    return rep;
}

CascadeRep color_rep(const Int& m, int k, int r) {
    if (m < 1 || k < 1 || r < k)
        throw std::invalid_argument("color_rep: need m >= 1, r >= k >= 1");
    CascadeRep rep;
    rep.flavor = CascadeRep::Flavor::colored;
    rep.r = r;
    rep.value = m;
    Int rem = m;
    int bottom = k, sub = r;
    while (rem > 0) {
        if (bottom < 1) throw std::logic_error("color_rep: cascade ran past bottom 1");
        Int top = turan_floor_top(rem, bottom, sub);
        rep.terms.push_back({top, bottom, sub});
        rem -= turan_count(top, bottom, sub);
        --bottom;
        --sub;
    }
    return rep;
}

TwoTermRep two_term_rep(const Int& q, int k) {
    if (k < 2) throw std::invalid_argument("two_term_rep: need k >= 2");
    CascadeRep rep = kk_rep(q, k);
    TwoTermRep out;
    out.k = k;
    out.a = rep.terms[0].top;
    if (rep.terms.size() == 1) {
        out.b = Int(k) - 2;  // makes binom(b, k-1) = 0
        out.m = 0;
    } else {
        out.b = rep.terms[1].top;
        out.m = q - binom(out.a, k) - binom(out.b, k - 1);
    }
    return out;
}

TwoTermRep dim_two_term_rep(const Int& q, int k, int r) {
    if (k < 2 || r < k) throw std::invalid_argument("dim_two_term_rep: need r >= k >= 2");
    CascadeRep rep = color_rep(q, k, r);
    TwoTermRep out;
    out.k = k;
    out.colored = true;
    out.r = r;
    out.a = rep.terms[0].top;
    if (rep.terms.size() == 1) {
        out.b = Int(k) - 2;  // turan(k-2, k-1, r-1) = 0 and the gap holds
        out.m = 0;
    } else {
        out.b = rep.terms[1].top;
        out.m = q - turan_count(out.a, k, r) - turan_count(out.b, k - 1, r - 1);
    }
    return out;
}

FlagRep flag_rep(const Int& m, int k) {
    if (m < 1 || k < 3) throw std::invalid_argument("flag_rep: need m >= 1, k >= 3");
    FlagRep out;
    out.k = k;
    out.n_k = binom_floor_top(m, k);
    Int rem = m - binom(out.n_k, k);
    if (rem == 0) return out;
    Int n_k1 = binom_floor_top(rem, k - 1);
    out.n_k1 = n_k1;
    rem -= binom(n_k1, k - 1);
    if (rem == 0) return out;
    CascadeRep tail = kk_rep(rem, k - 1);
    out.a_terms = tail.terms;
    return out;
}

}  // namespace flagforge
