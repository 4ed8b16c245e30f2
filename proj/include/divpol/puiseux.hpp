#pragma once

#include <deque>
#include <functional>
#include <vector>

#include "tower.hpp"
#include "unipoly.hpp"
#include "errors.hpp"

namespace divpol {

// characteristic of the base field
inline long field_char(const Rat&) { return 0; }
inline long field_char(const ZqElem& x) { return mpz_get_si(x.ctx()->p.get_mpz_t()); }
template <class K>
long field_char(const TowerElem<K>& x) { return field_char(x.ctx()->proto); }

namespace puiseux_detail {
struct NeedMoreX : MathError {
    NeedMoreX() : MathError("puiseux: x-adic working precision exhausted") {}
};
}

// ---- Newton polygon -----------------------------------------------------------

struct PolygonSegment {
    int p = 0, q = 1;   // slope lambda = p/q (q > 0, gcd(|p|, q) = 1)
    long r = 0;         // value of p*i + q*j on the segment
    int i1 = 0, i2 = 0; // y-exponent range
};

// Lower convex hull of the support {(i, j) : coeff of y^i x^j != 0}.
// `xval[i]` is the x-valuation of the y^i coefficient, or -1 when that
// coefficient is zero (within the known truncation).
inline std::vector<PolygonSegment> lower_hull_segments(const std::vector<long>& xval) {
    std::vector<std::pair<long, long>> pts; // (i, j)
    for (size_t i = 0; i < xval.size(); i++)
        if (xval[i] >= 0) pts.push_back({(long)i, xval[i]});
    std::vector<PolygonSegment> segs;
    if (pts.size() < 2) return segs;
    // monotone chain, keeping the hull seen from below
    std::vector<std::pair<long, long>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // drop b if it is above segment a-pt
            if ((b.second - a.second) * (pt.first - a.first) >= (pt.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    for (size_t k = 0; k + 1 < hull.size(); k++) {
        auto [i1, j1] = hull[k];
        auto [i2, j2] = hull[k + 1];
        long di = i2 - i1, dj = j2 - j1;
        long g = mpz_get_si(zgcd(mpz_class(di), mpz_class(dj < 0 ? -dj : dj)).get_mpz_t());
        if (g == 0) g = 1;
        PolygonSegment s;
        s.q = (int)(di / g);
        s.p = (int)(-dj / g);
        s.r = (long)s.p * i1 + (long)s.q * j1;
        s.i1 = (int)i1;
        s.i2 = (int)i2;
        segs.push_back(s);
    }
    return segs;
}

// ---- working polynomials with x-truncation ------------------------------------

// f as a y-major polynomial whose x-coefficients are truncated at x^xcap
// (xcap < 0 means exact). Coefficient ring: tower elements over K.
template <class K>
struct WorkPoly {
    std::vector<UniPoly<TowerElem<K>>> ycoeff; // index = y exponent
    long xcap = -1;                            // exclusive validity bound; -1 = exact

    int ydeg() const { return (int)ycoeff.size() - 1; }
};

template <class K>
WorkPoly<K> workpoly_remap(const TowerCtxPtr<K>& to, const WorkPoly<K>& f) {
    WorkPoly<K> g;
    g.xcap = f.xcap;
    TowerElem<K> z = TowerElem<K>::zero(to);
    for (auto& c : f.ycoeff) {
        UniPoly<TowerElem<K>> nc(z);
        for (int j = 0; j <= c.degree(); j++)
            if (!c.coeff(j).is_zero()) nc.set_coeff(j, tower_remap(to, c.coeff(j)));
        g.ycoeff.push_back(nc);
    }
    return g;
}

template <class K>
WorkPoly<K> workpoly_truncate(const WorkPoly<K>& f, long cap) {
    if (f.xcap >= 0 && f.xcap <= cap) return f;
    WorkPoly<K> g;
    g.xcap = cap;
    for (auto& c : f.ycoeff) g.ycoeff.push_back(c.truncated((int)cap));
    return g;
}

// ---- branches -------------------------------------------------------------------

// A Duval parametrisation x = b tau^e, y = sum_{m >= off} c_m tau^m over the
// residue tower L. The chain data allows extending the series on demand by
// Newton iteration on the final (nonsingular) transformed equation.
template <class K>
struct RPBranch {
    TowerCtxPtr<K> tower;
    int e = 1;
    TowerElem<K> b;

    // y(tau): Laurent coefficients c[i] of tau^{off+i}, valid below `order`
    int y_off = 0;
    std::vector<TowerElem<K>> y_coeffs;
    int order = 0;

    long residue_degree() const { return tower->dim(); }

    // extension machinery
    struct ChainStep { int q, p, u, v; TowerElem<K> b; };
    std::vector<ChainStep> chain;                      // outermost first
    std::vector<UniPoly<TowerElem<K>>> final_eq;       // nonsingular in y at (0,0)
    long final_xcap = -1;

    TowerElem<K> y_coeff_at(int m) const {
        int idx = m - y_off;
        if (idx < 0 || idx >= (int)y_coeffs.size()) return TowerElem<K>::zero(tower);
        return y_coeffs[idx];
    }
};

namespace puiseux_detail {

template <class K>
using TE = TowerElem<K>;
template <class K>
using XP = UniPoly<TowerElem<K>>; // poly/series in x over the tower

// evaluate the y-major f at a power series y(x), both truncated at x^cap
template <class K>
XP<K> eval_at_series(const WorkPoly<K>& f, const XP<K>& y, long cap) {
    XP<K> acc(y.zero_elem());
    for (int i = f.ydeg(); i >= 0; i--) {
        acc = (acc * y).truncated((int)cap);
        acc = acc + f.ycoeff[i].truncated((int)cap);
    }
    return acc;
}

template <class K>
XP<K> eval_dy_at_series(const WorkPoly<K>& f, const XP<K>& y, long cap) {
    XP<K> acc(y.zero_elem());
    for (int i = f.ydeg(); i >= 1; i--) {
        acc = (acc * y).truncated((int)cap);
        acc = acc + f.ycoeff[i].scaled_by_int(i).truncated((int)cap);
    }
    return acc;
}

// multiplicative inverse of a power series with unit constant term, mod x^cap
template <class K>
XP<K> series_inv(const XP<K>& s, long cap) {
    TE<K> c0 = s.coeff(0);
    XP<K> z = XP<K>::constant(c0.inv());
    long prec = 1;
    XP<K> two = XP<K>::constant(c0.one_like() + c0.one_like());
    while (prec < cap) {
        prec *= 2;
        z = (z * (two - (s.truncated((int)std::min(prec, cap)) * z).truncated((int)std::min(prec, cap))))
                .truncated((int)std::min(prec, cap));
    }
    return z.truncated((int)cap);
}

} // namespace puiseux_detail

} // namespace divpol
