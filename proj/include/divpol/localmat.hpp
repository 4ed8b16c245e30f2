#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "zmod.hpp"
#include "zq.hpp"
#include "jet.hpp"
#include "rat.hpp"

namespace divpol {

// ---- per-ring precision helpers ---------------------------------------------
// Local rings here have a principal "uniformizer" w: p for Z/p^e and Zq/p^e,
// t for jets. reduce_precision maps to the quotient by w^k; lift_balanced maps
// back using balanced representatives (p-adic) or zero-padding (t-adic).

inline Zmod reduce_precision(const Zmod& x, int k) {
    return x.reduce_to(make_zmod_ctx(x.ctx()->p, k));
}
inline Zmod lift_balanced(const Zmod& x, const Zmod& proto) {
    mpz_class b = zmod_balanced(x.rep(), x.ctx()->m);
    return Zmod(proto.ctx(), b);
}
inline int wval(const Zmod& x) { return x.valuation(); }
inline Zmod divide_by_wk(const Zmod& x, int k) { return x.divide_by_pk(k); }
inline int wprec(const Zmod& x) { return x.ctx()->e; }

inline ZqElem reduce_precision(const ZqElem& x, int k) {
    return x.reduce_to(make_zq_ctx_with_h(x.ctx()->p, k, x.ctx()->a, x.ctx()->h));
}
inline ZqElem lift_balanced(const ZqElem& x, const ZqElem& proto) {
    std::vector<mpz_class> c(x.coeffs());
    for (auto& v : c) v = zmod_balanced(v, x.ctx()->m);
    return ZqElem(proto.ctx(), std::move(c));
}
inline int wval(const ZqElem& x) { return x.valuation(); }
inline ZqElem divide_by_wk(const ZqElem& x, int k) { return x.divide_by_pk(k); }
inline int wprec(const ZqElem& x) { return x.ctx()->e; }

inline JetElem reduce_precision(const JetElem& x, int k) {
    return x.reduce_to(make_jet_ctx(x.ctx()->base, k));
}
inline JetElem lift_balanced(const JetElem& x, const JetElem& proto) {
    return x.lift_to(proto.ctx());
}
inline int wval(const JetElem& x) { return x.tval(); }
inline JetElem divide_by_wk(const JetElem& x, int k) { return x.divide_by_tk(k); }
inline int wprec(const JetElem& x) { return x.ctx()->h; }

inline Rat reduce_precision(const Rat& x, int) { return x; }
inline Rat lift_balanced(const Rat& x, const Rat&) { return x; }
inline int wval(const Rat& x) { return x.is_zero() ? 1 : 0; }
inline Rat divide_by_wk(const Rat& x, int) { return x; }
inline int wprec(const Rat&) { return 1; }

// deterministic pivot preference among unit candidates: larger residue wins
inline int pivot_cmp(const Zmod& x, const Zmod& y) {
    mpz_class a = x.rep() % x.ctx()->p, b = y.rep() % y.ctx()->p;
    return a < b ? -1 : (a == b ? 0 : 1);
}
inline int pivot_cmp(const ZqElem& x, const ZqElem& y) { return x.cmp_residue(y); }
inline int pivot_cmp(const JetElem& x, const JetElem& y) { return x.coeff(0).cmp_residue(y.coeff(0)); }
inline int pivot_cmp(const Rat& x, const Rat& y) {
    mpq_class a = abs(x.value()), b = abs(y.value());
    return a < b ? -1 : (a == b ? 0 : 1);
}
template <class R>
int pivot_cmp(const R&, const R&) { return 0; }

// ---- matrices ---------------------------------------------------------------

template <class R>
struct Mat {
    int nr = 0, nc = 0;
    std::vector<R> a;
    R zero;

    Mat(int r, int c, const R& z) : nr(r), nc(c), a((size_t)r * c, z.zero_like()), zero(z.zero_like()) {}

    R& at(int i, int j) { return a[(size_t)i * nc + j]; }
    const R& at(int i, int j) const { return a[(size_t)i * nc + j]; }

    static Mat from_cols(const std::vector<std::vector<R>>& cols, const R& z) {
        int c = (int)cols.size();
        int r = c ? (int)cols[0].size() : 0;
        Mat m(r, c, z);
        for (int j = 0; j < c; j++)
            for (int i = 0; i < r; i++) m.at(i, j) = cols[j][i];
        return m;
    }

    std::vector<R> col(int j) const {
        std::vector<R> v;
        v.reserve(nr);
        for (int i = 0; i < nr; i++) v.push_back(at(i, j));
        return v;
    }

    Mat transposed() const {
        Mat m(nc, nr, zero);
        for (int i = 0; i < nr; i++)
            for (int j = 0; j < nc; j++) m.at(j, i) = at(i, j);
        return m;
    }
};

template <class R>
std::vector<R> mat_vec(const Mat<R>& A, const std::vector<R>& v) {
    std::vector<R> r(A.nr, A.zero);
    for (int i = 0; i < A.nr; i++) {
        R acc = A.zero;
        for (int j = 0; j < A.nc; j++)
            if (!v[j].is_zero() && !A.at(i, j).is_zero()) acc = acc + A.at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

struct RrefResult {
    std::vector<int> pivot_cols;   // ascending
    std::vector<int> pivot_rows;   // pivot_rows[k] is the row of pivot_cols[k]
    std::vector<int> free_cols;
};

// In-place reduced row echelon form over a local ring under the good-reduction
// hypothesis. Pivot rule: leftmost column with a unit entry (among unused
// rows), choosing the unit of maximal residue, ties broken by lowest row
// index. A column that is nonzero but contains no unit raises BadReduction.
template <class R>
RrefResult rref_good_reduction(Mat<R>& M) {
    RrefResult res;
    std::vector<bool> used(M.nr, false);
    for (int j = 0; j < M.nc; j++) {
        int best = -1;
        bool nonzero = false;
        for (int i = 0; i < M.nr; i++) {
            if (used[i]) continue;
            const R& x = M.at(i, j);
            if (x.is_zero()) continue;
            nonzero = true;
            if (x.is_unit()) {
                if (best < 0 || pivot_cmp(x, M.at(best, j)) > 0) best = i;
            }
        }
        if (best < 0) {
            if (nonzero) throw BadReduction();
            res.free_cols.push_back(j);
            continue;
        }
        used[best] = true;
        R piv_inv = M.at(best, j).inv();
        for (int c = 0; c < M.nc; c++) M.at(best, c) = M.at(best, c) * piv_inv;
        for (int i = 0; i < M.nr; i++) {
            if (i == best) continue;
            R f = M.at(i, j);
            if (f.is_zero()) continue;
            for (int c = 0; c < M.nc; c++) M.at(i, c) = M.at(i, c) - f * M.at(best, c);
        }
        res.pivot_cols.push_back(j);
        res.pivot_rows.push_back(best);
    }
    return res;
}

// Kernel basis over the ring: reductions form a residue kernel basis and
// A v = 0 holds exactly in the quotient ring. Vectors are normalized so that
// their first unit coordinate equals 1.
template <class R>
std::vector<std::vector<R>> kernel_good_reduction(const Mat<R>& A) {
    Mat<R> M = A;
    RrefResult r = rref_good_reduction(M);
    std::vector<std::vector<R>> out;
    R one = A.zero.one_like();
    for (int fj : r.free_cols) {
        std::vector<R> v(A.nc, A.zero);
        v[fj] = one;
        for (size_t k = 0; k < r.pivot_cols.size(); k++)
            v[r.pivot_cols[k]] = -M.at(r.pivot_rows[k], fj);
        // normalize on the first unit coordinate
        for (int i = 0; i < A.nc; i++) {
            if (v[i].is_zero()) continue;
            if (v[i].is_unit()) {
                R s = v[i].inv();
                for (auto& x : v) x = x * s;
            }
            break;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// residue-field rank (throws BadReduction if ranks differ between ring and residue)
template <class R>
int rank_good_reduction(const Mat<R>& A) {
    Mat<R> M = A;
    RrefResult r = rref_good_reduction(M);
    return (int)r.pivot_cols.size();
}

// Solve A x = b over the ring (good reduction); returns nullopt when the
// system is inconsistent at residue level.
template <class R>
std::optional<std::vector<R>> solve_good_reduction(const Mat<R>& A, const std::vector<R>& b) {
    Mat<R> M(A.nr, A.nc + 1, A.zero);
    for (int i = 0; i < A.nr; i++) {
        for (int j = 0; j < A.nc; j++) M.at(i, j) = A.at(i, j);
        M.at(i, A.nc) = b[i];
    }
    RrefResult r = rref_good_reduction(M);
    // inconsistent iff the last column is a pivot
    for (int pc : r.pivot_cols)
        if (pc == A.nc) return std::nullopt;
    std::vector<R> x(A.nc, A.zero);
    for (size_t k = 0; k < r.pivot_cols.size(); k++)
        x[r.pivot_cols[k]] = M.at(r.pivot_rows[k], A.nc);
    return x;
}

// Solve for lambda: A lambda = b modulo w^k, and norm . lambda = target exactly
// in the full ring. Unique under the good-reduction hypothesis on the stacked
// system; returns nullopt when the affine frame is degenerate or inconsistent.
template <class R>
std::optional<std::vector<R>> solve_affine(const Mat<R>& A, const std::vector<R>& b,
                                           const std::vector<R>& norm, const R& target, int k) {
    int n = A.nc;
    // pivot of the normalization row: leftmost unit with maximal residue
    int c0 = -1;
    for (int j = 0; j < n; j++) {
        if (!norm[j].is_unit()) continue;
        if (c0 < 0 || pivot_cmp(norm[j], norm[c0]) > 0) {
            if (c0 < 0) c0 = j;
            else if (pivot_cmp(norm[j], norm[c0]) > 0) c0 = j;
        }
    }
    // leftmost among maximal: rescan
    if (c0 < 0) return std::nullopt;
    for (int j = 0; j < n; j++)
        if (norm[j].is_unit() && pivot_cmp(norm[j], norm[c0]) == 0) { c0 = j; break; }

    R ninv = norm[c0].inv();
    // particular solution and kernel directions of the normalization constraint
    std::vector<R> part(n, A.zero);
    part[c0] = target * ninv;
    std::vector<int> freev;
    for (int j = 0; j < n; j++)
        if (j != c0) freev.push_back(j);

    // reduced system M mu = rhs (mod w^k)
    if (k <= 0) return part;
    R proto_low = reduce_precision(A.zero, k);
    Mat<R> M(A.nr, (int)freev.size(), proto_low);
    std::vector<R> rhs(A.nr, proto_low);
    // rhs = b - A part
    std::vector<R> Ap = mat_vec(A, part);
    for (int i = 0; i < A.nr; i++) rhs[i] = reduce_precision(b[i] - Ap[i], k);
    for (size_t jj = 0; jj < freev.size(); jj++) {
        int j = freev[jj];
        // direction e_j - (norm_j / norm_c0) e_c0
        R coef = norm[j] * ninv;
        for (int i = 0; i < A.nr; i++)
            M.at(i, (int)jj) = reduce_precision(A.at(i, j) - A.at(i, c0) * coef, k);
    }
    RrefResult rr;
    Mat<R> Maug(A.nr, (int)freev.size() + 1, proto_low);
    for (int i = 0; i < A.nr; i++) {
        for (size_t jj = 0; jj < freev.size(); jj++) Maug.at(i, (int)jj) = M.at(i, (int)jj);
        Maug.at(i, (int)freev.size()) = rhs[i];
    }
    try {
        rr = rref_good_reduction(Maug);
    } catch (const BadReduction&) {
        return std::nullopt;
    }
    for (int pc : rr.pivot_cols)
        if (pc == (int)freev.size()) return std::nullopt; // inconsistent
    // under-determined systems are fine: free parameters stay at zero, so the
    // documented pivot rule fixes the output
    std::vector<R> lam = part;
    for (size_t idx = 0; idx < rr.pivot_cols.size(); idx++) {
        int jj = rr.pivot_cols[idx];
        auto mu_low = Maug.at(rr.pivot_rows[idx], (int)freev.size());
        R mu = lift_balanced(mu_low, A.zero);
        int j = freev[jj];
        R coef = norm[j] * ninv;
        lam[j] = lam[j] + mu;
        lam[c0] = lam[c0] - mu * coef;
    }
    return lam;
}

} // namespace divpol
