#pragma once

#include <memory>
#include <vector>

#include "unipoly.hpp"
#include "errors.hpp"

namespace divpol {

template <class K> class TowerElem;

// Chain of monic extensions K = T_0 c T_1 c ... c T_m, each T_{i+1} =
// T_i[u_{i+1}]/(g_{i+1}) with g_{i+1} squarefree over T_i. Moduli need not be
// irreducible: computations run by dynamic evaluation, and a zero divisor met
// during inversion raises TowerSplitEx so the driver can split the chain and
// restart on each component.
template <class K>
struct TowerCtx {
    K proto;                                          // base zero prototype
    std::vector<std::vector<TowerElem<K>>> moduli;    // low coefficients of each monic modulus

    explicit TowerCtx(const K& p) : proto(p.zero_like()) {}

    int levels() const { return (int)moduli.size(); }
    int degree(int level) const { return (int)moduli[level - 1].size(); } // degree of g_level
    long dim() const {
        long d = 1;
        for (auto& m : moduli) d *= (long)m.size();
        return d;
    }
};

template <class K>
using TowerCtxPtr = std::shared_ptr<const TowerCtx<K>>;

template <class K>
struct TowerSplitEx {
    int level;                             // 1-based level whose modulus factors
    std::vector<TowerElem<K>> factor;      // monic non-trivial factor (low coeffs, implicit lead 1)
};

// An element of the top ring T_m, represented as a dense nested tree: a leaf
// holds a base coefficient, an inner node at level l holds exactly
// deg(g_l) children at level l-1.
template <class K>
class TowerElem {
public:
    TowerElem() = default;

    static TowerElem zero(const TowerCtxPtr<K>& ctx) { return make_const(ctx, ctx->proto); }
    static TowerElem one(const TowerCtxPtr<K>& ctx) { return make_const(ctx, ctx->proto.one_like()); }
    static TowerElem from_base(const TowerCtxPtr<K>& ctx, const K& v) { return make_const(ctx, v); }

    // the generator u_level (1-based level)
    static TowerElem gen(const TowerCtxPtr<K>& ctx, int level) {
        if (ctx->degree(level) == 1) {
            // modulus has degree 1: u is the constant -g[0]
            return -ctx->moduli[level - 1][0];
        }
        TowerElem e = zero(ctx);
        TowerElem* node = &e;
        int l = ctx->levels();
        while (l > level) { node = &node->up_[0]; l--; }
        node->up_[1] = one_at(ctx, level - 1);
        return e;
    }

    const TowerCtxPtr<K>& ctx() const { return ctx_; }
    int level() const { return level_; }
    const K& leaf() const { return base_; }
    const std::vector<TowerElem>& kids() const { return up_; }
    std::vector<TowerElem>& kids_mut() { return up_; }

    bool is_zero() const {
        if (level_ == 0) return base_.is_zero();
        for (auto& c : up_) if (!c.is_zero()) return false;
        return true;
    }

    // optimistic: nonzero elements are treated as units until an inversion
    // discovers a zero divisor (dynamic evaluation)
    bool is_unit() const { return !is_zero(); }

    // level-preserving: nodes used as coefficients keep their own level
    TowerElem zero_like() const { return const_at(ctx_, level_, ctx_->proto.zero_like()); }
    TowerElem one_like() const { return const_at(ctx_, level_, ctx_->proto.one_like()); }

    TowerElem operator-() const {
        TowerElem r = *this;
        r.negate();
        return r;
    }

    friend TowerElem operator+(const TowerElem& a, const TowerElem& b) {
        TowerElem r = a;
        r.add_in(b);
        return r;
    }
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b) {
        TowerElem r = a;
        r.sub_in(b);
        return r;
    }
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b) { return mul(a, b); }

    friend bool operator==(const TowerElem& a, const TowerElem& b) {
        if (a.level_ != b.level_) return false;
        if (a.level_ == 0) return a.base_ == b.base_;
        for (size_t i = 0; i < a.up_.size(); i++)
            if (!(a.up_[i] == b.up_[i])) return false;
        return true;
    }
    friend bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

    TowerElem inv() const;

    // flatten to a vector of dim() base coefficients (lexicographic by level)
    void flatten(std::vector<K>& out) const {
        if (level_ == 0) { out.push_back(base_); return; }
        for (auto& c : up_) c.flatten(out);
    }

private:
    TowerCtxPtr<K> ctx_;
    int level_ = 0;
    K base_;
    std::vector<TowerElem> up_;

    friend struct TowerOps;

    static TowerElem make_const(const TowerCtxPtr<K>& ctx, const K& v) {
        return const_at(ctx, ctx->levels(), v);
    }

    static TowerElem const_at(const TowerCtxPtr<K>& ctx, int level, const K& v) {
        TowerElem e;
        e.ctx_ = ctx;
        e.level_ = level;
        if (level == 0) { e.base_ = v; return e; }
        int d = ctx->degree(level);
        e.up_.assign(d, const_at(ctx, level - 1, v.zero_like()));
        e.up_[0] = const_at(ctx, level - 1, v);
        return e;
    }

    static TowerElem one_at(const TowerCtxPtr<K>& ctx, int level) {
        return const_at(ctx, level, ctx->proto.one_like());
    }

    void negate() {
        if (level_ == 0) { base_ = -base_; return; }
        for (auto& c : up_) c.negate();
    }
    void add_in(const TowerElem& o) {
        if (level_ == 0) { base_ = base_ + o.base_; return; }
        for (size_t i = 0; i < up_.size(); i++) up_[i].add_in(o.up_[i]);
    }
    void sub_in(const TowerElem& o) {
        if (level_ == 0) { base_ = base_ - o.base_; return; }
        for (size_t i = 0; i < up_.size(); i++) up_[i].sub_in(o.up_[i]);
    }

    static TowerElem mul(const TowerElem& a, const TowerElem& b) {
        if (a.level_ == 0) {
            TowerElem r = a;
            r.base_ = a.base_ * b.base_;
            return r;
        }
        int d = (int)a.up_.size();
        const auto& ctx = a.ctx_;
        int lvl = a.level_;
        // convolution
        std::vector<TowerElem> conv(2 * d - 1, a.up_[0].zero_like_node());
        for (int i = 0; i < d; i++) {
            if (a.up_[i].is_zero()) continue;
            for (int j = 0; j < d; j++) {
                if (b.up_[j].is_zero()) continue;
                conv[i + j].add_in(mul(a.up_[i], b.up_[j]));
            }
        }
        // reduce modulo the monic modulus of this level
        const auto& g = ctx->moduli[lvl - 1];
        for (int k = 2 * d - 2; k >= d; k--) {
            if (conv[k].is_zero()) continue;
            TowerElem t = conv[k];
            for (int i = 0; i < d; i++) {
                if (g[i].is_zero()) continue;
                // g's coefficients are full-level elements; use their sub-node at lvl-1
                conv[k - d + i].sub_in(mul(t, g[i].node_at(lvl - 1)));
            }
        }
        conv.resize(d);
        TowerElem r;
        r.ctx_ = ctx;
        r.level_ = lvl;
        r.up_ = std::move(conv);
        return r;
    }

    TowerElem zero_like_node() const {
        return const_at(ctx_, level_, ctx_->proto.zero_like());
    }

    // view of this element at a lower level (it must be constant above)
    TowerElem node_at(int level) const {
        const TowerElem* n = this;
        while (n->level_ > level) n = &n->up_[0];
        return *n;
    }

public:
    // lift a level-l element to the full level of ctx (constant embedding)
    static TowerElem lift_to_top(const TowerElem& e) {
        const auto& ctx = e.ctx_;
        if (e.level_ == ctx->levels()) return e;
        TowerElem r = zero(ctx);
        TowerElem* node = &r;
        int l = ctx->levels();
        while (l > e.level_) { node = &node->up_[0]; l--; }
        *node = e;
        return r;
    }
};

// ---- context manipulation ---------------------------------------------------

template <class K>
TowerCtxPtr<K> make_tower_base(const K& proto) {
    return std::make_shared<TowerCtx<K>>(proto);
}

// extend by a monic modulus given as full-level coefficients of the CURRENT
// ctx; the stored coefficients are rebuilt as elements of the extended ctx
template <class K>
TowerCtxPtr<K> tower_extend(const TowerCtxPtr<K>& ctx, const std::vector<TowerElem<K>>& monic_low_coeffs) {
    auto nc = std::make_shared<TowerCtx<K>>(ctx->proto);
    nc->moduli = ctx->moduli;
    nc->moduli.push_back(monic_low_coeffs); // sizes first; entries rebuilt below
    TowerCtxPtr<K> out = nc;
    for (auto& c : nc->moduli.back()) c = tower_remap(out, c);
    return out;
}

// re-express an element of `from` in context `to` where `to` differs only by a
// replaced modulus at `level` (a divisor of the old one): reduce the level
// coefficients modulo the new modulus
template <class K>
TowerElem<K> tower_remap(const TowerCtxPtr<K>& to, const TowerElem<K>& e);

namespace tower_detail {

// polynomial remainder of coefficient vector `v` (entries at level lvl-1 of ctx
// `to`) modulo the monic modulus of `to` at lvl
template <class K>
std::vector<TowerElem<K>> mod_monic(const TowerCtxPtr<K>& to, int lvl, std::vector<TowerElem<K>> v);

} // namespace tower_detail

// ---- UniPoly bridge -----------------------------------------------------------

template <class K>
using TPoly = UniPoly<TowerElem<K>>;

// modulus of level l as a monic UniPoly over full-level elements
template <class K>
TPoly<K> tower_modulus_poly(const TowerCtxPtr<K>& ctx, int level) {
    TowerElem<K> z = TowerElem<K>::zero(ctx);
    TPoly<K> g(z);
    const auto& m = ctx->moduli[level - 1];
    for (size_t i = 0; i < m.size(); i++) g.set_coeff((int)i, m[i]);
    g.set_coeff((int)m.size(), TowerElem<K>::one(ctx));
    return g;
}

// level-aware inversion by extended Euclid against the modulus of the node's
// own level; discovers splits
template <class K>
TowerElem<K> TowerElem<K>::inv() const {
    if (level_ == 0) {
        TowerElem r = *this;
        r.base_ = base_.inv();
        return r;
    }
    if (is_zero()) throw std::domain_error("TowerElem: inverse of zero");
    // constant in the generator of this level: descend
    bool constant = true;
    for (size_t i = 1; i < up_.size(); i++)
        if (!up_[i].is_zero()) { constant = false; break; }
    if (constant) {
        TowerElem r = *this;
        r.up_[0] = up_[0].inv();
        return r;
    }
    const auto& ctx = ctx_;
    int lvl = level_;
    TowerElem zl = up_[0].zero_like(); // level-1 zero node
    UniPoly<TowerElem> self(zl), g(zl);
    for (size_t i = 0; i < up_.size(); i++) self.set_coeff((int)i, up_[i]);
    const auto& m = ctx->moduli[lvl - 1];
    for (size_t i = 0; i < m.size(); i++) g.set_coeff((int)i, m[i].node_at(lvl - 1));
    g.set_coeff((int)m.size(), zl.one_like());
    UniPoly<TowerElem> r0 = g, r1 = self;
    UniPoly<TowerElem> t0(zl), t1 = UniPoly<TowerElem>::constant(zl.one_like());
    while (!r1.is_zero()) {
        auto [q, rr] = divrem(r0, r1);
        UniPoly<TowerElem> t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(rr);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.degree() == 0) {
        TowerElem c = r0.coeff(0).inv();
        UniPoly<TowerElem> invpoly = poly_mod(t0.scaled(c), g);
        TowerElem out = *this;
        for (size_t i = 0; i < out.up_.size(); i++) out.up_[i] = zl;
        for (int i = 0; i <= invpoly.degree(); i++) out.up_[i] = invpoly.coeff(i);
        return out;
    }
    // zero divisor discovered: the monic gcd is a proper factor of the modulus
    TowerElem lcinv = r0.lc().inv();
    UniPoly<TowerElem> fac = r0.scaled(lcinv);
    std::vector<TowerElem> low;
    for (int i = 0; i < fac.degree(); i++) low.push_back(lift_to_top(fac.coeff(i)));
    throw TowerSplitEx<K>{lvl, std::move(low)};
}

namespace tower_detail {

template <class K>
std::vector<TowerElem<K>> mod_monic(const TowerCtxPtr<K>& to, int lvl, std::vector<TowerElem<K>> v) {
    // v: coefficients (full-level elements of `to`) of a poly in u_lvl;
    // reduce modulo the monic modulus of `to` at lvl
    const auto& m = to->moduli[lvl - 1];
    int d = (int)m.size();
    for (int k = (int)v.size() - 1; k >= d; k--) {
        if (v[k].is_zero()) continue;
        TowerElem<K> t = v[k];
        v[k] = t.zero_like();
        for (int i = 0; i < d; i++) v[k - d + i] = v[k - d + i] - t * m[i];
    }
    v.resize(d, TowerElem<K>::zero(to));
    return v;
}

} // namespace tower_detail

// rebuild an element in a refined or extended context by Horner over the new
// generators (reduces modulo the new moduli as it goes)
template <class K>
TowerElem<K> tower_remap(const TowerCtxPtr<K>& to, const TowerElem<K>& e) {
    std::function<TowerElem<K>(const TowerElem<K>&, int)> rec =
        [&](const TowerElem<K>& node, int lvl) -> TowerElem<K> {
        if (lvl == 0) return TowerElem<K>::from_base(to, node.leaf());
        TowerElem<K> u = TowerElem<K>::gen(to, lvl);
        TowerElem<K> acc = TowerElem<K>::zero(to);
        for (int i = (int)node.kids().size() - 1; i >= 0; i--)
            acc = acc * u + rec(node.kids()[i], lvl - 1);
        return acc;
    };
    return rec(e, e.level());
}

// as tower_remap, but first drops the (trivial) tree levels above `top_level`;
// valid when e is constant above top_level
template <class K>
TowerElem<K> tower_remap_below(const TowerCtxPtr<K>& to, const TowerElem<K>& e, int top_level) {
    const TowerElem<K>* n = &e;
    while (n->level() > top_level) n = &n->kids()[0];
    return TowerElem<K>::lift_to_top(tower_remap_sub(to, *n));
}

template <class K>
TowerElem<K> tower_remap_sub(const TowerCtxPtr<K>& to, const TowerElem<K>& e) {
    std::function<TowerElem<K>(const TowerElem<K>&, int)> rec =
        [&](const TowerElem<K>& node, int lvl) -> TowerElem<K> {
        if (lvl == 0) return TowerElem<K>::from_base(to, node.leaf());
        TowerElem<K> u = TowerElem<K>::gen(to, lvl);
        TowerElem<K> acc = TowerElem<K>::zero(to);
        for (int i = (int)node.kids().size() - 1; i >= 0; i--)
            acc = acc * u + rec(node.kids()[i], lvl - 1);
        return acc;
    };
    return rec(e, e.level());
}

// ---- minimal polynomials over the base field ---------------------------------

// minimal polynomial of gamma over K by linear algebra on flattened powers
template <class K>
UniPoly<K> tower_minpoly(const TowerElem<K>& gamma) {
    const auto& ctx = gamma.ctx();
    long dim = ctx->dim();
    std::vector<std::vector<K>> pows; // flattened gamma^0, gamma^1, ...
    TowerElem<K> cur = TowerElem<K>::one(ctx);
    for (long k = 0;; k++) {
        std::vector<K> flat;
        cur.flatten(flat);
        pows.push_back(flat);
        // look for a dependency among pows by plain Gaussian elimination
        long rows = (long)pows.size();
        std::vector<std::vector<K>> M = pows;
        std::vector<std::vector<K>> comb(rows);
        for (long i = 0; i < rows; i++) {
            comb[i].assign(rows, ctx->proto.zero_like());
            comb[i][i] = ctx->proto.one_like();
        }
        std::vector<long> pivot_of_row;
        std::vector<bool> used(rows, false);
        for (long col = 0, r = 0; col < dim && r < rows; col++) {
            long piv = -1;
            for (long i = 0; i < rows; i++)
                if (!used[i] && !M[i][col].is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            used[piv] = true;
            K inv = M[piv][col].inv();
            for (long c2 = 0; c2 < dim; c2++) M[piv][c2] = M[piv][c2] * inv;
            for (long c2 = 0; c2 < rows; c2++) comb[piv][c2] = comb[piv][c2] * inv;
            for (long i = 0; i < rows; i++) {
                if (i == piv || M[i][col].is_zero()) continue;
                K f = M[i][col];
                for (long c2 = 0; c2 < dim; c2++) M[i][c2] = M[i][c2] - f * M[piv][c2];
                for (long c2 = 0; c2 < rows; c2++) comb[i][c2] = comb[i][c2] - f * comb[piv][c2];
            }
            r++;
        }
        // a row that became zero encodes a dependency
        for (long i = 0; i < rows; i++) {
            if (used[i]) continue;
            bool zero = true;
            for (long c2 = 0; c2 < dim; c2++)
                if (!M[i][c2].is_zero()) { zero = false; break; }
            if (!zero) continue;
            // normalize: highest power involved gets coefficient 1
            UniPoly<K> mp(ctx->proto);
            for (long c2 = 0; c2 < rows; c2++) mp.set_coeff((int)c2, comb[i][c2]);
            return make_monic(mp);
        }
        if (k >= dim) throw MathError("tower_minpoly: no dependency found");
        cur = cur * gamma;
    }
}

// deterministic primitive element: gamma with deg(minpoly) = dim(T). Works for
// etale algebras (squarefree moduli in characteristic 0 or tame cases).
template <class K>
std::pair<TowerElem<K>, UniPoly<K>> tower_primitive_element(const TowerCtxPtr<K>& ctx) {
    int m = ctx->levels();
    long dim = ctx->dim();
    if (m == 0) {
        UniPoly<K> mp(ctx->proto);
        mp.set_coeff(1, ctx->proto.one_like());
        return {TowerElem<K>::zero(ctx), mp}; // minpoly z of gamma = 0
    }
    for (long c = 1; c <= 200; c++) {
        TowerElem<K> gamma = TowerElem<K>::zero(ctx);
        K mult = ctx->proto.one_like();
        K cc = ctx->proto.zero_like();
        for (long i = 0; i < c; i++) cc = cc + ctx->proto.one_like();
        for (int l = 1; l <= m; l++) {
            gamma = gamma + TowerElem<K>::gen(ctx, l) * TowerElem<K>::from_base(ctx, mult);
            mult = mult * cc;
        }
        auto mp = tower_minpoly(gamma);
        if (mp.degree() == (int)dim) return {gamma, mp};
    }
    throw MathError("tower_primitive_element: sweep exhausted");
}

// split a context at `level` along a monic factor of its modulus; returns the
// two refined contexts (factor and cofactor)
template <class K>
std::pair<TowerCtxPtr<K>, TowerCtxPtr<K>> tower_split(const TowerCtxPtr<K>& ctx, int level,
                                                      const std::vector<TowerElem<K>>& factor_low) {
    TowerElem<K> z = TowerElem<K>::zero(ctx);
    TPoly<K> g = tower_modulus_poly(ctx, level);
    TPoly<K> f(z);
    for (size_t i = 0; i < factor_low.size(); i++) f.set_coeff((int)i, factor_low[i]);
    f.set_coeff((int)factor_low.size(), TowerElem<K>::one(ctx));
    TPoly<K> h = divexact(g, f); // cofactor (monic)

    auto build = [&](const TPoly<K>& mod) {
        auto nc = std::make_shared<TowerCtx<K>>(ctx->proto);
        nc->moduli = ctx->moduli;
        // install the shrunk modulus structurally (sizes first), then remap
        std::vector<TowerElem<K>> low;
        for (int i = 0; i < mod.degree(); i++) low.push_back(mod.coeff(i));
        nc->moduli[level - 1].assign(mod.degree(), TowerElem<K>());
        TowerCtxPtr<K> tmp = nc;
        // the modulus coefficients live below `level`, so remapping them never
        // touches the entries being replaced
        for (int i = 0; i < mod.degree(); i++)
            nc->moduli[level - 1][i] = tower_remap_below(tmp, low[i], level - 1);
        // higher moduli may involve u_level; remap them once the new modulus
        // is installed
        for (int l = level + 1; l <= ctx->levels(); l++)
            for (auto& c : nc->moduli[l - 1]) c = tower_remap(tmp, c);
        return tmp;
    };
    return {build(f), build(h)};
}

} // namespace divpol
