#include <catch2/catch_amalgamated.hpp>

#include <divpol/rat.hpp>
#include <divpol/unipoly.hpp>
#include <divpol/zmod.hpp>
#include <divpol/zq.hpp>
#include <divpol/jet.hpp>
#include <divpol/rng.hpp>

using namespace divpol;

namespace {

UniPoly<Rat> qpoly(std::vector<long> cs) {
    UniPoly<Rat> p{Rat(0)};
    for (size_t i = 0; i < cs.size(); i++) p.set_coeff((int)i, Rat(cs[i]));
    return p;
}

// independent oracle: resultant as the determinant of the Sylvester matrix,
// expanded by Laplace recursion (small matrices only)
Rat sylvester_det(const UniPoly<Rat>& f, const UniPoly<Rat>& g) {
    int m = f.degree(), n = g.degree();
    int N = m + n;
    std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N, Rat(0)));
    for (int r = 0; r < n; r++)
        for (int i = 0; i <= m; i++) M[r][r + (m - i)] = f.coeff(i);
    for (int r = 0; r < m; r++)
        for (int i = 0; i <= n; i++) M[n + r][r + (n - i)] = g.coeff(i);
    // fraction-free-ish recursive determinant
    std::function<Rat(std::vector<std::vector<Rat>>)> det = [&](std::vector<std::vector<Rat>> A) -> Rat {
        size_t k = A.size();
        if (k == 1) return A[0][0];
        Rat acc(0);
        int sign = 1;
        for (size_t j = 0; j < k; j++) {
            if (!A[0][j].is_zero()) {
                std::vector<std::vector<Rat>> B(k - 1, std::vector<Rat>(k - 1, Rat(0)));
                for (size_t r = 1; r < k; r++) {
                    size_t cc = 0;
                    for (size_t c = 0; c < k; c++) {
                        if (c == j) continue;
                        B[r - 1][cc++] = A[r][c];
                    }
                }
                Rat term = A[0][j] * det(B);
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        return acc;
    };
    return det(M);
}

} // namespace

TEST_CASE("Rat basics") {
    Rat a(1, 2), b(1, 3);
    REQUIRE((a + b) == Rat(5, 6));
    REQUIRE((a * b) == Rat(1, 6));
    REQUIRE(a.inv() == Rat(2));
    REQUIRE(Rat(-4, 8) == Rat(-1, 2));
    REQUIRE(Rat(-4, 8).den() == 2);
    REQUIRE(Rat(0).is_zero());
}

TEST_CASE("UniPoly arithmetic and division") {
    auto f = qpoly({-1, 0, 1});       // x^2 - 1
    auto g = qpoly({1, 1});           // x + 1
    auto [q, r] = divrem(f, g);
    REQUIRE(r.is_zero());
    REQUIRE(q == qpoly({-1, 1}));

    auto h = f * g;
    REQUIRE(h.degree() == 3);
    REQUIRE(h.coeff(0) == Rat(-1));

    REQUIRE(poly_gcd(f, g) == make_monic(g));
    REQUIRE(f.eval_same(Rat(3)) == Rat(8));

    // derivative
    REQUIRE(qpoly({0, 0, 0, 2}).derivative() == qpoly({0, 0, 6}));
}

TEST_CASE("Karatsuba path agrees with schoolbook") {
    Rng rng(7);
    UniPoly<Rat> a{Rat(0)}, b{Rat(0)};
    for (int i = 0; i < 60; i++) {
        a.set_coeff(i, Rat((long)rng.below(2000) - 1000));
        b.set_coeff(i, Rat((long)rng.below(2000) - 1000));
    }
    auto prod = a * b;
    // evaluate both sides at a few points
    for (long x : {2, 3, -5}) {
        REQUIRE(prod.eval_same(Rat(x)) == a.eval_same(Rat(x)) * b.eval_same(Rat(x)));
    }
}

TEST_CASE("resultants: linear case and discriminants") {
    // Res(x-1, x-2) = -1
    auto f = qpoly({-1, 1}), g = qpoly({-2, 1});
    REQUIRE(resultant(f, g) == Rat(-1));

    // disc(x^2 + 1) = -4
    REQUIRE(discriminant_field(qpoly({1, 0, 1})) == Rat(-4));

    // resultant matches the Sylvester determinant oracle on random pairs
    Rng rng(11);
    for (int trial = 0; trial < 20; trial++) {
        UniPoly<Rat> A{Rat(0)}, B{Rat(0)};
        int da = 1 + (int)rng.below(4), db = 1 + (int)rng.below(4);
        for (int i = 0; i <= da; i++) A.set_coeff(i, Rat((long)rng.below(11) - 5));
        for (int i = 0; i <= db; i++) B.set_coeff(i, Rat((long)rng.below(11) - 5));
        if (A.degree() < 1 || B.degree() < 1) continue;
        REQUIRE(resultant(A, B) == sylvester_det(A, B));
    }
}

TEST_CASE("resultant is zero iff gcd nonconstant (random)") {
    Rng rng(23);
    for (int trial = 0; trial < 50; trial++) {
        UniPoly<Rat> A{Rat(0)}, B{Rat(0)};
        int da = 1 + (int)rng.below(5), db = 1 + (int)rng.below(5);
        for (int i = 0; i <= da; i++) A.set_coeff(i, Rat((long)rng.below(7) - 3));
        for (int i = 0; i <= db; i++) B.set_coeff(i, Rat((long)rng.below(7) - 3));
        if (A.degree() < 1 || B.degree() < 1) continue;
        bool rz = resultant(A, B).is_zero();
        bool gnc = poly_gcd(A, B).degree() > 0;
        REQUIRE(rz == gnc);
    }
}

TEST_CASE("subresultant resultant over Q[x] coefficients") {
    // disc_y of f(x,y) = y^2 - x^3 - x^2 as a polynomial in y over Q[x]:
    // Res_y(f, 2y) = 4*(-x^3 - x^2), so disc = -4 x^2 (x + 1) up to the standard
    // sign/lc normalization; vanishing locus {0, -1}.
    UniPoly<Rat> zero{Rat(0)};
    UniPoly<UniPoly<Rat>> f{UniPoly<Rat>(zero)};
    // y^2 coefficient: 1 ; y^0 coefficient: -x^3 - x^2
    f.set_coeff(2, qpoly({1}));
    f.set_coeff(0, qpoly({0, 0, -1, -1}));
    auto fy = f.derivative();
    auto res = resultant_subres(f, fy, [](const UniPoly<Rat>& a, const UniPoly<Rat>& b) { return divexact(a, b); });
    // oracle by hand: Res_y(y^2 + c(x), 2y) = 4*c(x)
    auto expect = qpoly({0, 0, -4, -4});
    REQUIRE(res == expect);
    REQUIRE(res.eval_same(Rat(0)).is_zero());
    REQUIRE(res.eval_same(Rat(-1)).is_zero());
    REQUIRE(!res.eval_same(Rat(1)).is_zero());
}

TEST_CASE("Zmod ring") {
    auto ctx = make_zmod_ctx(7, 4); // 7^4 = 2401
    Zmod a(ctx, 1601), b(ctx, 3);
    REQUIRE((a * b).rep() == 4803 % 2401);
    REQUIRE((a * b).rep() == 1);
    REQUIRE(b.inv().rep() == 1601);
    REQUIRE(Zmod(ctx, 7).is_unit() == false);
    REQUIRE(Zmod(ctx, 7).valuation() == 1);
    REQUIRE(Zmod(ctx, 49).divide_by_pk(2).rep() == 1);
}

TEST_CASE("Zq field and local ring") {
    // F_25 = F_5[u]/(h)
    auto fq = make_zq_ctx(5, 1, 2);
    ZqElem u = ZqElem::gen(fq);
    ZqElem one = ZqElem::from_int(fq, 1);
    REQUIRE((u * u.inv()) == one);
    // Frobenius is x -> x^5 on F_25 and fixes F_5
    REQUIRE(zq_frobenius(ZqElem::from_int(fq, 3)) == ZqElem::from_int(fq, 3));
    REQUIRE(zq_frobenius(u) == u.pow(5));
    // order of the multiplicative group
    REQUIRE(u.pow(24) == one);

    // Z_{q}/p^e with e = 3
    auto zq = make_zq_ctx(5, 3, 2);
    ZqElem x = ZqElem::gen(zq) + ZqElem::from_int(zq, 2);
    REQUIRE((x * x.inv()) == ZqElem::from_int(zq, 1));
    // Frobenius lift is a ring hom of order a=2
    ZqElem fx = zq_frobenius(zq_frobenius(x));
    REQUIRE(fx == x);
    ZqElem y = ZqElem::gen(zq) * ZqElem::from_int(zq, 3);
    REQUIRE(zq_frobenius(x * y) == zq_frobenius(x) * zq_frobenius(y));
    REQUIRE(zq_frobenius(x + y) == zq_frobenius(x) + zq_frobenius(y));

    // reduction to e = 1 is a ring hom
    auto down = make_zq_ctx_with_h(5, 1, 2, zq->h);
    REQUIRE((x * y).reduce_to(down) == x.reduce_to(down) * y.reduce_to(down));
}

TEST_CASE("Jet ring") {
    auto zq = make_zq_ctx(5, 2, 2);
    auto jc = make_jet_ctx(zq, 8);
    JetElem t = JetElem::tvar(jc);
    JetElem one = JetElem::from_int(jc, 1);
    JetElem s = one - t;
    JetElem si = s.inv();
    REQUIRE((s * si) == one);
    // geometric series
    for (int i = 0; i < 8; i++) REQUIRE(si.coeff(i) == ZqElem::from_int(zq, 1));
    REQUIRE((t * t).tval() == 2);
    REQUIRE((t * t).divide_by_tk(2) == one);
    // truncation compatibility
    auto jc4 = make_jet_ctx(zq, 4);
    REQUIRE((s * si).reduce_to(jc4) == s.reduce_to(jc4) * si.reduce_to(jc4));
}

TEST_CASE("UniPoly over F_q") {
    auto fq = make_zq_ctx(5, 1, 1);
    ZqElem z0 = ZqElem::from_int(fq, 0);
    UniPoly<ZqElem> f(z0);
    // x^2 + 1 factors over F_5 as (x+2)(x+3)
    f.set_coeff(0, ZqElem::from_int(fq, 1));
    f.set_coeff(2, ZqElem::from_int(fq, 1));
    ZqElem two = ZqElem::from_int(fq, 2), three = ZqElem::from_int(fq, 3);
    REQUIRE(f.eval_same(-two).is_zero());
    REQUIRE(f.eval_same(-three).is_zero());
}
