#include <catch2/catch_amalgamated.hpp>

#include <divpol/tower.hpp>
#include <divpol/rat.hpp>
#include <divpol/factor_q.hpp>

using namespace divpol;

using TE = TowerElem<Rat>;
using TC = TowerCtxPtr<Rat>;

namespace {

TC q_base() { return make_tower_base(Rat(0)); }

// adjoin a root of z^2 - n
TC adjoin_sqrt(const TC& ctx, long n) {
    std::vector<TE> low{TE::from_base(ctx, Rat(-n)), TE::zero(ctx)};
    return tower_extend(ctx, low);
}

} // namespace

TEST_CASE("tower arithmetic in Q(sqrt2)") {
    auto ctx = adjoin_sqrt(q_base(), 2);
    TE r2 = TE::gen(ctx, 1);
    REQUIRE((r2 * r2) == TE::from_base(ctx, Rat(2)));
    TE x = r2 + TE::from_base(ctx, Rat(1)); // 1 + sqrt2
    TE xi = x.inv();
    REQUIRE((x * xi) == TE::one(ctx));
    // (1+sqrt2)^{-1} = sqrt2 - 1
    REQUIRE(xi == r2 - TE::from_base(ctx, Rat(1)));
}

TEST_CASE("tower of two levels Q(sqrt2, sqrt3) and primitive element") {
    auto c1 = adjoin_sqrt(q_base(), 2);
    auto c2 = adjoin_sqrt(c1, 3);
    REQUIRE(c2->dim() == 4);
    TE r2 = TE::gen(c2, 1), r3 = TE::gen(c2, 2);
    REQUIRE((r2 * r2) == TE::from_base(c2, Rat(2)));
    REQUIRE((r3 * r3) == TE::from_base(c2, Rat(3)));
    TE s = r2 + r3;
    auto mp = tower_minpoly(s);
    // minimal polynomial of sqrt2 + sqrt3 is x^4 - 10x^2 + 1
    UniPoly<Rat> expect{Rat(0)};
    expect.set_coeff(0, Rat(1));
    expect.set_coeff(2, Rat(-10));
    expect.set_coeff(4, Rat(1));
    REQUIRE(mp == expect);

    auto [gamma, pm] = tower_primitive_element(c2);
    REQUIRE(pm.degree() == 4);
    REQUIRE(q_irreducible(pm));
}

TEST_CASE("dynamic evaluation splits on zero divisors") {
    // adjoin a root of (z^2-2)(z^2-9) = z^4 - 11 z^2 + 18: not irreducible;
    // inverting z^2 - 2 must discover a factor
    auto ctx0 = q_base();
    std::vector<TE> low{
        TE::from_base(ctx0, Rat(18)), TE::zero(ctx0),
        TE::from_base(ctx0, Rat(-11)), TE::zero(ctx0)};
    auto ctx = tower_extend(ctx0, low);
    TE z = TE::gen(ctx, 1);
    TE bad = z * z - TE::from_base(ctx, Rat(2));
    bool split = false;
    try {
        (void)bad.inv();
    } catch (const TowerSplitEx<Rat>& ex) {
        split = true;
        REQUIRE(ex.level == 1);
        auto [ca, cb] = tower_split(ctx, ex.level, ex.factor);
        REQUIRE(ca->dim() + cb->dim() == 4);
        // in each component, z^2 - 2 is either zero or invertible
        for (auto& comp : {ca, cb}) {
            TE zc = TE::gen(comp, 1);
            TE v = zc * zc - TE::from_base(comp, Rat(2));
            if (!v.is_zero()) REQUIRE((v * v.inv()) == TE::one(comp));
        }
    }
    REQUIRE(split);
}

TEST_CASE("primitive element of a product algebra") {
    // Q[z]/(z^2-1) = Q x Q: a primitive element exists with squarefree minpoly
    auto ctx0 = q_base();
    std::vector<TE> low{TE::from_base(ctx0, Rat(-1)), TE::zero(ctx0)};
    auto ctx = tower_extend(ctx0, low);
    auto [gamma, mp] = tower_primitive_element(ctx);
    REQUIRE(mp.degree() == 2);
    auto g = gcd_q(mp, mp.derivative());
    REQUIRE(g.degree() == 0); // squarefree
    auto fac = factor_q(mp);
    REQUIRE(fac.size() == 2);
}
