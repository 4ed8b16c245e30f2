#include <catch2/catch_amalgamated.hpp>

#include <divpol/localmat.hpp>
#include <divpol/rng.hpp>

using namespace divpol;

TEST_CASE("kernel over Z/9: proportional rows") {
    auto ctx = make_zmod_ctx(3, 2);
    Mat<Zmod> A(2, 2, Zmod(ctx, 0));
    A.at(0, 0) = Zmod(ctx, 1); A.at(0, 1) = Zmod(ctx, 1);
    A.at(1, 0) = Zmod(ctx, 2); A.at(1, 1) = Zmod(ctx, 2);
    auto ker = kernel_good_reduction(A);
    REQUIRE(ker.size() == 1);
    REQUIRE(ker[0][0] == Zmod(ctx, 1));
    REQUIRE(ker[0][1] == Zmod(ctx, -1));
    // exactness in the quotient ring
    auto Av = mat_vec(A, ker[0]);
    REQUIRE(Av[0].is_zero());
    REQUIRE(Av[1].is_zero());
}

TEST_CASE("kernel of identity is empty") {
    auto ctx = make_zmod_ctx(5, 3);
    Mat<Zmod> A(3, 3, Zmod(ctx, 0));
    for (int i = 0; i < 3; i++) A.at(i, i) = Zmod(ctx, 1);
    REQUIRE(kernel_good_reduction(A).empty());
}

TEST_CASE("non-unit pivot raises BadReduction") {
    auto ctx = make_zmod_ctx(3, 2);
    Mat<Zmod> A(2, 2, Zmod(ctx, 0));
    A.at(0, 0) = Zmod(ctx, 3); A.at(1, 1) = Zmod(ctx, 1);
    REQUIRE_THROWS_AS(kernel_good_reduction(A), BadReduction);
}

TEST_CASE("field case never raises BadReduction and matches naive elimination") {
    Rng rng(99);
    for (int trial = 0; trial < 30; trial++) {
        Mat<Rat> A(6, 9, Rat(0));
        for (int i = 0; i < 6; i++)
            for (int j = 0; j < 9; j++) A.at(i, j) = Rat((long)rng.below(11) - 5);
        auto ker = kernel_good_reduction(A);
        // naive oracle: rank via fraction-free elimination
        Mat<Rat> M = A;
        int rank = 0;
        for (int j = 0; j < M.nc && rank < M.nr; j++) {
            int piv = -1;
            for (int i = rank; i < M.nr; i++)
                if (!M.at(i, j).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            for (int c = 0; c < M.nc; c++) std::swap(M.a[(size_t)piv * M.nc + c], M.a[(size_t)rank * M.nc + c]);
            Rat inv = M.at(rank, j).inv();
            for (int c = 0; c < M.nc; c++) M.at(rank, c) = M.at(rank, c) * inv;
            for (int i = 0; i < M.nr; i++) {
                if (i == rank) continue;
                Rat f = M.at(i, j);
                if (f.is_zero()) continue;
                for (int c = 0; c < M.nc; c++) M.at(i, c) = M.at(i, c) - f * M.at(rank, c);
            }
            rank++;
        }
        REQUIRE((int)ker.size() == 9 - rank);
        for (auto& v : ker) {
            auto Av = mat_vec(A, v);
            for (auto& x : Av) REQUIRE(x.is_zero());
        }
    }
}

TEST_CASE("kernel basis reductions stay independent over the residue field") {
    // random matrices over Z/5^3 built to have good reduction
    Rng rng(1234);
    auto ctx = make_zmod_ctx(5, 3);
    auto fct = make_zmod_ctx(5, 1);
    for (int trial = 0; trial < 20; trial++) {
        Mat<Zmod> A(4, 7, Zmod(ctx, 0));
        for (int i = 0; i < A.nr; i++)
            for (int j = 0; j < A.nc; j++) A.at(i, j) = Zmod(ctx, rng.mpz_below(ctx->m));
        std::vector<std::vector<Zmod>> ker;
        try {
            ker = kernel_good_reduction(A);
        } catch (const BadReduction&) {
            continue;
        }
        for (auto& v : ker) {
            auto Av = mat_vec(A, v);
            for (auto& x : Av) REQUIRE(x.is_zero());
        }
        // reductions mod 5 independent: rank of the reduced kernel matrix equals its size
        if (!ker.empty()) {
            Mat<Zmod> K((int)ker[0].size(), (int)ker.size(), Zmod(fct, 0));
            for (int j = 0; j < (int)ker.size(); j++)
                for (int i = 0; i < (int)ker[0].size(); i++) K.at(i, j) = ker[j][i].reduce_to(fct);
            REQUIRE(rank_good_reduction(K) == (int)ker.size());
        }
    }
}

TEST_CASE("solve_affine: documented pivot rule fixes the output") {
    auto ctx = make_zmod_ctx(7, 2);
    Mat<Zmod> A(1, 2, Zmod(ctx, 0)); // zero matrix
    std::vector<Zmod> b{Zmod(ctx, 0)};
    std::vector<Zmod> norm{Zmod(ctx, 1), Zmod(ctx, 1)};
    auto lam = solve_affine(A, b, norm, Zmod(ctx, 1), 1);
    REQUIRE(lam.has_value());
    REQUIRE((*lam)[0] == Zmod(ctx, 1));
    REQUIRE((*lam)[1] == Zmod(ctx, 0));
}

TEST_CASE("solve_affine over Z/49 with mod-7 equations") {
    auto ctx = make_zmod_ctx(7, 2);
    Mat<Zmod> A(1, 2, Zmod(ctx, 0));
    A.at(0, 0) = Zmod(ctx, 1); A.at(0, 1) = Zmod(ctx, -1);
    std::vector<Zmod> b{Zmod(ctx, 0)};
    std::vector<Zmod> norm{Zmod(ctx, 1), Zmod(ctx, 1)};
    auto lam = solve_affine(A, b, norm, Zmod(ctx, 1), 1);
    REQUIRE(lam.has_value());
    REQUIRE((*lam)[0] == Zmod(ctx, 4));
    REQUIRE((*lam)[1] == Zmod(ctx, -3));
    // check the two congruences
    REQUIRE(((*lam)[0] - (*lam)[1]).rep() % 7 == 0);
    REQUIRE(((*lam)[0] + (*lam)[1]) == Zmod(ctx, 1));
}

TEST_CASE("solve_affine: inconsistent system fails") {
    auto ctx = make_zmod_ctx(7, 2);
    Mat<Zmod> A(1, 2, Zmod(ctx, 0)); // zero matrix
    std::vector<Zmod> b{Zmod(ctx, 1)};
    std::vector<Zmod> norm{Zmod(ctx, 1), Zmod(ctx, 1)};
    auto lam = solve_affine(A, b, norm, Zmod(ctx, 1), 1);
    REQUIRE(!lam.has_value());
}
