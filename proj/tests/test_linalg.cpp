#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfa/linalg.hpp"

using namespace pfa;

namespace {

IntMat random_mat(int r, int c, int span, std::mt19937_64& rng) {
    IntMat m(r, c);
    std::uniform_int_distribution<int> d(-span, span);
    for (auto& v : m.a) v = d(rng);
    return m;
}

bool is_zero(const std::vector<i64>& v) {
    for (i64 x : v)
        if (x) return false;
    return true;
}

}  // namespace

TEST_CASE("smith normal form reconstructs the matrix") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        IntMat a = random_mat(r, c, 4, rng);
        SmithResult s = smith_normal_form(a);
        // U A V = D
        IntMat d = mat_mul(mat_mul(s.u, a), s.v);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                CHECK(d.at(i, j) == (i == j && i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0));
        // divisibility chain
        for (size_t k = 0; k + 1 < s.diag.size(); ++k)
            if (s.diag[k] != 0 && s.diag[k + 1] != 0) CHECK(s.diag[k + 1] % s.diag[k] == 0);
        // U * U_inv = I
        IntMat uu = mat_mul(s.u, s.u_inv);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) CHECK(uu.at(i, j) == (i == j ? 1 : 0));
    }
}

TEST_CASE("integer kernel spans exactly the null space") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 7);
        IntMat a = random_mat(r, c, 3, rng);
        IntMat k = integer_kernel(a);
        // every kernel column is annihilated
        for (int j = 0; j < k.cols; ++j)
            for (int i = 0; i < r; ++i) {
                i64 s = 0;
                for (int l = 0; l < c; ++l) s += a.at(i, l) * k.at(l, j);
                CHECK(s == 0);
            }
        // rank-nullity over Q
        RowEchelon e(c);
        for (int i = 0; i < r; ++i) {
            std::vector<i64> row(c);
            for (int l = 0; l < c; ++l) row[l] = a.at(i, l);
            e.add_row(row);
        }
        CHECK(e.rank() + k.cols == c);
    }
}

TEST_CASE("kernel saturation: primitive vectors in the null space are hit") {
    // A = [2 -1 0; 0 1 -2] has kernel spanned by (1,2,1)
    IntMat a(2, 3);
    a.at(0, 0) = 2; a.at(0, 1) = -1;
    a.at(1, 1) = 1; a.at(1, 2) = -2;
    IntMat k = integer_kernel(a);
    REQUIRE(k.cols == 1);
    CHECK(std::abs(k.at(0, 0)) == 1);
    CHECK(std::abs(k.at(1, 0)) == 2);
    CHECK(std::abs(k.at(2, 0)) == 1);
}

TEST_CASE("solve_integer") {
    IntMat a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 0;
    a.at(1, 0) = 0; a.at(1, 1) = 3;
    std::vector<i64> x;
    CHECK(solve_integer(a, {4, 9}, x));
    CHECK(x == std::vector<i64>{2, 3});
    CHECK_FALSE(solve_integer(a, {1, 0}, x));
}

TEST_CASE("kernel_mod") {
    // {t : 2t = 0 mod 8} = 4Z
    IntMat a(1, 1);
    a.at(0, 0) = 2;
    IntMat k = kernel_mod(a, 8);
    REQUIRE(k.cols == 1);
    CHECK(std::abs(k.at(0, 0)) == 4);

    // {(s,t) : s + t = 0 mod 2} contains (1,1) and (2,0)
    IntMat b(1, 2);
    b.at(0, 0) = 1; b.at(0, 1) = 1;
    IntMat kb = kernel_mod(b, 2);
    // lattice must contain (1,1); check by solving
    std::vector<i64> coeff;
    CHECK(solve_integer(kb, {1, 1}, coeff));
    CHECK(solve_integer(kb, {2, 0}, coeff));
    CHECK_FALSE(solve_integer(kb, {1, 0}, coeff));
}

TEST_CASE("Fp echelon rank and kernel") {
    std::mt19937_64 rng(13);
    const i64 p = 13;
    for (int trial = 0; trial < 20; ++trial) {
        int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8);
        IntMat a = random_mat(r, c, 20, rng);
        FpEchelon e(c, p);
        for (int i = 0; i < r; ++i) {
            std::vector<i64> row(c);
            for (int l = 0; l < c; ++l) row[l] = a.at(i, l);
            e.add_row(row);
        }
        IntMat k = e.kernel();
        CHECK(e.rank() + k.cols == c);
        for (int j = 0; j < k.cols; ++j) {
            std::vector<i64> prod(r, 0);
            for (int i = 0; i < r; ++i)
                for (int l = 0; l < c; ++l) prod[i] += a.at(i, l) * k.at(l, j);
            for (auto& v : prod) v %= p;
            CHECK(is_zero(prod));
        }
        // reduce() sends row-space vectors to zero
        std::vector<i64> combo(c, 0);
        for (int i = 0; i < r; ++i)
            for (int l = 0; l < c; ++l) combo[l] += a.at(i, l) * static_cast<i64>(1 + i % 3);
        e.reduce(combo);
        CHECK(is_zero(combo));
    }
}
