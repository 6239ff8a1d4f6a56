#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rootpoly/exactlin.hpp"

using namespace rootpoly;

namespace {

IMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IMat m(r, c);
    for (auto& x : m.data) x = d(rng);
    return m;
}

} // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(IMat::identity(3)) == 1);
    IMat unitri(2, 2);
    unitri.at(0, 0) = 1;
    unitri.at(0, 1) = 1;
    unitri.at(1, 1) = 1;
    CHECK(determinant(unitri) == 1);
    IMat rect(2, 3);
    CHECK_THROWS_AS(determinant(rect), DomainError);
}

TEST_CASE("determinant matches cofactor oracle on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + t % 5;
        IMat m = random_matrix(rng, n, n, -5, 5);
        CHECK(determinant(m) == oracle::cofactor_determinant(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + t % 4;
        IMat a = random_matrix(rng, n, n, -4, 4);
        IMat b = random_matrix(rng, n, n, -4, 4);
        CHECK(determinant(mul(a, b)) == determinant(a) * determinant(b));
    }
}

TEST_CASE("smith normal form on the named examples") {
    SUBCASE("zero matrix") {
        IMat z(2, 2);
        SmithForm f = smith_normal_form(z);
        CHECK(f.rank == 0);
        for (const Int& x : f.d.data) CHECK(x == 0);
    }
    SUBCASE("diag(2,3) becomes diag(1,6)") {
        IMat m(2, 2);
        m.at(0, 0) = 2;
        m.at(1, 1) = 3;
        SmithForm f = smith_normal_form(m);
        CHECK(f.d.at(0, 0) == 1);
        CHECK(f.d.at(1, 1) == 6);
    }
    SUBCASE("identity stays identity") {
        SmithForm f = smith_normal_form(IMat::identity(4));
        for (std::size_t i = 0; i < 4; ++i) CHECK(f.d.at(i, i) == 1);
    }
}

TEST_CASE("smith normal form reconstructs and is unimodular") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + t % 4, c = 1 + (t / 2) % 5;
        IMat m = random_matrix(rng, r, c, -6, 6);
        SmithForm f = smith_normal_form(m);
        Int du = determinant(f.u), dv = determinant(f.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        IMat umv = mul(mul(f.u, m), f.v);
        for (std::size_t i = 0; i < umv.rows; ++i)
            for (std::size_t j = 0; j < umv.cols; ++j) {
                if (i == j) continue;
                CHECK(umv.at(i, j) == 0);
            }
        for (std::size_t i = 0; i < f.d.rows; ++i)
            for (std::size_t j = 0; j < f.d.cols; ++j) CHECK(umv.at(i, j) == f.d.at(i, j));
        // divisibility chain
        auto diag = f.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] == 0) continue;
            CHECK(diag[i] != 0);
            CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
}

TEST_CASE("solve_rational") {
    SUBCASE("identity system returns the rhs") {
        QMat a(3, 3);
        for (int i = 0; i < 3; ++i) a.at(i, i) = 1;
        QVec b{Rat(1, 2), Rat(-3), Rat(7, 5)};
        auto x = solve_rational(a, b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SUBCASE("inconsistent system 0 x = 1") {
        QMat a(1, 1);
        QVec b{Rat(1)};
        CHECK_FALSE(solve_rational(a, b).has_value());
    }
    SUBCASE("random invertible systems match the Cramer oracle") {
        std::mt19937_64 rng(17);
        int done = 0;
        while (done < 20) {
            IMat m = random_matrix(rng, 3, 3, -5, 5);
            if (oracle::cofactor_determinant(m) == 0) continue;
            std::uniform_int_distribution<int> d(-5, 5);
            IVec b(3);
            for (auto& x : b) x = d(rng);
            QMat qa(3, 3);
            for (std::size_t i = 0; i < 9; ++i) qa.data[i] = Rat(m.data[i]);
            auto x = solve_rational(qa, to_qvec(b));
            REQUIRE(x.has_value());
            CHECK(*x == oracle::cramer_solve(m, b));
            ++done;
        }
    }
    SUBCASE("substituting a returned solution reproduces the rhs") {
        std::mt19937_64 rng(19);
        for (int t = 0; t < 20; ++t) {
            std::size_t r = 1 + t % 4, c = 1 + (t / 3) % 4;
            IMat m = random_matrix(rng, r, c, -4, 4);
            QMat qa(r, c);
            for (std::size_t i = 0; i < m.data.size(); ++i) qa.data[i] = Rat(m.data[i]);
            std::uniform_int_distribution<int> d(-3, 3);
            QVec xs(c);
            for (auto& x : xs) x = Rat(d(rng));
            QVec b = mul(qa, xs);
            auto sol = solve_rational(qa, b);
            REQUIRE(sol.has_value());
            CHECK(mul(qa, *sol) == b);
        }
    }
}

TEST_CASE("lattice_rank") {
    IMat z(3, 4);
    CHECK(lattice_rank(z) == 0);
    CHECK(lattice_rank(IMat::identity(5)) == 5);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        IMat m = random_matrix(rng, 2 + t % 4, 2 + (t / 2) % 4, -3, 3);
        CHECK(lattice_rank(m) == oracle::gauss_rank(m));
    }
}

TEST_CASE("integer kernel and saturation") {
    // kernel of (2 4) is spanned by (2, -1)
    IMat m(1, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    auto ker = integer_kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(dot(ker[0], IVec{2, 4}) == 0);
    CHECK(content(ker[0]) == 1);

    // saturation of the row lattice of (2 0; 0 3) is all of Z^2
    IMat d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    auto sat = saturated_row_basis(d);
    REQUIRE(sat.size() == 2);
    IMat sm = IMat::from_rows(sat);
    Int det = determinant(sm);
    CHECK((det == 1 || det == -1));
}

TEST_CASE("in_lattice coordinates") {
    std::vector<IVec> basis{{1, 0, 1}, {0, 1, 1}};
    auto c = in_lattice(basis, IVec{2, 3, 5});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 3);
    CHECK_FALSE(in_lattice(basis, IVec{0, 0, 1}).has_value());
}
