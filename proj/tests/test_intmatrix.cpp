#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "sfthom/intmatrix.hpp"

using namespace sfthom;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(test_rng());
    return m;
}

void check_snf(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.D);
    CHECK(f.U * f.Uinv == IntMatrix::identity(m.rows()));
    CHECK(f.V * f.Vinv == IntMatrix::identity(m.cols()));
    Int du = f.U.det(), dv = f.V.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(f.D(i, i) >= 0);
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && i < f.D.rows() && j < f.D.cols() && !(i < n && j < n && i == j))
                CHECK(f.D(i, j) == (i == j ? f.D(i, j) : Int(0)));
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (f.D(i, i) != 0 && f.D(i + 1, i + 1) != 0) CHECK(f.D(i + 1, i + 1) % f.D(i, i) == 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (f.D(i, i) == 0) CHECK(f.D(i + 1, i + 1) == 0);
    CHECK(f.rank() == m.rank());
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    SmithForm f2 = smith_normal_form(IntMatrix{{2}});
    CHECK(f2.D == IntMatrix{{2}});

    SmithForm fg = smith_normal_form(IntMatrix{{1, 1}, {1, 1}});
    CHECK(fg.D == IntMatrix{{1, 0}, {0, 0}});

    IntMatrix id = IntMatrix::identity(3);
    SmithForm fi = smith_normal_form(id);
    CHECK(fi.D == id);
    CHECK(fi.U == id);
    CHECK(fi.V == id);
}

TEST_CASE("smith normal form properties on random matrices") {
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        IntMatrix m = random_matrix(dim(test_rng()), dim(test_rng()), -9, 9);
        check_snf(m);
    }
    check_snf(IntMatrix::zero(3, 4));
    check_snf(IntMatrix{{0, 0}, {0, 0}});
    // Coefficient growth exercise.
    check_snf(IntMatrix{{840, 841, 0}, {841, 840, 839}, {0, 839, 840}});
}

TEST_CASE("kernel and image lattices") {
    IntMatrix m{{1, 1}, {1, 1}};
    IntMatrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());

    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        IntMatrix a = random_matrix(dim(test_rng()), dim(test_rng()), -4, 4);
        IntMatrix ker = kernel_basis(a);
        CHECK((a * ker).is_zero());
        CHECK(ker.cols() == a.cols() - a.rank());
        IntMatrix im = image_basis(a);
        CHECK(im.cols() == a.rank());
        // every column of a lies in the image lattice, and vice versa
        for (std::size_t c = 0; c < a.cols(); ++c) {
            std::vector<Int> col(a.rows());
            for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a(i, c);
            CHECK(lattice_contains(im, col));
        }
        for (std::size_t c = 0; c < im.cols(); ++c) {
            std::vector<Int> col(im.rows());
            for (std::size_t i = 0; i < im.rows(); ++i) col[i] = im(i, c);
            std::vector<Int> x;
            CHECK(solve(a, col, x));
        }
    }
}

TEST_CASE("exact solve") {
    IntMatrix m{{2, 0}, {0, 3}};
    std::vector<Int> x;
    CHECK(solve(m, {4, 9}, x));
    CHECK(x == std::vector<Int>{2, 3});
    CHECK_FALSE(solve(m, {1, 3}, x));

    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        IntMatrix a = random_matrix(dim(test_rng()), dim(test_rng()), -5, 5);
        IntMatrix w = random_matrix(a.cols(), 1, -3, 3);
        std::vector<Int> b = a.apply(w.apply(std::vector<Int>{1}));
        std::vector<Int> sol;
        REQUIRE(solve(a, b, sol));
        CHECK(a.apply(sol) == b);
    }
}

TEST_CASE("lattice canonical form identifies equal lattices") {
    IntMatrix a{{2, 0}, {0, 2}};
    IntMatrix b{{2, 2}, {2, 0}};  // same index-4 sublattice of Z^2
    CHECK(lattice_canonical(a) == lattice_canonical(b));
    IntMatrix c{{2, 0}, {0, 4}};
    CHECK(lattice_canonical(a) != lattice_canonical(c));

    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = random_matrix(4, 3, -4, 4);
        // Column operations do not change the lattice.
        IntMatrix m2 = m;
        for (std::size_t i = 0; i < m2.rows(); ++i) m2(i, 0) += 2 * m2(i, 1) - m2(i, 2);
        CHECK(lattice_canonical(m) == lattice_canonical(m2));
    }
}

TEST_CASE("determinant and power") {
    CHECK(IntMatrix{{1, 2}, {3, 4}}.det() == -2);
    CHECK(IntMatrix::identity(4).det() == 1);
    IntMatrix b{{1, 1}, {1, 1}};
    CHECK(b.pow(0) == IntMatrix::identity(2));
    CHECK(b.pow(3) == IntMatrix{{4, 4}, {4, 4}});
}
