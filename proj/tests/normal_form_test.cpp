#include "pptor/normal_form.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pptor;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

bool is_diagonal_chain(const SmithForm& f) {
    const IntMatrix& s = f.s;
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c) {
            if (r != c && s(r, c) != 0) return false;
            if (r == c && r >= f.rank && s(r, c) != 0) return false;
        }
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (s(i, i) <= 0) return false;
        if (i > 0 && !mpz_divisible_p(s(i, i).get_mpz_t(), s(i - 1, i - 1).get_mpz_t())) return false;
    }
    return true;
}

}  // namespace

TEST(SmithNormalForm, TwoByTwoExample) {
    IntMatrix a{{2, 4}, {6, 8}};
    SmithForm f = smith_normal_form(a);
    EXPECT_EQ(f.s, (IntMatrix{{2, 0}, {0, 4}}));
    EXPECT_EQ(f.u * a * f.v, f.s);
}

TEST(SmithNormalForm, IdentityIsFixed) {
    SmithForm f = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(f.s, IntMatrix::identity(3));
    EXPECT_EQ(f.rank, 3u);
}

TEST(SmithNormalForm, ZeroMatrixKeepsIdentityTransforms) {
    IntMatrix z(2, 3);
    SmithForm f = smith_normal_form(z);
    EXPECT_EQ(f.s, z);
    EXPECT_EQ(f.u, IntMatrix::identity(2));
    EXPECT_EQ(f.v, IntMatrix::identity(3));
    EXPECT_EQ(f.rank, 0u);
}

TEST(SmithNormalForm, RandomMatricesSatisfyPostconditions) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 20);
        SmithForm f = smith_normal_form(a);
        ASSERT_EQ(f.u * a * f.v, f.s) << a.to_string();
        ASSERT_TRUE(is_unimodular(f.u)) << a.to_string();
        ASSERT_TRUE(is_unimodular(f.v)) << a.to_string();
        ASSERT_EQ(f.v * f.v_inverse, IntMatrix::identity(a.cols()));
        ASSERT_TRUE(is_diagonal_chain(f)) << f.s.to_string();
        // Deterministic for a fixed input.
        SmithForm g = smith_normal_form(a);
        ASSERT_EQ(f.u, g.u);
        ASSERT_EQ(f.v, g.v);
    }
}

TEST(SmithNormalForm, ProductOfFactorsIsGcdOfMaximalMinors) {
    // Square nonsingular case: product of invariant factors == |det|.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 4, 9);
        Int det = determinant(a);
        SmithForm f = smith_normal_form(a);
        Int prod = 1;
        for (const auto& d : f.invariant_factors()) prod *= d;
        if (det == 0)
            EXPECT_LT(f.rank, 4u);
        else
            EXPECT_EQ(prod, abs(det));
    }
}

TEST(HermiteNormalForm, UniquePerLattice) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix a = random_matrix(rng, 3, 4, 12);
        // A unimodular recombination plus a redundant row spans the same lattice.
        IntMatrix u = IntMatrix::identity(3);
        u.add_row_multiple(0, 1, 3);
        u.add_row_multiple(2, 0, -2);
        u.swap_rows(1, 2);
        IntMatrix b = u * a;
        IntVector extra(4);
        for (std::size_t c = 0; c < 4; ++c) extra[c] = 2 * a(0, c) - 5 * a(2, c);
        b.append_row(extra);
        EXPECT_EQ(hermite_normal_form(a).basis, hermite_normal_form(b).basis);
    }
}

TEST(HermiteNormalForm, TransformAndMembership) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 3, 10);
        HermiteForm h = hermite_normal_form(a, true);
        IntMatrix th = h.transform * a;
        for (std::size_t r = 0; r < h.rank(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) ASSERT_EQ(th(r, c), h.basis(r, c));
        for (std::size_t r = h.rank(); r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) ASSERT_EQ(th(r, c), 0);
        // A random combination of rows is found again.
        IntVector coeff{Int(trial % 5 - 2), Int(3), Int(-1), Int(trial % 3)};
        IntVector v = multiply(coeff, a);
        auto x = solve_row_combination(a, v);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(multiply(*x, a), v);
    }
}

TEST(HermiteNormalForm, NonMemberRejected) {
    IntMatrix a{{2, 0}, {0, 3}};
    EXPECT_FALSE(solve_row_combination(a, IntVector{Int(1), Int(0)}).has_value());
    EXPECT_TRUE(solve_row_combination(a, IntVector{Int(4), Int(-9)}).has_value());
}

TEST(Kernels, RightKernelAnnihilates) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 2, 5, 6);
        IntMatrix k = right_kernel(a);
        EXPECT_TRUE((a * k.transpose()).is_zero());
        SmithForm f = smith_normal_form(a);
        EXPECT_EQ(k.rows(), a.cols() - f.rank);
    }
}

TEST(Kernels, LatticeIntersectionOfScaledAxes) {
    // 4Z x Z meets 6Z x 2Z in 12Z x 2Z.
    IntMatrix a{{4, 0}, {0, 1}};
    IntMatrix b{{6, 0}, {0, 2}};
    HermiteForm h = lattice_intersection(a, b);
    EXPECT_EQ(h.basis, (IntMatrix{{12, 0}, {0, 2}}));
}
