#include <gtest/gtest.h>

#include "opspec/error.hpp"
#include "opspec/matrix.hpp"
#include "opspec/random.hpp"

using opspec::ExactMatrix;
using opspec::GaussianRational;
using opspec::Rational;

TEST(Scalar, ParseRational) {
    EXPECT_EQ(opspec::parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(opspec::parse_rational("7"), Rational(7));
    EXPECT_THROW(opspec::parse_rational("1/0"), opspec::Error);
    EXPECT_THROW(opspec::parse_rational("abc"), opspec::Error);
}

TEST(Scalar, GaussianArithmetic) {
    GaussianRational z(Rational(1), Rational(2));
    GaussianRational w(Rational(3), Rational(-1));
    EXPECT_EQ(z * w, GaussianRational(Rational(5), Rational(5)));
    EXPECT_EQ((z / w) * w, z);
    EXPECT_EQ(z.norm(), Rational(5));
    EXPECT_EQ(z.conj(), GaussianRational(Rational(1), Rational(-2)));
    EXPECT_EQ(GaussianRational::parse(z.str()), z);
    EXPECT_EQ(GaussianRational::parse("-1/2"), GaussianRational(Rational(-1, 2)));
}

TEST(Matrix, InverseRoundTrip) {
    opspec::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        ExactMatrix u = rng.unimodular(n, 2);
        EXPECT_EQ(u * u.inverse(), ExactMatrix::identity(n));
        EXPECT_EQ(u.determinant().norm(), Rational(1));
    }
    EXPECT_THROW((ExactMatrix{{1, 2}, {2, 4}}).inverse(), opspec::Error);
}

TEST(Matrix, RankNullity) {
    opspec::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 7));
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
        ExactMatrix a = rng.matrix(n, r, 3, true) * rng.matrix(r, n, 3, true);
        ExactMatrix ker = a.kernel_basis();
        EXPECT_EQ(a.rank() + ker.cols(), n);
        EXPECT_TRUE((a * ker).is_zero());
        EXPECT_EQ(a.column_basis().cols(), a.rank());
        EXPECT_LE(a.rank(), r);
    }
}

TEST(Matrix, Nilpotency) {
    ExactMatrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    EXPECT_TRUE(n.is_nilpotent());
    EXPECT_EQ(n.nilpotency_degree(), 3u);
    EXPECT_FALSE(ExactMatrix::identity(2).is_nilpotent());
    EXPECT_EQ(ExactMatrix::identity(2).nilpotency_degree(), 0u);
}

TEST(Matrix, ConjugateTranspose) {
    ExactMatrix a{{GaussianRational(Rational(1), Rational(1)), 2}, {3, 4}};
    ExactMatrix h = a.conjugate_transpose();
    EXPECT_EQ(h(0, 0), GaussianRational(Rational(1), Rational(-1)));
    EXPECT_EQ(h(0, 1), GaussianRational(3));
    EXPECT_EQ(h.conjugate_transpose(), a);
}
