#include <gtest/gtest.h>

#include <functional>

#include "opspec/error.hpp"
#include "opspec/random.hpp"
#include "opspec/region.hpp"

using namespace opspec;

namespace {

GaussianRational gr(long re, long im = 0, long den = 1) {
    Rational a(re, den), b(im, den);
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

/// Direct membership predicate of a random primitive, evaluated without Region.
struct Oracle {
    std::function<bool(const GaussianRational&)> contains;
    Region region;
};

Rational dist2(const GaussianRational& a, const GaussianRational& b) { return (a - b).norm(); }

Oracle random_primitive(Rng& rng) {
    GaussianRational c(rng.uniform(-2, 2), rng.uniform(-2, 2));
    Rational r2(rng.uniform(1, 9), rng.uniform(1, 2));
    r2.canonicalize();
    switch (rng.uniform(0, 5)) {
        case 0: {
            std::vector<GaussianRational> pts;
            for (int i = 0; i < 3; ++i) pts.push_back(gr(rng.uniform(-8, 8), rng.uniform(-8, 8), 2));
            return {[pts](const GaussianRational& z) { return std::find(pts.begin(), pts.end(), z) != pts.end(); },
                    Region::points(pts)};
        }
        case 1: {
            Sequence s = Sequence::harmonic(c, gr(rng.uniform(1, 2), rng.uniform(-1, 1)), 1);
            return {[s](const GaussianRational& z) {
                        GaussianRational w = (z - s.limit()) / s.scale();
                        if (!w.is_real() || sgn(w.re()) <= 0) return false;
                        Rational inv = 1 / w.re();
                        return inv.get_den() == 1;
                    },
                    Region::sequence(s)};
        }
        case 2:
            return {[c, r2](const GaussianRational& z) { return dist2(z, c) == r2; }, Region::circle(c, r2)};
        case 3:
            return {[c, r2](const GaussianRational& z) { return dist2(z, c) <= r2; }, Region::closed_disc(c, r2)};
        case 4:
            return {[c, r2](const GaussianRational& z) { return dist2(z, c) < r2; }, Region::open_disc(c, r2)};
        default: {
            Rational in2 = r2 / 4;
            return {[c, r2, in2](const GaussianRational& z) { return dist2(z, c) <= r2 && dist2(z, c) >= in2; },
                    Region::annulus(c, in2, r2)};
        }
    }
}

std::vector<GaussianRational> sample_points(Rng& rng, const std::vector<Region>& regions) {
    std::vector<GaussianRational> pts;
    for (int i = 0; i < 120; ++i) pts.push_back(gr(rng.uniform(-24, 24), rng.uniform(-24, 24), 4));
    for (const auto& r : regions)
        for (const auto& p : r.pieces()) {
            if (p.is_points())
                for (const auto& z : p.points()) pts.push_back(z);
            if (p.is_sequence())
                for (long n = p.sequence().start(); n < p.sequence().start() + 6; ++n) pts.push_back(p.sequence().point(n));
            if (p.is_cell())
                for (const auto& k : p.cell().constraints) {
                    // rational points on the circle when r2 is a square: center +- r, center +- r i
                    if (is_rational_square(k.circle.r2)) {
                        mpz_class num, den;
                        mpz_sqrt(num.get_mpz_t(), k.circle.r2.get_num_mpz_t());
                        mpz_sqrt(den.get_mpz_t(), k.circle.r2.get_den_mpz_t());
                        Rational r(num, den);
                        for (auto d : {GaussianRational(r), GaussianRational(-r), GaussianRational(0, r)})
                            pts.push_back(k.circle.center + d);
                    }
                    pts.push_back(k.circle.center);
                }
        }
    return pts;
}

}  // namespace

TEST(Region, SpecExamples) {
    EXPECT_TRUE(member(Region::closed_disc(0, 1), gr(1, 0, 2)));
    EXPECT_FALSE(member(Region::circle(0, 1), gr(1, 0, 2)));
    Region h = Region::sequence(Sequence::harmonic());
    EXPECT_TRUE(member(h, gr(1, 0, 3)));
    EXPECT_FALSE(member(h, GaussianRational(Rational(2, 5))));
    EXPECT_EQ(unite(Region(), Region::closed_disc(0, 1)), Region::closed_disc(0, 1));
    EXPECT_EQ(unite(Region::points({gr(1, 0, 2)}), Region::closed_disc(0, 1)), Region::closed_disc(0, 1));
    EXPECT_EQ(unite(Region::circle(0, 1), Region::closed_disc(0, 1)), Region::closed_disc(0, 1));
    EXPECT_TRUE(acc(Region::points({1, 2, 3})).empty());
    Region hz = unite(h, Region::points({0}));
    EXPECT_EQ(acc(hz), Region::points({0}));
    EXPECT_EQ(acc(Region::closed_disc(0, 1)), Region::closed_disc(0, 1));
    EXPECT_EQ(iso(Region::points({1, 2})), Region::points({1, 2}));
    EXPECT_EQ(iso(hz), h);
    EXPECT_TRUE(iso(Region::closed_disc(0, 1)).empty());
    EXPECT_TRUE(equal(Region::closed_disc(0, 1), unite(Region::open_disc(0, 1), Region::circle(0, 1))));
    EXPECT_TRUE(subset(Region::circle(0, 1), Region::closed_disc(0, 1)));
    EXPECT_FALSE(equal(Region::points({gr(1, 0, 2)}), Region::points({gr(1, 0, 3)})));
    EXPECT_TRUE(equal(conjugate(Region::closed_disc(0, 1)), Region::closed_disc(0, 1)));
    EXPECT_EQ(affine(Region::points({1}), 2, 1), Region::points({3}));
    EXPECT_EQ(affine(Region::closed_disc(0, 1), gr(1, 1), 0), Region::closed_disc(0, 2));
}

TEST(Region, NormalizationMergesCells) {
    Region disc = unite(Region::open_disc(0, 1), Region::circle(0, 1));
    EXPECT_EQ(disc, Region::closed_disc(0, 1));
    Region ann = unite(Region::open_disc(0, 1), Region::annulus(0, 1, 4));
    EXPECT_EQ(ann, Region::closed_disc(0, 4));
    EXPECT_EQ(Region::annulus(1, 2, 2), Region::circle(1, 2));
    EXPECT_EQ(Region::annulus(1, 0, 2), Region::closed_disc(1, 2));
    // a point inside the disc is absorbed, one outside is kept
    Region mixed = unite(Region::closed_disc(0, 1), Region::points({gr(1, 0, 2), 3}));
    EXPECT_EQ(mixed, unite(Region::closed_disc(0, 1), Region::points({3})));
}

TEST(Region, SequenceAbsorption) {
    Region h = Region::sequence(Sequence::harmonic());
    // 1 and 1/2 lie outside the disc of radius 2/5; the tail is inside
    Region u = unite(h, Region::closed_disc(0, Rational(4, 25)));
    EXPECT_TRUE(equal(u, unite(Region::points({1, gr(1, 0, 2)}), Region::closed_disc(0, Rational(4, 25)))));
    EXPECT_EQ(u, unite(Region::points({1, gr(1, 0, 2)}), Region::closed_disc(0, Rational(4, 25))));
    // removing the first two points from the sequence
    Region tail = Region::sequence(Sequence::harmonic(0, 1, 3));
    EXPECT_TRUE(subset(tail, h));
    EXPECT_FALSE(subset(h, tail));
    EXPECT_TRUE(equal(unite(tail, Region::points({1, gr(1, 0, 2)})), h));
}

TEST(Region, SequenceComparisons) {
    Sequence h = Sequence::harmonic();
    Sequence h3 = Sequence::harmonic(0, 1, 3);
    EXPECT_TRUE(subset(Region::sequence(h3), Region::sequence(h)));
    // {2/m} meets {1/n} in every other element, which is not eventually constant
    EXPECT_THROW(subset(Region::sequence(h), Region::sequence(Sequence::harmonic(0, 2))), Error);
    Sequence g = Sequence::geometric(Rational(1, 2));
    Sequence g4 = Sequence::geometric(Rational(1, 2), 0, Rational(1, 4));
    EXPECT_TRUE(subset(Region::sequence(g4), Region::sequence(g)));
    EXPECT_TRUE(equal(unite(Region::sequence(g4), Region::points({1, gr(1, 0, 2)})), Region::sequence(g)));
    // opposite rays never meet
    EXPECT_FALSE(subset(Region::sequence(Sequence::harmonic(0, -1)), Region::sequence(h)));
    // harmonic and geometric with a common limit on a common ray are not decided
    try {
        subset(Region::sequence(h), Region::sequence(g));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "incomparable-sequences");
    }
}

TEST(Region, DegenerateArrangementRejected) {
    try {
        equal(Region::closed_disc(0, 1), Region::closed_disc(2, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "degenerate-arrangement");
    }
}

TEST(Region, IrrationalVertices) {
    // |z|^2 = 1 and |z-1|^2 = 1 cross at 1/2 +- i sqrt(3)/2
    Region a = Region::closed_disc(0, 1);
    Region b = Region::closed_disc(1, 1);
    Region lens = Region::cell(CellShape{{{Circle{0, 1}, kIn | kOn}, {Circle{1, 1}, kIn | kOn}}});
    EXPECT_TRUE(subset(lens, a));
    EXPECT_TRUE(subset(lens, b));
    EXPECT_FALSE(subset(a, lens));
    Region vertices = Region::cell(CellShape{{{Circle{0, 1}, kOn}, {Circle{1, 1}, kOn}}});
    EXPECT_TRUE(subset(vertices, lens));
    EXPECT_TRUE(acc(vertices).empty());
    EXPECT_TRUE(equal(iso(vertices), vertices));
    EXPECT_TRUE(equal(unite(a, b), unite(b, a)));
}

TEST(Region, FuzzUnionMembership) {
    Rng rng(99);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        Oracle a = random_primitive(rng);
        Oracle b = random_primitive(rng);
        Region u;
        try {
            u = unite(a.region, b.region);
        } catch (const Error& e) {
            ASSERT_TRUE(e.code() == "degenerate-arrangement" || e.code() == "incomparable-sequences") << e.what();
            continue;
        }
        for (const auto& z : sample_points(rng, {a.region, b.region})) {
            ASSERT_EQ(member(a.region, z), a.contains(z)) << a.region.str() << " at " << z.str();
            ASSERT_EQ(member(u, z), a.contains(z) || b.contains(z)) << u.str() << " at " << z.str();
        }
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Region, FuzzAlgebraicLaws) {
    Rng rng(7);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Oracle a = random_primitive(rng), b = random_primitive(rng), c = random_primitive(rng);
        try {
            Region ab = unite(a.region, b.region);
            Region abc = unite(ab, c.region);
            EXPECT_TRUE(equal(ab, unite(b.region, a.region)));
            EXPECT_TRUE(subset(a.region, ab));
            EXPECT_TRUE(equal(abc, unite(a.region, unite(b.region, c.region))));
            EXPECT_EQ(subset(ab, c.region) && subset(c.region, ab), equal(ab, c.region));
            // acc is idempotent up to inclusion
            EXPECT_TRUE(subset(acc(acc(abc)), acc(abc)));
            // iso and acc recover the region pointwise
            Region back = unite(iso(abc), acc(abc));
            for (const auto& z : sample_points(rng, {abc}))
                if (member(abc, z)) ASSERT_TRUE(member(back, z)) << abc.str() << " at " << z.str();
            EXPECT_TRUE(subset(abc, back));
            // affine round trip
            GaussianRational m(rng.uniform(1, 3), rng.uniform(-2, 2));
            GaussianRational d(rng.uniform(-3, 3), rng.uniform(-3, 3));
            Region moved = affine(abc, m, d);
            EXPECT_TRUE(equal(affine(moved, m.inverse(), -d / m), abc));
            EXPECT_TRUE(equal(conjugate(conjugate(abc)), abc));
            Region mirrored = conjugate(abc);
            for (const auto& z : sample_points(rng, {abc})) {
                ASSERT_EQ(member(moved, m * z + d), member(abc, z));
                ASSERT_EQ(member(mirrored, z.conj()), member(abc, z));
            }
            ++checked;
        } catch (const Error& e) {
            ASSERT_TRUE(e.code() == "degenerate-arrangement" || e.code() == "incomparable-sequences") << e.what();
        }
    }
    EXPECT_GT(checked, 60);
}

TEST(Region, EqualAgreesWithSampling) {
    Rng rng(1234);
    for (int trial = 0; trial < 80; ++trial) {
        Oracle a = random_primitive(rng), b = random_primitive(rng);
        try {
            Region ra = unite(a.region, b.region);
            Region rb = b.region;
            bool eq = equal(ra, rb);
            bool differs = false;
            for (const auto& z : sample_points(rng, {ra, rb}))
                if (member(ra, z) != member(rb, z)) differs = true;
            if (differs) EXPECT_FALSE(eq);
            if (eq) EXPECT_FALSE(differs);
        } catch (const Error& e) {
            ASSERT_TRUE(e.code() == "degenerate-arrangement" || e.code() == "incomparable-sequences") << e.what();
        }
    }
}
