#include <gtest/gtest.h>

#include "opspec/cline.hpp"
#include "opspec/drazin.hpp"
#include "opspec/error.hpp"
#include "opspec/random.hpp"

using opspec::ExactMatrix;

TEST(Cline, ClassicRandomPairs) {
    opspec::Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
        ExactMatrix a = rng.matrix(n, r, 2) * rng.matrix(r, n, 2);
        ExactMatrix b = rng.matrix(n, n, 2, true);
        ExactMatrix ba_d = opspec::cline_classic(a, b);
        // symmetric formula with roles exchanged
        EXPECT_EQ(opspec::cline_classic(b, a), opspec::drazin(a * b).inverse);
        EXPECT_TRUE(opspec::check_drazin_axioms(b * a, ba_d, opspec::drazin_index(b * a)).ok());
    }
}

TEST(Cline, FamiliesSatisfyConstraint) {
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& fam : opspec::pair_families()) {
            if (fam == "solve_k1" && k != 1) {
                EXPECT_THROW(opspec::generate_pair(k, fam, 1), opspec::Error);
                continue;
            }
            for (std::uint64_t seed = 0; seed < 6; ++seed) {
                auto p = opspec::generate_pair(k, fam, seed);
                ExactMatrix ak = p.a.pow(k);
                EXPECT_EQ(ak * p.b.pow(k) * ak, ak * p.a);
                auto res = opspec::gen_cline(p);
                EXPECT_EQ(res.bkak_drazin, opspec::drazin(p.bk_ak()).inverse);
            }
        }
}

TEST(Cline, GeneratorIsDeterministic) {
    auto p = opspec::generate_pair(2, "mixed", 9);
    auto q = opspec::generate_pair(2, "mixed", 9);
    EXPECT_EQ(p.a, q.a);
    EXPECT_EQ(p.b, q.b);
}

TEST(Cline, ConstraintViolationRejected) {
    opspec::ConstraintPair p;
    p.k = 1;
    p.a = ExactMatrix{{1, 0}, {0, 1}};
    p.b = ExactMatrix{{2, 0}, {0, 2}};
    try {
        opspec::gen_cline(p);
        FAIL();
    } catch (const opspec::Error& e) {
        EXPECT_EQ(e.code(), "constraint-violated");
    }
}

TEST(Cline, ForwardAndConverseIdentities) {
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& fam : opspec::pair_families()) {
            if (fam == "solve_k1" && k != 1) continue;
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                auto p = opspec::generate_pair(k, fam, seed);
                auto fwd = opspec::gdm_forward(p, opspec::GDInverseData::from(p.a, opspec::drazin(p.a).inverse));
                EXPECT_TRUE(fwd.ok()) << fam << " k=" << k << " seed=" << seed;
                ExactMatrix bkak = p.bk_ak();
                auto conv = opspec::gdm_converse(p, opspec::GDInverseData::from(bkak, opspec::drazin(bkak).inverse));
                EXPECT_TRUE(conv.ok()) << fam << " k=" << k << " seed=" << seed;
            }
        }
}

TEST(Cline, NilpotentFamilyDegreeBound) {
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto p = opspec::generate_pair(k, "nilpotent", seed);
            ExactMatrix t = opspec::drazin(p.a).inverse;
            ExactMatrix q = ExactMatrix::identity(p.a.rows()) - p.a * t;
            ExactMatrix qa = q * p.a;
            ExactMatrix prod = p.b.pow(k) * qa.pow(k);
            ASSERT_TRUE(prod.is_nilpotent());
            EXPECT_LE(prod.nilpotency_degree(), k * qa.nilpotency_degree());
        }
}

TEST(Cline, NonCommutingInverseRejected) {
    ExactMatrix t{{0, 0}, {1, 0}};
    opspec::ConstraintPair q;
    q.k = 1;
    q.a = ExactMatrix{{0, 1}, {0, 0}};
    q.b = q.a;
    EXPECT_THROW(opspec::gdm_forward(q, opspec::GDInverseData::from(q.a, t)), opspec::Error);
}
