#include <gtest/gtest.h>

#include "opspec/dsl.hpp"
#include "opspec/error.hpp"
#include "opspec/spectra.hpp"
#include "oracles.hpp"

using namespace opspec;

namespace {

const std::vector<std::string> kCollapsing = {
    "uf", "lf", "f", "uw", "lw", "w", "ub", "lb", "b", "usbf", "lsbf", "bf", "usbw", "lsbw", "bw",
    "usbb", "lsbb", "bb", "gK", "gKR", "gKM", "gD", "pBf", "pBw", "gDR", "gDRJ", "gDRQ", "gDRphi_p",
    "gDRphi_m", "gDRphi", "gDRW_p", "gDRW_m", "gDRW", "gDM", "gDMJ", "gDMQ", "gDMphi_p", "gDMphi_m",
    "gDMphi", "gDMW_p", "gDMW_m", "gDMW", "svep_fail", "svep_adj_fail"};

}  // namespace

TEST(Spectra, UnknownNameRejected) {
    SpectraEngine engine(parse_expr("jordan(0, 1)"));
    EXPECT_THROW(engine.spectrum("kato"), Error);
    EXPECT_TRUE(is_spectrum_name("gDMW_p"));
    EXPECT_EQ(spectrum_names().size(), 47u);
}

TEST(Spectra, IndexCancellation) {
    SpectraEngine engine(parse_expr("shift(const(1)) (+) adj(shift(const(1)))"));
    EXPECT_TRUE(equal(engine.spectrum("w"), Region::circle(0, 1)));
    EXPECT_TRUE(equal(engine.spectrum("b"), Region::closed_disc(0, 1)));
    EXPECT_TRUE(equal(engine.spectrum("svep_fail"), Region::open_disc(0, 1)));
    EXPECT_FALSE(subset(engine.spectrum("svep_fail"), engine.spectrum("w")));
}

TEST(Spectra, HarmonicDiagonal) {
    SpectraEngine engine(parse_expr("diag(harmonic)"));
    EXPECT_TRUE(engine.spectrum("gDM").empty());
    EXPECT_TRUE(equal(engine.spectrum("gD"), Region::points({0})));
    EXPECT_TRUE(equal(engine.spectrum("sigma"), unite(Region::points({0}), Region::sequence(Sequence::harmonic()))));
    EXPECT_TRUE(equal(engine.spectrum("w"), Region::points({0})));
    EXPECT_TRUE(equal(engine.spectrum("b"), engine.spectrum("w")));
}

TEST(Spectra, UnilateralShift) {
    SpectraEngine engine(parse_expr("shift(const(1))"));
    EXPECT_TRUE(equal(engine.spectrum("sigma"), Region::closed_disc(0, 1)));
    EXPECT_TRUE(equal(engine.spectrum("ap"), Region::circle(0, 1)));
    EXPECT_TRUE(equal(engine.spectrum("uf"), Region::circle(0, 1)));
    EXPECT_TRUE(equal(engine.spectrum("w"), Region::closed_disc(0, 1)));
    EXPECT_TRUE(equal(engine.spectrum("svep_adj_fail"), Region::open_disc(0, 1)));
    EXPECT_TRUE(engine.spectrum("svep_fail").empty());
}

// Every spectrum of a matrix except sigma is empty, and sigma is the root set
// of the characteristic polynomial.
TEST(Spectra, FiniteDimensionalCollapse) {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        auto blocks = oracle::planted_blocks(rng, n, static_cast<std::size_t>(rng.uniform(0, std::min<long>(3, static_cast<long>(n)))));
        ExactMatrix p = rng.unimodular(n);
        ExactMatrix m = p * oracle::jordan_matrix(blocks) * p.inverse();
        std::vector<std::pair<GaussianRational, std::size_t>> roots;
        std::vector<GaussianRational> sigma;
        for (const auto& e : oracle::jordan_eigen(blocks)) {
            roots.emplace_back(e.value, e.algebraic);
            sigma.push_back(e.value);
        }
        ASSERT_EQ(oracle::charpoly(m), oracle::poly_from_roots(roots));
        SpectraEngine engine(make_matrix(m));
        EXPECT_TRUE(equal(engine.spectrum("sigma"), Region::points(sigma)));
        for (const auto& name : kCollapsing) EXPECT_TRUE(engine.spectrum(name).empty()) << name << " for " << m.str();
    }
}

TEST(Spectra, LibraryInclusionAudit) {
    for (const auto& inst : instance_library()) {
        for (const auto& chain : inclusion_audit(inst.expr))
            EXPECT_TRUE(chain.holds) << inst.name << ": " << chain.chain << " fails at " << chain.failed_link;
    }
}

TEST(Spectra, AdjointDuality) {
    for (const auto& inst : instance_library()) {
        SpectraEngine t(inst.expr), adj(make_adj(inst.expr));
        EXPECT_TRUE(equal(adj.spectrum("uf"), conjugate(t.spectrum("lf")))) << inst.name;
        EXPECT_TRUE(equal(adj.spectrum("lf"), conjugate(t.spectrum("uf")))) << inst.name;
        EXPECT_TRUE(equal(adj.spectrum("ub"), conjugate(t.spectrum("lb")))) << inst.name;
        EXPECT_TRUE(equal(adj.spectrum("bb"), conjugate(t.spectrum("bb")))) << inst.name;
        EXPECT_TRUE(equal(adj.spectrum("sigma"), conjugate(t.spectrum("sigma")))) << inst.name;
        EXPECT_TRUE(equal(adj.spectrum("w"), conjugate(t.spectrum("w")))) << inst.name;
    }
}

TEST(Spectra, MonotoneFormulaCoherence) {
    for (const auto& inst : instance_library()) {
        SpectraEngine engine(inst.expr);
        Region bb = engine.spectrum("bb");
        // acc computed independently from the pointwise Drazin spectrum.
        EXPECT_TRUE(equal(engine.spectrum("gDM"), unite(engine.spectrum("gKM"), acc(bb)))) << inst.name;
        EXPECT_TRUE(equal(engine.spectrum("gDMphi"), unite(engine.spectrum("gDMphi_p"), engine.spectrum("gDMphi_m"))));
    }
}

TEST(Spectra, MemoizationIsTransparent) {
    for (const auto& inst : instance_library()) {
        SpectraEngine cached(inst.expr, true), fresh(inst.expr, false);
        for (const auto& name : spectrum_names()) {
            Region a = cached.spectrum(name);
            EXPECT_TRUE(a == cached.spectrum(name));
            EXPECT_TRUE(a == fresh.spectrum(name)) << inst.name << " " << name;
        }
    }
}

TEST(Spectra, GdrVariantsComputed) {
    SpectraEngine engine(parse_expr("diag(harmonic)"));
    auto cmp = compare_gdr_variants(engine);
    EXPECT_EQ(cmp.size(), 9u);
    // The Browder base b = {0} has no accumulation points either.
    for (const auto& c : cmp) EXPECT_TRUE(c.equal) << c.name;
}
