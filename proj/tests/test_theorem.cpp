#include <gtest/gtest.h>

#include "opspec/dsl.hpp"
#include "opspec/error.hpp"
#include "opspec/random.hpp"
#include "opspec/theorem.hpp"
#include "opspec/transfer.hpp"

using namespace opspec;

namespace {

std::vector<bool> values(const TheoremReport& r) {
    std::vector<bool> out;
    for (const auto& s : r.sides) out.push_back(s.value);
    return out;
}

bool all_equal(const TheoremReport& r) {
    for (const auto& s : r.sides)
        if (s.value != r.sides.front().value) return false;
    return true;
}

const std::vector<std::string> kChains = {"chain_browder_11", "chain_abrowder_6", "thm_usbf_4way", "thm_lsbf_4way",
                                          "cor_f_b_10way"};

}  // namespace

TEST(Theorem, BrowderHarmonic) {
    TheoremReport r = check("browder", parse_expr("diag(harmonic)"));
    EXPECT_EQ(values(r), (std::vector<bool>{true, true}));
    EXPECT_TRUE(r.consistent);
}

TEST(Theorem, BrowderIndexCancellation) {
    TheoremReport r = check("browder", parse_expr("shift(const(1)) (+) adj(shift(const(1)))"));
    EXPECT_EQ(values(r), (std::vector<bool>{false, false}));
    EXPECT_TRUE(r.consistent);
    EXPECT_TRUE(equal(r.spectra.at("w"), Region::circle(0, 1)));
    EXPECT_TRUE(equal(r.spectra.at("b"), Region::closed_disc(0, 1)));
}

TEST(Theorem, ElevenItemsOnJordanMatrix) {
    TheoremReport r = check("chain_browder_11", parse_expr("matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])"));
    ASSERT_EQ(r.sides.size(), 11u);
    for (const auto& s : r.sides) EXPECT_TRUE(s.value) << s.label;
    EXPECT_TRUE(r.consistent);
}

TEST(Theorem, LemmaTrivialOnMatrices) {
    std::vector<NamedExpr> matrices;
    for (const auto& inst : instance_library())
        if (inst.expr->kind == ExprKind::Matrix || inst.expr->kind == ExprKind::Jordan) matrices.push_back(inst);
    ASSERT_FALSE(matrices.empty());
    for (const auto& r : sweep({"lemma_uf_ub"}, matrices)) {
        EXPECT_TRUE(r.consistent);
        for (const auto& s : r.sides) EXPECT_TRUE(s.value) << r.instance << " " << s.label;
        for (const auto& [name, region] : r.spectra) EXPECT_TRUE(region.empty()) << r.instance << " " << name;
    }
}

TEST(Theorem, AsymmetricSvepSides) {
    std::vector<NamedExpr> shifts = {{"shift", parse_expr("shift(const(1))"), ""},
                                     {"backward", parse_expr("adj(shift(const(1)))"), ""}};
    auto reports = sweep({"prop_gdmj"}, shifts);
    ASSERT_EQ(reports.size(), 2u);
    // SVEP holds everywhere for the forward shift. The backward shift loses it on
    // the open disc, which sits inside gDMW_p because the index is positive there.
    EXPECT_EQ(values(reports[0]), (std::vector<bool>{true, true}));
    EXPECT_EQ(values(reports[1]), (std::vector<bool>{true, true}));
    EXPECT_TRUE(reports[0].spectra.at("svep_fail").empty());
    EXPECT_TRUE(equal(reports[1].spectra.at("gDMW_p"), Region::closed_disc(0, 1)));
    EXPECT_TRUE(reports[0].consistent && reports[1].consistent);
    EXPECT_TRUE(equal(reports[1].spectra.at("svep_fail"), Region::open_disc(0, 1)));
}

TEST(Theorem, LibrarySweepConsistent) {
    auto reports = sweep(theorem_ids());
    EXPECT_EQ(reports.size(), theorem_ids().size() * instance_library().size());
    EXPECT_EQ(count_inconsistent(reports), 0u);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.consistent) << r.theorem << " on " << r.instance << ": " << report_to_json(r).dump();
        if (std::find(kChains.begin(), kChains.end(), r.theorem) != kChains.end())
            EXPECT_TRUE(all_equal(r)) << r.theorem << " on " << r.instance;
    }
}

TEST(Theorem, SweepSeesBothTruthValues) {
    // The library must not be degenerate: every chain is true somewhere and false somewhere.
    for (const auto& id : {"browder", "a_browder", "thm_usbf_4way", "thm_lsbf_4way", "cor_f_b_10way"}) {
        bool seen_true = false, seen_false = false;
        for (const auto& r : sweep({id})) (r.sides.front().value ? seen_true : seen_false) = true;
        EXPECT_TRUE(seen_true && seen_false) << id;
    }
}

TEST(Theorem, BrowderDuality) {
    for (const auto& inst : instance_library()) {
        auto t = check("browder", inst.expr), a = check("browder", make_adj(inst.expr));
        EXPECT_EQ(values(t), values(a)) << inst.name;
    }
}

TEST(Theorem, RandomDirectSumsConsistent) {
    Rng rng(77);
    const auto& lib = instance_library();
    int done = 0;
    for (int trial = 0; trial < 60; ++trial) {
        ExprPtr e = lib[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(lib.size()) - 1))].expr;
        ExprPtr f = lib[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(lib.size()) - 1))].expr;
        if (rng.coin(40)) f = make_translate(GaussianRational(rng.uniform(-2, 2), rng.uniform(-1, 1)), f);
        if (rng.coin(30)) f = make_adj(f);
        ExprPtr sum = make_dsum(e, f);
        std::vector<TheoremReport> reports;
        try {
            reports = sweep(theorem_ids(), {{"random", sum, ""}});
        } catch (const Error& err) {
            ASSERT_EQ(err.code(), "uncomputable-spectrum") << err.what();
            continue;
        }
        for (const auto& r : reports) EXPECT_TRUE(r.consistent) << r.theorem << " on " << print_expr(*sum);
        ++done;
    }
    EXPECT_GE(done, 40);
}

TEST(Theorem, GdrwVariantReported) {
    auto r = check("thm_gdm_or", parse_expr("shift(const(1)) (+) adj(shift(const(1)))"));
    ASSERT_EQ(r.info.size(), 2u);
    EXPECT_EQ(r.info[0].value, r.info[1].value);
    EXPECT_EQ(r.info[0].value, r.sides[0].value);
}

TEST(Theorem, Errors) {
    EXPECT_THROW(check("browders", parse_expr("jordan(0, 1)")), Error);
    try {
        // Tangent circles are rejected by the arrangement builder.
        check("browder", parse_expr("shift(const(1)) (+) shift(const(1)) - 2*I"));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "uncomputable-spectrum");
    }
}

TEST(Theorem, ReportJson) {
    Json j = report_to_json(check("browder", parse_expr("diag(harmonic)"), "harmonic"));
    EXPECT_EQ(j["verdict"], "consistent");
    EXPECT_EQ(j["instance"], "harmonic");
    EXPECT_EQ(j["sides"].size(), 2u);
    EXPECT_TRUE(j["spectra"].contains("svep_fail"));
}

TEST(Transfer, CertifiedPairs) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto pairs = certified_diagonal_pairs(k);
        EXPECT_GE(pairs.size(), 10u);
        for (const auto& [a, b] : pairs) {
            TransferReport r = verify_meromorphic_transfer(a, b, k);
            EXPECT_TRUE(r.holds()) << print_expr(*a) << " / " << print_expr(*b);
            EXPECT_TRUE(r.a_meromorphic);
        }
    }
}

TEST(Transfer, ProductIsComputedEntrywise) {
    // a = 1/4, b = 2, k = 2: b^2 a^2 = 4/16 = a, and the zero entry accepts any b.
    auto r = verify_meromorphic_transfer(parse_expr("diag(list[1/4^inf, 0])"), parse_expr("diag(list[2^inf, 7])"), 2);
    EXPECT_EQ(print_expr(*r.product), "diag(list[1/4^inf]) (+) diag(list[0])");
    auto h = verify_meromorphic_transfer(parse_expr("diag(harmonic)"), parse_expr("diag(list[1^inf])"), 1);
    EXPECT_EQ(print_expr(*h.product), "diag(harmonic)");
    EXPECT_TRUE(h.a_meromorphic && h.product_meromorphic);
    auto i = verify_meromorphic_transfer(parse_expr("diag(list[1^inf])"), parse_expr("diag(list[1^inf])"), 3);
    EXPECT_TRUE(i.holds());
}

TEST(Transfer, Rejections) {
    auto code = [](const char* a, const char* b, std::size_t k) {
        try {
            verify_meromorphic_transfer(parse_expr(a), parse_expr(b), k);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("none");
    };
    EXPECT_EQ(code("diag(geometric(1/2)) (+) shift(const(1))", "diag(list[1^inf]) (+) diag(list[1^inf])", 1),
              "unsupported-pair");
    EXPECT_EQ(code("diag(harmonic)", "diag(geometric(1/2))", 1), "unsupported-pair");
    EXPECT_EQ(code("diag(list[2^inf])", "diag(list[1^inf])", 2), "constraint-violated");
    EXPECT_EQ(code("diag(harmonic)", "diag(list[1^inf])", 2), "constraint-violated");
    EXPECT_EQ(code("diag(list[1, 2])", "diag(list[1])", 1), "unsupported-pair");
}
