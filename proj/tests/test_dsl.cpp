#include <gtest/gtest.h>

#include "opspec/dsl.hpp"
#include "opspec/json_io.hpp"
#include "opspec/random.hpp"
#include "fuzz.hpp"

using namespace opspec;

using fuzz::q;

TEST(Dsl, SpecExamples) {
    auto e = parse_expr("shift(const(1)) (+) adj(shift(const(1)))");
    ASSERT_EQ(e->kind, ExprKind::DirectSum);
    EXPECT_EQ(e->left->kind, ExprKind::Shift);
    EXPECT_EQ(e->right->kind, ExprKind::Adj);

    auto t = parse_expr("diag(harmonic) - 1/2*I");
    ASSERT_EQ(t->kind, ExprKind::Translate);
    EXPECT_EQ(t->scalar, GaussianRational(q(-1, 2)));
    EXPECT_EQ(t->left->kind, ExprKind::Diag);

    try {
        parse_expr("jordan(0,");
        FAIL() << "expected a syntax error";
    } catch (const ParseError& err) {
        EXPECT_EQ(err.line(), 1u);
        EXPECT_EQ(err.column(), 9u);
        EXPECT_EQ(err.expected(), std::vector<std::string>{"number"});
    }
}

TEST(Dsl, Precedence) {
    // A leading scale absorbs the trailing translation.
    auto a = parse_expr("2*diag(harmonic) - 1*I");
    ASSERT_EQ(a->kind, ExprKind::Scale);
    EXPECT_EQ(a->left->kind, ExprKind::Translate);
    auto b = parse_expr("(2*diag(harmonic)) - 1*I");
    ASSERT_EQ(b->kind, ExprKind::Translate);
    // Direct sums associate to the left.
    auto c = parse_expr("jordan(1,1) (+) jordan(2,1) (+) jordan(3,1)");
    ASSERT_EQ(c->kind, ExprKind::DirectSum);
    EXPECT_EQ(c->left->kind, ExprKind::DirectSum);
    // Complex scalars and multiplicities.
    auto d = parse_expr("jordan(1/2-3i, 2)");
    EXPECT_EQ(d->scalar, GaussianRational(q(1, 2), q(-3)));
    auto l = parse_expr("diag(list[1^inf, 0^2, -1])");
    ASSERT_EQ(l->entries.size(), 3u);
    EXPECT_TRUE(l->entries[0].multiplicity.is_inf());
    EXPECT_EQ(l->entries[1].multiplicity, ExtNat(2));
    EXPECT_EQ(l->entries[2].multiplicity, ExtNat(1));
    // Whitespace and line breaks are insignificant.
    EXPECT_TRUE(expr_equal(*parse_expr(" adj (\n shift ( invfact ) ) "), *parse_expr("adj(shift(invfact))")));
}

TEST(Dsl, Errors) {
    auto located = [](const char* text, std::size_t line, std::size_t column) {
        try {
            parse_expr(text);
        } catch (const ParseError& err) {
            EXPECT_EQ(err.line(), line) << text;
            EXPECT_EQ(err.column(), column) << text;
            return;
        }
        ADD_FAILURE() << "no error for " << text;
    };
    located("", 1, 0);
    located("diag(harmonics)", 1, 5);
    located("jordan(0, 2) (+)\n  bogus", 2, 2);
    located("matrix([[1, 2], [3]])", 1, 7);
    located("shift(const(1/0))", 1, 14);
    located("jordan(0, 2) extra", 1, 13);
    EXPECT_THROW(parse_expr("diag(geometric(3/2))"), Error);
    EXPECT_THROW(parse_expr("0*jordan(1,1)"), Error);
}

TEST(Dsl, LibraryRoundTrip) {
    for (const auto& inst : instance_library()) {
        std::string text = print_expr(*inst.expr);
        EXPECT_TRUE(expr_equal(*parse_expr(text), *inst.expr)) << inst.name << ": " << text;
        EXPECT_EQ(print_expr(*parse_expr(text)), text);
        Json j = expr_to_json(*inst.expr);
        EXPECT_TRUE(expr_equal(*expr_from_json(j), *inst.expr)) << inst.name;
        EXPECT_EQ(expr_to_json(*expr_from_json(Json::parse(j.dump()))).dump(), j.dump());
    }
}

TEST(Dsl, FuzzedRoundTrip) {
    Rng rng(31337);
    for (int trial = 0; trial < 1000; ++trial) {
        ExprPtr e = fuzz::ast(rng, 4);
        std::string text = print_expr(*e);
        ExprPtr back = parse_expr(text);
        ASSERT_TRUE(expr_equal(*back, *e)) << text << " -> " << print_expr(*back);
        ASSERT_EQ(print_expr(*back), text);
        std::string dumped = expr_to_json(*e).dump();
        ASSERT_EQ(expr_to_json(*expr_from_json(Json::parse(dumped))).dump(), dumped);
    }
}
