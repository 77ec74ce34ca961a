#include <random>

#include <gtest/gtest.h>

#include "hw/combinatorics.hpp"
#include "hw/expr.hpp"
#include "hw/jet.hpp"
#include "hw/perm.hpp"
#include "hw/poly.hpp"
#include "hw/scalars.hpp"

using namespace hw;

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

using P = Poly<Rational>;

} // namespace

TEST(Scalars, RationalArithmetic) {
    EXPECT_EQ(Rational::parse("1/2") + Rational::parse("1/3"), Rational::parse("5/6"));
    EXPECT_EQ(Rational(7) / Rational(7), Rational(1));
    EXPECT_EQ(code_of([] { Rational::parse("1/0x"); }), "ParseError");
}

TEST(Scalars, PrimeField) {
    ModP::Scope scope(7);
    EXPECT_EQ(ModP(3) * ModP(5), ModP(1));
    EXPECT_EQ(ModP::parse("1/2"), ModP(4));
    for (long a = 1; a < 7; ++a) EXPECT_EQ(ModP(a) / ModP(a), ModP(1));
    EXPECT_EQ(code_of([] { ModP::parse("3/7"); }), "DivisionByZero");
}

TEST(Scalars, ConfigValidation) {
    {
        ModP::Scope scope(7);
        auto cfg = validate_config<ModP>(ConfigSpec{7, "2", {"1"}, 2, 1});
        ASSERT_TRUE(cfg.order_q.has_value());
        EXPECT_EQ(*cfg.order_q, 3);
    }
    auto c0 = validate_config<Rational>(ConfigSpec{0, "2", {"3", "5"}, 2, 2});
    EXPECT_FALSE(c0.order_q.has_value());
    EXPECT_EQ(code_of([] { validate_config<Rational>(ConfigSpec{0, "1", {"3"}, 1, 1}); }), "BadParameter");
    EXPECT_EQ(code_of([] { validate_config<Rational>(ConfigSpec{0, "2", {"3"}, 1, 2}); }), "BadParameter");
    EXPECT_EQ(code_of([] {
                  ModP::Scope scope(9);
                  validate_config<ModP>(ConfigSpec{9, "2", {}, 1, 0});
              }),
              "NonPrimeCharacteristic");
}

TEST(Poly, ParsePrintRoundTrip) {
    for (std::string s : {"x1^2*x2 - 3*x1 + 1/2", "x1^-1*x2^2", "-x2", "0"}) {
        P p = P::parse(s, 2);
        EXPECT_EQ(P::parse(p.str(), 2), p) << s;
    }
    EXPECT_EQ(code_of([] { P::parse("x3", 2); }), "SyntaxError");
}

TEST(Poly, LaurentArithmetic) {
    P x1 = P::var(2, 0), x1inv = P::parse("x1^-1", 2);
    EXPECT_EQ(x1 * x1inv, P::constant(2, Rational(1)));
    EXPECT_EQ((x1 + P::var(2, 1)).pow(2), P::parse("x1^2 + 2*x1*x2 + x2^2", 2));
}

TEST(Perm, ReducedWordsAndLength) {
    for (const auto& w : Perm::all(4)) {
        auto word = w.reduced_word();
        EXPECT_EQ(static_cast<int>(word.size()), w.length());
        EXPECT_EQ(Perm::from_word(4, word), w);
    }
    Perm s1 = Perm::simple(3, 0), s2 = Perm::simple(3, 1);
    EXPECT_EQ(s1 * s2 * s1, s2 * s1 * s2);
}

TEST(Combinatorics, DoubleCosets) {
    auto C = [](const std::string& s) { return Composition::parse(s); };
    EXPECT_EQ(coset_reps(C("(1,1)"), C("(1,1)")).size(), 2u);
    EXPECT_EQ(coset_reps(C("(2)"), C("(2)")).size(), 1u);
    // brute force: minimal elements of S_{(2,1)} w S_{(1,2)}
    std::set<std::vector<int>> minima;
    for (const auto& w : Perm::all(3)) {
        Perm best = w;
        for (const auto& u : C("(2,1)").parabolic())
            for (const auto& v : C("(1,2)").parabolic()) {
                Perm z = u * w * v;
                if (z.length() < best.length()) best = z;
            }
        minima.insert(std::vector<int>{best(0), best(1), best(2)});
    }
    EXPECT_EQ(coset_reps(C("(2,1)"), C("(1,2)")).size(), minima.size());
    // 2x2 matrices with row sums (2,1) and column sums (1,2): [[0,2],[1,0]], [[1,1],[0,1]]
    EXPECT_EQ(minima.size(), 2u);
}

TEST(Combinatorics, ParabolicIntersection) {
    auto C = [](const std::string& s) { return Composition::parse(s); };
    EXPECT_EQ(intersect_parabolic(C("(2)"), C("(2)"), Perm(2)), C("(2)"));
    EXPECT_EQ(intersect_parabolic(C("(2)"), C("(1,1)"), Perm(2)), C("(1,1)"));
    EXPECT_EQ(intersect_parabolic(C("(2,1)"), C("(1,2)"), Perm(3)), C("(1,1,1)"));
}

TEST(Combinatorics, ColorSequencesAndMulticompositions) {
    EXPECT_EQ(ColorSeq::all(2, 2).size(), 6u); // binomial(4, 2)
    EXPECT_EQ(ColorSeq::omega(1, 2).str(), "rbb");
    auto m = MultiComposition::parse("((2)|(1))");
    EXPECT_EQ(m.ell(), 1);
    EXPECT_EQ(m.d(), 3);
}

TEST(Combinatorics, ColoredPermutations) {
    const ColorSeq rb = ColorSeq::parse("rb"), br = ColorSeq::parse("br");
    auto there = ColoredPerm(br, rb, Perm(1)), back = ColoredPerm(rb, br, Perm(1));
    EXPECT_EQ(compose(back, there), ColoredPerm::identity(rb));
    const ColorSeq bb = ColorSeq::parse("bb");
    auto s = ColoredPerm(bb, bb, Perm::simple(2, 0));
    EXPECT_EQ(compose(s, s), ColoredPerm::identity(bb));
}

TEST(Jets, GeometricSeriesOracle) {
    const std::vector<Rational> pt{Rational(1), Rational(1)};
    RF<Rational> f = RF<Rational>::frac(P::constant(2, Rational(1)), P::parse("x1 - 2*x2", 2));
    auto j = expand_to_jet(f, pt, 2);
    // -1/(1 - (u1 - 2 u2)) truncated below degree 2
    EXPECT_EQ(j.body(), P::parse("-1 - x1 + 2*x2", 2));
    auto j1 = expand_to_jet(RF<Rational>(P::var(1, 0)), {Rational(5)}, 3);
    EXPECT_EQ(j1.body(), P::parse("5 + x1", 1));
    EXPECT_EQ(code_of([&] { expand_to_jet(f, {Rational(2), Rational(1)}, 2); }), "PoleAtPoint");
}

// ---- expression language ---------------------------------------------------

namespace {

Expr leaf(std::mt19937_64& rng) {
    static const std::vector<Expr::Kind> kinds{Expr::Scalar, Expr::E, Expr::T, Expr::X, Expr::Xi, Expr::x, Expr::Psi,
                                               Expr::Y, Expr::M, Expr::N, Expr::Split, Expr::Merge, Expr::LCross, Expr::RCross};
    Expr e;
    e.kind = kinds[rng() % kinds.size()];
    switch (e.kind) {
    case Expr::Scalar: e.text = rng() % 2 ? std::to_string(rng() % 9) : std::to_string(1 + rng() % 5) + "/" + std::to_string(2 + rng() % 5); break;
    case Expr::E: e.text = rng() % 2 ? "rbb" : "bb"; break;
    case Expr::M:
    case Expr::N: e.text = "(2)|(1)"; break;
    case Expr::Split:
    case Expr::Merge:
    case Expr::LCross:
    case Expr::RCross:
        e.text = "(2)|(1)";
        e.text2 = "(1,1)|(1)";
        break;
    default: e.idx = 1 + static_cast<int>(rng() % 4);
    }
    return e;
}

// Trees in canonical shape: no Sum directly under Sum, no Prod under Prod,
// at least two children in every Sum and Prod.
Expr random_expr(std::mt19937_64& rng, int depth, Expr::Kind parent = Expr::Scalar) {
    if (depth == 0 || rng() % 3 == 0) return leaf(rng);
    std::vector<Expr::Kind> choices{Expr::Neg};
    if (parent != Expr::Sum) choices.push_back(Expr::Sum);
    if (parent != Expr::Prod) choices.push_back(Expr::Prod);
    Expr e;
    e.kind = choices[rng() % choices.size()];
    const int n = e.kind == Expr::Neg ? 1 : 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < n; ++k) e.kids.push_back(random_expr(rng, depth - 1, e.kind));
    return e;
}

} // namespace

TEST(Expr, ParsePrintIsIdentityOnRandomTrees) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k) {
        Expr e = random_expr(rng, 4);
        const std::string s = print(e);
        Expr back = parse_expr(s);
        ASSERT_EQ(back, e) << s;
        EXPECT_EQ(print(back), s);
    }
}

TEST(Expr, PrintParseIsIdentityOnCanonicalText) {
    for (std::string s : {"T1*X1 + 2", "e(rbb)*T2", "-(T1 + 2)*x1 - 3/2*Xi2", "split((2)|(1)->(1,1)|(1))", "psi1*y2 - --y1"})
        EXPECT_EQ(print(parse_expr(s)), s);
    EXPECT_EQ(print(parse_expr("  T1 *X1+  2 ")), "T1*X1 + 2");
}

TEST(Expr, Examples) {
    Expr e = parse_expr("T1*X1 + 2");
    ASSERT_EQ(e.kind, Expr::Sum);
    EXPECT_EQ(e.kids.size(), 2u);
    EXPECT_NO_THROW(bind(parse_expr("e(rbb)*T2"), 2, 1));
    EXPECT_EQ(code_of([] { bind(parse_expr("T0"), 2, 0); }), "IndexError");
    EXPECT_EQ(code_of([] { bind(parse_expr("x3"), 2, 0); }), "IndexError");
    EXPECT_EQ(code_of([] { bind(parse_expr("e(rb)"), 2, 1); }), "IndexError");
}

TEST(Expr, SyntaxErrorsCarryPositions) {
    try {
        parse_expr("T1*(X1 + ");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "SyntaxError");
        EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
    EXPECT_EQ(code_of([] { parse_expr("T1 + psi1"), classify(parse_expr("T1 + psi1")); }), "SyntaxError");
    EXPECT_EQ(code_of([] { parse_expr("Q1"); }), "SyntaxError");
}
