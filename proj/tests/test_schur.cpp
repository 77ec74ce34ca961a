#include <gtest/gtest.h>

#include "hw/schur.hpp"

using namespace hw;

namespace {

using K = Rational;
using P = Poly<K>;
using R = RF<K>;
using GS = SchurGenSpec<K>;
using MC = MultiComposition;

FieldConfig<K> config(const std::string& q, std::vector<std::string> Q, int d) {
    const int ell = static_cast<int>(Q.size());
    return validate_config<K>(ConfigSpec{0, q, std::move(Q), d, ell});
}

R poly(const std::string& s, int d) { return R(P::parse(s, d)); }

R on_block(const Hecke<K>::Op& op, const std::string& block, const R& f) {
    auto out = op.apply(ColorSeq::parse(block), f);
    auto it = out.find(ColorSeq::parse(block));
    return it == out.end() ? R(f.nvars()) : it->second;
}

} // namespace

TEST(Demazure, Examples) {
    Schur<K> S(config("2", {}, 2));
    EXPECT_EQ(S.partial(0).apply(poly("x1", 2)), poly("1", 2));
    EXPECT_EQ(S.partial(0).apply(poly("x1*x2", 2)), poly("0", 2));
    EXPECT_EQ(S.partial(0).apply(poly("x1^2", 2)), poly("x1 + x2", 2));
    EXPECT_EQ(S.D_block(2, 0).apply(poly("x1^2", 2)), poly("x1 + x2", 2));
    EXPECT_EQ(S.D_ab(1, 1, 0).apply(poly("x2 - 2*x1", 2)), poly("-3", 2));
    Schur<K> S3(config("2", {}, 3));
    R f = poly("x1^2*x2", 3);
    EXPECT_EQ((S3.partial(0) * S3.partial(1) * S3.partial(0)).apply(f), (S3.partial(1) * S3.partial(0) * S3.partial(1)).apply(f));
}

TEST(Demazure, SuiteUpToFourStrands) {
    for (int d = 2; d <= 4; ++d) EXPECT_TRUE(verify_demazure<K>(d, 5, 30).pass()) << d;
}

TEST(Schur, CrossingProducts) {
    Schur<K> S(config("2", {}, 5));
    EXPECT_EQ(S.p_right(Composition::parse("(2,3)")), poly("(x1 - 2*x2)*(x3 - 2*x4)*(x3 - 2*x5)*(x4 - 2*x5)", 5));
    EXPECT_EQ(S.p_right(Composition::finest(5)), poly("1", 5));
    Schur<K> S2(config("2", {}, 2));
    EXPECT_EQ(S2.p_left_prime(Composition::parse("(1,1)")), poly("x2 - 2*x1", 2));
}

TEST(Schur, WindowedInvariantProbes) {
    EXPECT_EQ(invariant_probes<K>(Composition::finest(3), 0).size(), 1u);
    // a1 <= a2 with a_i in {-1, 0, 1}
    EXPECT_EQ(invariant_probes<K>(Composition::parse("(2)"), 1).size(), 6u);
}

TEST(Schur, HeckeElementsOnOne) {
    for (std::string q : {"2", "3"}) {
        Schur<K> S(config(q, {}, 2));
        const K qq = K::parse(q);
        const auto lam = Composition::parse("(2)");
        const ColorSeq bb = ColorSeq::parse("bb");
        const R one = poly("1", 2);
        const auto m2 = S.m_element(lam, Schur<K>::M, bb), n2 = S.m_element(lam, Schur<K>::N, bb);
        EXPECT_EQ(on_block(n2, "bb", one), poly("0", 2));
        EXPECT_EQ(on_block(m2, "bb", one), R::constant(2, -K(1) - qq));
        EXPECT_EQ(S.D_block(2, 0).apply(S.p_left(lam) * one), R::constant(2, -K(1) - qq));
        EXPECT_EQ(on_block(m2 * S.on_c0(S.p_right(lam)), "bb", one), poly("0", 2));
        EXPECT_EQ(on_block(S.on_c0(S.p_left(lam)) * n2, "bb", one), poly("0", 2));
    }
}

TEST(Schur, GeneratorExamples) {
    Schur<K> S(config("2", {}, 2));
    const MC two = MC::parse("((2))"), ones = MC::parse("((1,1))");
    const R one = poly("1", 2);
    EXPECT_EQ(S.generator(GS::split(two, ones), SchurRep::Standard).apply(one), poly("x2 - 2*x1", 2));
    auto ms = S.generator(GS::merge(ones, two), SchurRep::Modified) * S.generator(GS::split(two, ones), SchurRep::Modified);
    EXPECT_EQ(ms.apply(one), poly("-3", 2));
    // split agrees with multiplication by p<-' after re-blocking
    SchurOp<K> mult{two, ones, PermSum<K>::mult(S.p_left_split(two.bar(), ones.bar()))};
    EXPECT_TRUE(schur_equal(S.generator(GS::split(two, ones)), mult));
}

TEST(Schur, RightAfterLeftCrossing) {
    auto cfg = config("2", {"3"}, 1);
    auto sign = resolve_right_crossing(cfg);
    ASSERT_TRUE(sign.has_value());
    Schur<K> S(cfg, *sign);
    const MC before = MC::parse("((1)|())"), after = MC::parse("(()|(1))");
    auto op = S.generator(GS::rcross(before, after)) * S.generator(GS::lcross(after, before));
    EXPECT_EQ(op.apply(poly("1", 1)), poly("x1 - 3", 1));
}

TEST(Schur, SymmetrizerEquality) {
    Schur<K> S(config("2", {}, 2));
    const MC two = MC::parse("((2))");
    SchurOp<K> a{two, two, PermSum<K>::mult(poly("x1 + x2", 2))};
    EXPECT_TRUE(schur_equal(a, a));
    // a + (1 - s1) g kills the same invariants as a
    PermSum<K> g = PermSum<K>::mult(poly("x1^2 - x2", 2));
    PermSum<K> one_minus_s = PermSum<K>::identity(2) - PermSum<K>::single(Perm::simple(2, 0), R::constant(2, K(1)));
    SchurOp<K> b{two, two, a.body + g * one_minus_s};
    EXPECT_TRUE(schur_equal(a, b));
    SchurOp<K> c{two, two, a.body + g};
    EXPECT_FALSE(schur_equal(a, c));
}

TEST(Schur, PhiCompatibilityExample) {
    Schur<K> S(config("2", {}, 2));
    const MC two = MC::parse("((2))"), ones = MC::parse("((1,1))");
    auto lhs = S.act(GS::split(two, ones), S.phi(two, poly("1", 2)));
    auto rhs = S.phi(ones, poly("x2 - 2*x1", 2));
    EXPECT_EQ(S.hecke().to_basis(lhs.op), S.hecke().to_basis(rhs.op));
}

TEST(Schur, SuitesPass) {
    for (auto [Q, d] : std::vector<std::pair<std::vector<std::string>, int>>{{{}, 2}, {{"3"}, 2}, {{"3", "5"}, 1}}) {
        auto cfg = config("2", Q, d);
        Report r = verify_schur(cfg, 3, 10);
        EXPECT_TRUE(r.pass()) << r.to_json().dump();
        EXPECT_TRUE(verify_hom_basis(cfg, 1).pass());
    }
    ModP::Scope scope(7);
    auto cfg = validate_config<ModP>(ConfigSpec{7, "2", {"1"}, 2, 1});
    EXPECT_TRUE(verify_schur(cfg, 3, 10).pass());
}

TEST(Schur, NeedsInvertibleSymmetrizer) {
    ModP::Scope scope(3);
    auto cfg = validate_config<ModP>(ConfigSpec{3, "2", {}, 3, 0});
    try {
        Schur<ModP> S(cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "CharacteristicTooSmall");
    }
}
