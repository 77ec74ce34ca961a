#include <random>

#include <gtest/gtest.h>

#include "hw/hecke.hpp"
#include "hw/isocheck.hpp"

using namespace hw;

namespace {

using K = Rational;
using P = Poly<K>;
using R = RF<K>;

FieldConfig<K> config(const std::string& q, std::vector<std::string> Q, int d) {
    const int ell = static_cast<int>(Q.size());
    return validate_config<K>(ConfigSpec{0, q, std::move(Q), d, ell});
}

R apply_on(const Hecke<K>::Op& op, const std::string& src, const std::string& tgt, const R& f) {
    auto out = op.apply(ColorSeq::parse(src), f);
    auto it = out.find(ColorSeq::parse(tgt));
    return it == out.end() ? R(f.nvars()) : it->second;
}

// -s(f) + (q-1) x2/(x1-x2) (s(f) - f), written out by hand
R demazure_lusztig(const K& q, const R& f) {
    const Perm s = Perm::simple(2, 0);
    R sf = f.permuted(s);
    R frac = R::frac(P::var(2, 1), P::parse("x1 - x2", 2));
    return -sf + (q - K(1)) * frac * (sf - f);
}

} // namespace

TEST(Hecke, GeneratorOnPolynomials) {
    for (std::string q : {"2", "3", "-1/2"}) {
        Hecke<K> H(config(q, {}, 2));
        const K qq = K::parse(q);
        for (std::string f : {"1", "x1", "x2", "x1^2*x2^-1 + 3"}) {
            R g(P::parse(f, 2));
            EXPECT_EQ(apply_on(H.T(1), "bb", "bb", g), demazure_lusztig(qq, g)) << "q=" << q << " f=" << f;
        }
        EXPECT_EQ(apply_on(H.T(1), "bb", "bb", R(P::parse("1", 2))), R(P::parse("-1", 2)));
        EXPECT_EQ(apply_on(H.T(1), "bb", "bb", R(P::parse("x1", 2))), R(-qq * P::var(2, 1)));
    }
}

TEST(Hecke, RedBlackCrossingMovesTheBlock) {
    Hecke<K> H(config("2", {"3"}, 1));
    R f(P::parse("x1^2 - 5", 1));
    auto out = H.T(1).apply(ColorSeq::parse("rb"), f);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out.begin()->first, ColorSeq::parse("br"));
    EXPECT_EQ(out.begin()->second, f);
}

TEST(Hecke, CanonicalT) {
    Hecke<K> H(config("2", {}, 2));
    const ColorSeq bb = ColorSeq::parse("bb");
    EXPECT_EQ(H.canonical_T(ColoredPerm(bb, bb, Perm(2))), H.e(bb));
    EXPECT_EQ(H.canonical_T(ColoredPerm(bb, bb, Perm::simple(2, 0))), H.T(1));
    Hecke<K> H1(config("2", {"3"}, 1));
    const ColorSeq rb = ColorSeq::parse("rb"), br = ColorSeq::parse("br");
    EXPECT_EQ(H1.canonical_T(ColoredPerm(br, rb, Perm(1))), H1.T(1) * H1.e(rb));
}

TEST(Hecke, BasisExamples) {
    Hecke<K> H(config("2", {"3"}, 2));
    for (const auto& c : H.blocks()) {
        HeckeBasis<K> expect{{{c, c, Perm(2), Mono{}}, K(1)}};
        EXPECT_EQ(H.to_basis(H.e(c)), expect) << c.str();
    }
    for (std::string q : {"2", "5", "-1/3"}) {
        Hecke<K> H0(config(q, {}, 2));
        const ColorSeq bb = ColorSeq::parse("bb");
        const Mono x2 = Mono::unit(1, 1);
        HeckeBasis<K> expect{{{bb, bb, Perm::simple(2, 0), x2}, K(1)}, {{bb, bb, Perm(2), x2}, K(1) - K::parse(q)}};
        EXPECT_EQ(H0.to_basis(H0.X(1) * H0.T(1)), expect) << "q=" << q;
    }
}

TEST(Hecke, BasisRoundTripOnRandomWords) {
    for (auto [Q, d] : std::vector<std::pair<std::vector<std::string>, int>>{{{}, 3}, {{"3"}, 2}, {{"3", "5"}, 2}})
        for (uint64_t seed : {1u, 2u, 3u}) {
            Hecke<K> H(config("2", Q, d));
            Report r = verify_basis(H, seed, 60, 6);
            EXPECT_TRUE(r.pass()) << r.to_json().dump();
        }
}

TEST(Hecke, PresentationHoldsForGenericQ) {
    for (std::string q : {"3", "-1/2", "5/7"})
        for (auto [Q, d] : std::vector<std::pair<std::vector<std::string>, int>>{{{}, 2}, {{"3"}, 2}, {{"3", "5"}, 1}}) {
            Hecke<K> H(config(q, Q, d));
            EXPECT_TRUE(verify_presentation(H).pass()) << "q=" << q << " d=" << d;
            EXPECT_TRUE(verify_sharp_twist(H).pass()) << "q=" << q << " d=" << d;
        }
}

TEST(Hecke, CenterAndWitness) {
    Hecke<K> H(config("2", {"3"}, 2));
    Report r = center_check(H);
    EXPECT_TRUE(r.pass());
    bool witness = false;
    for (const auto& c : r.checks) witness |= c.id == "noncentral[x1]";
    EXPECT_TRUE(witness);
    EXPECT_NE(H.x(1) * H.T(2), H.T(2) * H.x(1));
}

TEST(Hecke, PresentationOverPrimeField) {
    ModP::Scope scope(7);
    auto cfg = validate_config<ModP>(ConfigSpec{7, "2", {"1", "3"}, 2, 2});
    EXPECT_TRUE(verify_presentation(Hecke<ModP>(cfg)).pass());
}

// complete(ab) = complete(a) complete(b) below order N - drop(a), on random
// words at points fixed by the symmetric group
TEST(Completion, MultiplicativeOnRandomWords) {
    std::mt19937_64 rng(11);
    int compared = 0;
    for (auto [Q, d] : std::vector<std::pair<std::vector<std::string>, int>>{{{}, 2}, {{}, 3}, {{"1"}, 2}}) {
        Hecke<K> H(config("2", Q, d));
        auto pt = [&](const ColorSeq&) { return std::vector<K>(d, K(1)); };
        std::vector<HeckeGen> gens;
        for (int i = 1; i <= H.width(); ++i) {
            gens.push_back(HeckeGen::X_(i));
            gens.push_back(HeckeGen::Xi_(i));
        }
        for (int r = 1; r < H.width(); ++r) gens.push_back(HeckeGen::T_(r));
        auto word = [&] {
            auto op = H.one();
            const int n = 1 + static_cast<int>(rng() % 3);
            for (int k = 0; k < n; ++k) op = op * H.generator(gens[rng() % gens.size()]);
            return op;
        };
        for (int trial = 0; trial < 8; ++trial) {
            auto a = word(), b = word();
            const int N = 4;
            auto ca = complete(a, H.blocks(), pt, N), cb = complete(b, H.blocks(), pt, N), cab = complete(a * b, H.blocks(), pt, N);
            const int exact = N - ca.drop();
            if (exact < 1) continue;
            ++compared;
            EXPECT_EQ(cab.truncated(exact), (ca * cb).truncated(exact)) << "d=" << d << " trial " << trial;
        }
    }
    EXPECT_GE(compared, 12);
}

TEST(Completion, Examples) {
    Hecke<K> H(config("2", {}, 2));
    const std::vector<K> one{K(1), K(1)};
    auto pt = [&](const ColorSeq&) { return one; };
    const ColorSeq bb = ColorSeq::parse("bb");
    auto ce = complete(H.e(bb), H.blocks(), pt, 3);
    for (const auto& [mono, p] : ce.m.at({bb, bb})) EXPECT_EQ(p, P::monomial(2, mono));
    // T1 on jets: read the matrix entries from the polynomial action
    auto ct = complete(H.T(1), H.blocks(), pt, 2);
    for (const auto& [mono, p] : ct.m.at({bb, bb})) {
        R f(P::constant(2, K(1)));
        for (int t = 0; t < 2; ++t) f = f * R((P::var(2, t) - P::constant(2, K(1))).pow(mono.e[t]));
        EXPECT_EQ(p, expand_to_jet(demazure_lusztig(K(2), f), one, 2).body());
    }
}
