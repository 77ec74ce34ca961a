#include <gtest/gtest.h>

#include "hw/isocheck.hpp"
#include "hw/klr.hpp"
#include "hw/quiver_schur.hpp"
#include "hw/schur_iso.hpp"

using namespace hw;

namespace {

using K = Rational;
using P = Poly<K>;
using R = RF<K>;
using MC = MultiComposition;

FieldConfig<K> config(const std::string& q, std::vector<std::string> Q, int d) {
    const int ell = static_cast<int>(Q.size());
    return validate_config<K>(ConfigSpec{0, q, std::move(Q), d, ell});
}

std::vector<K> labels(std::initializer_list<int> v) {
    std::vector<K> out;
    for (int x : v) out.push_back(K(x));
    return out;
}

KLR<K> resolved(const FieldConfig<K>& cfg, const std::vector<K>& nu) {
    auto res = resolve_klr_convention(cfg, nu);
    EXPECT_TRUE(res.resolved);
    FieldConfig<K> c = cfg;
    c.d = static_cast<int>(nu.size());
    return KLR<K>(c, nu, res.conv);
}

const LBlock& block(const KLR<K>& A, const std::string& name) {
    for (const auto& b : A.blocks())
        if (A.block_str(b) == name) return b;
    throw std::runtime_error("no block " + name);
}

bool has_check(const Report& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.id.rfind(prefix, 0) == 0) return true;
    return false;
}

} // namespace

TEST(Quiver, CyclicAndChain) {
    ModP::Scope scope(7);
    auto cfg = validate_config<ModP>(ConfigSpec{7, "2", {"1"}, 1, 1});
    auto g = Quiver<ModP>::for_config(cfg, {ModP(1)});
    ASSERT_EQ(g.size(), 3);
    for (int v : {1, 2, 4}) EXPECT_GE(g.find(ModP(v)), 0) << v;
    for (int a = 0; a < g.size(); ++a) {
        int out = 0;
        for (int b = 0; b < g.size(); ++b) out += g.h(a, b) > 0;
        EXPECT_EQ(out, 1); // one arrow i -> 2i out of every vertex
    }
    auto c3 = config("2", {"3"}, 2);
    EXPECT_NO_THROW(Quiver<K>::for_config(c3, labels({3, 6})));
    try {
        Quiver<K>::for_config(c3, labels({3, 5}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "LabelOutsideF");
    }
}

TEST(KLR, CrossingExamples) {
    {
        auto A = resolved(config("2", {}, 2), labels({1, 1}));
        const auto& b = block(A, "b(1) b(1)");
        for (const auto& [t, v] : A.psi(1).apply(b, R(P::parse("1", 2)))) EXPECT_TRUE(v.is_zero());
        EXPECT_EQ(A.psi(1) * A.psi(1) * A.e(b), A.zero());
    }
    {
        // no arrow between 1 and 5 when q = 2: the crossing is the bare swap
        auto A = resolved(config("2", {}, 2), labels({1, 5}));
        auto out = A.psi(1).apply(block(A, "b(1) b(5)"), R(P::parse("y1^2*y2", 2, 'y')));
        ASSERT_EQ(out.size(), 1u);
        EXPECT_EQ(A.block_str(out.begin()->first), "b(5) b(1)");
        EXPECT_EQ(out.begin()->second, R(P::parse("y1*y2^2", 2, 'y')));
    }
}

TEST(KLR, RedStrandExamples) {
    auto A = resolved(config("2", {"1"}, 1), labels({1}));
    const auto& rb = block(A, "r(1) b(1)");
    const auto& br = block(A, "b(1) r(1)");
    EXPECT_EQ(A.psi(1) * A.psi(1) * A.e(rb), A.y(1) * A.e(rb));
    const R f(P::parse("y1^2 + 3", 1, 'y'));
    auto out = A.psi(1).apply(br, f);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out.begin()->first, rb);
    EXPECT_EQ(out.begin()->second, R(P::parse("y1^3 + 3*y1", 1, 'y')));
}

TEST(KLR, RelationsAndConvention) {
    Report r = verify_klr_relations(config("2", {"3"}, 2), labels({3, 6}));
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(r.conventions.contains("klr"));
    ModP::Scope scope(7);
    auto cfg = validate_config<ModP>(ConfigSpec{7, "2", {"1", "3"}, 2, 2});
    EXPECT_TRUE(verify_klr_relations(cfg, {ModP(1), ModP(2)}).pass());
}

TEST(QuiverSchur, Examples) {
    Report r = verify_qschur(config("2", {}, 2), labels({1, 1}));
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(has_check(r, "spot[merge(y1)=1"));
    EXPECT_TRUE(has_check(r, "spot[merge.split(1)=0"));
    Report r1 = verify_qschur(config("2", {"3"}, 2), labels({3, 3}));
    EXPECT_TRUE(r1.pass());
    EXPECT_TRUE(has_check(r1, "spot[rcross.lcross"));

    using QS = QuiverSchur<K>;
    QS A(config("2", {}, 2), labels({1, 1}));
    const auto& lab = A.indices().front().lab;
    auto split = A.generator_at(QS::SPLIT, MC::parse("((2))"), MC::parse("((1,1))"), lab);
    EXPECT_EQ(split.body, PermSum<K>::identity(2));

    QS B(config("2", {"3"}, 1), labels({6}));
    const std::vector<int> six{B.quiver().id(K(6))};
    auto cross = B.generator_at(QS::RCROSS, MC::parse("((1)|())"), MC::parse("(()|(1))"), six);
    EXPECT_EQ(cross.body, PermSum<K>::identity(1));
    QS C(config("2", {"3"}, 1), labels({3}));
    const std::vector<int> three{C.quiver().id(K(3))};
    auto dot = C.generator_at(QS::RCROSS, MC::parse("((1)|())"), MC::parse("(()|(1))"), three);
    EXPECT_EQ(dot.body, PermSum<K>::mult(R(P::var(1, 0))));
}

TEST(CompletedIso, HeckeKLRExamples) {
    ModP::Scope scope(7);
    auto cfg = validate_config<ModP>(ConfigSpec{7, "2", {}, 2, 0});
    EXPECT_TRUE(verify_iso_hecke_klr(cfg, {ModP(1), ModP(2)}, 3, IsoDirection::KLRToHecke).pass());
    EXPECT_TRUE(verify_iso_hecke_klr(cfg, {ModP(1), ModP(2)}, 3, IsoDirection::HeckeToKLR).pass());
    auto c1 = validate_config<ModP>(ConfigSpec{7, "2", {"1"}, 1, 1});
    for (int a : {1, 2}) EXPECT_TRUE(verify_iso_hecke_klr(c1, {ModP(a)}, 4, IsoDirection::KLRToHecke).pass()) << a;
}

TEST(CompletedIso, OrderMonotone) {
    auto cfg = config("2", {"3"}, 2);
    for (auto a : {labels({3, 6}), labels({3, 3}), labels({6, 3})})
        for (auto dir : {IsoDirection::KLRToHecke, IsoDirection::HeckeToKLR}) {
            bool prev = true;
            for (int N = 4; N >= 1; --N) {
                const bool ok = verify_iso_hecke_klr(cfg, a, N, dir).pass();
                EXPECT_TRUE(ok || !prev) << "passes at a higher order but fails at N=" << N;
                EXPECT_TRUE(ok);
                prev = ok;
            }
        }
}

TEST(CompletedIso, CyclotomicIdempotentsCorrespond) {
    auto cfg = config("2", {"3", "5"}, 2);
    Report r = verify_iso_hecke_klr(cfg, labels({3, 5}), 2, IsoDirection::KLRToHecke);
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(has_check(r, "cyclotomic-idempotent["));
}

TEST(CompletedIso, SchurQuiverSchur) {
    for (auto [Q, a] : std::vector<std::pair<std::vector<std::string>, std::vector<K>>>{
             {{}, labels({1, 2})}, {{}, labels({1, 1, 2})}, {{"3"}, labels({3, 6})}, {{"3", "5"}, labels({3, 5})}}) {
        auto cfg = config("2", Q, static_cast<int>(a.size()));
        for (auto dir : {SchurIsoDirection::QSchurToSchur, SchurIsoDirection::SchurToQSchur}) {
            Report r = verify_iso_schur_qschur(cfg, a, 4, dir);
            EXPECT_TRUE(r.pass()) << r.to_json().dump();
            EXPECT_TRUE(r.conventions.contains("schur_right_crossing"));
        }
    }
}

TEST(CompletedIso, ZerothOrderIsBookkeeping) {
    auto cfg = config("2", {"3"}, 2);
    EXPECT_TRUE(verify_iso_hecke_klr(cfg, labels({3, 6}), 1, IsoDirection::KLRToHecke).pass());
    EXPECT_TRUE(verify_iso_schur_qschur(cfg, labels({3, 6}), 1).pass());
}
