#include <gtest/gtest.h>

#include "hw/cyclotomic.hpp"

using namespace hw;

namespace {

using K = Rational;

FieldConfig<K> config(std::vector<std::string> Q, int d) {
    const int ell = static_cast<int>(Q.size());
    return validate_config<K>(ConfigSpec{0, "2", std::move(Q), d, ell});
}

} // namespace

TEST(Cyclotomic, DimensionIsLevelToTheDTimesDFactorial) {
    for (auto [Q, d, dim] : std::vector<std::tuple<std::vector<std::string>, int, int>>{
             {{"3"}, 1, 1}, {{"3", "5"}, 1, 2}, {{"3"}, 2, 2}, {{"3", "5"}, 2, 8}})
        for (auto kind : {CyclotomicKind::Classical, CyclotomicKind::HigherLevel}) {
            Report r = verify_cyclotomic(config(Q, d), kind, 2, false);
            EXPECT_TRUE(r.pass()) << r.to_json().dump();
            EXPECT_EQ(r.config["dimension"], dim) << str(kind) << " d=" << d;
        }
}

TEST(Cyclotomic, EigenvaluesOfX1) {
    Report r = verify_cyclotomic(config({"3", "5"}, 1), CyclotomicKind::Classical);
    ASSERT_TRUE(r.pass());
    EXPECT_EQ(r.config["eigenvalues_x1"], (json{{"3", 1}, {"5", 1}}));

    Report r1 = verify_cyclotomic(config({"3"}, 1), CyclotomicKind::Classical);
    ASSERT_TRUE(r1.pass());
    EXPECT_EQ(r1.config["eigenvalues_x1"], (json{{"3", 1}}));

    ModP::Scope scope(7);
    auto cfg = validate_config<ModP>(ConfigSpec{7, "2", {"1"}, 2, 1});
    Report r7 = verify_cyclotomic(cfg, CyclotomicKind::Classical);
    ASSERT_TRUE(r7.pass()) << r7.to_json().dump();
    for (int t : {1, 2}) {
        int total = 0;
        for (const auto& [s, mult] : r7.config["eigenvalues_x" + std::to_string(t)].items()) {
            EXPECT_TRUE(s == "1" || s == "2" || s == "4") << s;
            total += mult.get<int>();
        }
        EXPECT_EQ(total, 2);
    }
}

TEST(Cyclotomic, SingleWindowCannotStabilize) {
    Report r = verify_cyclotomic(config({"3"}, 1), CyclotomicKind::Classical, 1);
    EXPECT_FALSE(r.pass());
    for (const auto& c : r.checks)
        if (c.id == "stabilized") EXPECT_FALSE(c.pass);
}
