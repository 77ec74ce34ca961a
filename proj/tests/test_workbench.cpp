#include <gtest/gtest.h>

#include "hw/error.hpp"
#include "hw/workbench.hpp"

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

} // namespace

TEST(Workbench, ActExamples) {
    Options o;
    EXPECT_EQ(run_act("T1", "x1", o)["result"], "-2*x2");
    EXPECT_EQ(run_act("T1", "1", o)["result"], "-1");
    EXPECT_EQ(run_act("x1*x2 - x2*x1", "x1", o)["result"], "0");
    o.nu = {"1", "1"};
    EXPECT_EQ(run_act("psi1", "1", o)["result"], "0");
}

TEST(Workbench, NormalFormOfX1T1) {
    Options o;
    o.q = "3";
    json nf = run_normal_form("X1*T1", o);
    ASSERT_EQ(nf["basis"].size(), 2u);
    std::map<std::string, std::string> coeff;
    for (const auto& term : nf["basis"]) coeff[term["word"]] = term["coeff"];
    EXPECT_EQ(coeff["s1"], "1");
    EXPECT_EQ(coeff["e"], "-2");
    EXPECT_EQ(code_of([&] { run_normal_form("psi1", o); }), "BadParameter");
    EXPECT_EQ(code_of([&] { run_normal_form("T0", o); }), "IndexError");
}

TEST(Workbench, ConfigMerging) {
    Options o = merge_options(Options{}, "char = 7\nQ = [\"1\"]\nlevel = 1\nd = 3\nkind = \"higher-level\"\n");
    EXPECT_EQ(o.characteristic, 7u);
    EXPECT_EQ(o.Q, std::vector<std::string>{"1"});
    EXPECT_EQ(o.ell, 1);
    EXPECT_EQ(o.d, 3);
    EXPECT_EQ(o.kind, "higher-level");
    EXPECT_EQ(o.q, "2");
    EXPECT_EQ(merge_options(Options{}, "nu = \"1,2\"").nu, (std::vector<std::string>{"1", "2"}));
    EXPECT_EQ(code_of([] { merge_options(Options{}, "colour = 3"); }), "ConfigError");
    EXPECT_EQ(code_of([] { merge_options(Options{}, "d = \"two\""); }), "ConfigError");
    EXPECT_EQ(code_of([] { merge_options(Options{}, "d = "); }), "ConfigError");
    EXPECT_EQ(code_of([] { load_options("/nonexistent/workbench.toml"); }), "ConfigError");
}

TEST(Workbench, EveryReportRecordsConventions) {
    Options o;
    o.d = 2;
    o.ell = 1;
    o.Q = {"3"};
    for (std::string suite : {"hecke", "klr", "qschur", "iso", "cyclotomic"}) {
        Report r = run_verify(suite, o);
        EXPECT_TRUE(r.pass()) << suite;
        EXPECT_TRUE(r.conventions.contains("klr")) << suite;
        EXPECT_TRUE(r.conventions.contains("schur_right_crossing")) << suite;
    }
}

TEST(Workbench, ReportsAreByteIdentical) {
    Options o;
    o.d = 2;
    o.ell = 1;
    o.Q = {"3"};
    o.seed = 5;
    for (std::string suite : {"hecke", "iso"})
        EXPECT_EQ(run_verify(suite, o).to_json().dump(2), run_verify(suite, o).to_json().dump(2)) << suite;
}

TEST(Workbench, ParameterErrors) {
    Options o;
    EXPECT_EQ(code_of([&] { run_verify("nonsense", o); }), "BadParameter");
    o.characteristic = 9;
    EXPECT_EQ(code_of([&] { run_verify("hecke", o); }), "NonPrimeCharacteristic");
    o.characteristic = 0;
    o.side = "sideways";
    EXPECT_EQ(code_of([&] { run_verify("iso", o); }), "BadParameter");
    Options l;
    l.nu = {"1"};
    EXPECT_EQ(code_of([&] { run_verify("klr", l); }), "ShapeMismatch");
    EXPECT_EQ(error_json("X", "m")["error"]["code"], "X");
}
