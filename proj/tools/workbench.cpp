#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hw/error.hpp"
#include "hw/workbench.hpp"

namespace {

using hw::Options;

// Flags land in a scratch Options; only the ones given on the command line
// override the config file.
struct FlagSet {
    Options given;
    std::vector<std::pair<CLI::Option*, std::function<void(Options&)>>> overrides;

    template <class T>
    void add(CLI::App& app, const std::string& name, T Options::*field, const std::string& help) {
        CLI::Option* opt = app.add_option(name, given.*field, help);
        if constexpr (std::is_same_v<T, std::vector<std::string>>) opt->delimiter(',');
        overrides.push_back({opt, [this, field](Options& o) { o.*field = given.*field; }});
    }
    Options resolve(const std::string& config) const {
        Options o = config.empty() ? Options{} : hw::load_options(config);
        for (const auto& [opt, apply] : overrides)
            if (opt->count() > 0) apply(o);
        return o;
    }
};

int emit(const hw::json& j, int code) {
    std::cout << j.dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for higher-level affine Hecke, KLR and Schur algebras"};
    app.require_subcommand(1);
    FlagSet flags;
    std::string config;
    app.add_option("--config", config, "workbench.toml with keys named after the long flags");
    flags.add(app, "--char", &Options::characteristic, "field characteristic (0 for the rationals)");
    flags.add(app, "--q", &Options::q, "parameter q");
    flags.add(app, "--Q", &Options::Q, "parameters Q_1,...,Q_l");
    flags.add(app, "--d", &Options::d, "number of black strands");
    flags.add(app, "--level", &Options::ell, "level l (number of red strands)");
    flags.add(app, "--seed", &Options::seed, "seed for randomized checks");
    flags.add(app, "--nu", &Options::nu, "KLR and quiver Schur labels");
    flags.add(app, "--point", &Options::point, "point a of the completed isomorphisms");
    flags.add(app, "--order", &Options::order, "jet order N");
    flags.add(app, "--side", &Options::side, "hecke-klr or schur-qschur");
    flags.add(app, "--direction", &Options::direction, "forward or inverse");
    flags.add(app, "--window", &Options::window, "exponent window B");
    flags.add(app, "--kind", &Options::kind, "classical or higher-level");
    flags.add(app, "--rep", &Options::rep, "standard or modified Schur representation");
    flags.add(app, "--block", &Options::block, "colour sequence the polynomial is placed in");
    flags.add(app, "--samples", &Options::samples, "random invariant polynomials per check");

    std::string suite, expr, dim_what;
    std::vector<std::string> act_args;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "hecke | klr | schur | qschur | iso | cyclotomic")->required();
    auto* nf = app.add_subcommand("normal-form", "basis decomposition of a Hecke expression");
    nf->add_option("expr", expr)->required();
    auto* act = app.add_subcommand("act", "apply an expression to a polynomial: act <expr> on <poly>");
    act->add_option("args", act_args)->required()->expected(3);
    auto* dim = app.add_subcommand("dim", "cyclotomic quotient dimension: dim cyclotomic");
    dim->add_option("what", dim_what)->required()->check(CLI::IsMember({"cyclotomic"}));
    for (auto* sub : {verify, nf, act, dim}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return emit(hw::error_json("UsageError", e.what()), 2);
    }

    const auto start = std::chrono::steady_clock::now();
    auto wall = [&] {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::fprintf(stderr, "wall time: %.3f s\n", s);
    };
    try {
        const Options o = flags.resolve(config);
        int code = 0;
        if (*verify) {
            hw::Report rep = hw::run_verify(suite, o);
            std::fprintf(stderr, "%s: %zu checks, %zu failed\n", rep.suite.c_str(), rep.checks.size(), rep.failures());
            code = emit(rep.to_json(), rep.pass() ? 0 : 1);
        } else if (*dim) {
            hw::Report rep = hw::run_dim_cyclotomic(o);
            code = emit(rep.to_json(), rep.pass() ? 0 : 1);
        } else if (*nf) {
            code = emit(hw::run_normal_form(expr, o), 0);
        } else {
            if (act_args[1] != "on") hw::fail("UsageError", "expected: act <expr> on <poly>");
            code = emit(hw::run_act(act_args[0], act_args[2], o), 0);
        }
        wall();
        return code;
    } catch (const hw::Error& e) {
        wall();
        return emit(hw::error_json(e.code(), e.message()), 2);
    } catch (const std::exception& e) {
        wall();
        return emit(hw::error_json("InternalError", e.what()), 2);
    }
}
