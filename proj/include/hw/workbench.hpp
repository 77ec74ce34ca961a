#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hw/report.hpp"

namespace hw {

// Run-time configuration shared by the CLI, the config file and the tests.
// Field values are kept as strings and parsed in the chosen field.
struct Options {
    uint64_t characteristic = 0;
    std::string q = "2";
    std::vector<std::string> Q;
    int d = 2;
    int ell = 0;
    uint64_t seed = 1;
    std::vector<std::string> nu;    // KLR / quiver Schur labels; default a, qa, a, ... with a = Q_1 or 1
    std::vector<std::string> point; // a-point of the completed isomorphisms; defaults to nu
    int order = 3;
    std::string side = "hecke-klr";     // hecke-klr | schur-qschur
    std::string direction = "forward";  // forward | inverse
    int window = 2;
    std::string kind = "classical";     // classical | higher-level
    std::string rep = "standard";       // standard | modified
    std::string block;                  // colour sequence for `act`; empty means every block
    int samples = 20;
};

// Reads a workbench.toml; keys mirror the long CLI flags.
Options load_options(const std::string& path);
// Applies the keys present in a TOML table on top of `base`.
Options merge_options(Options base, const std::string& toml_text);

// Suites: hecke, klr, schur, qschur, iso, cyclotomic. Every report carries the
// resolved Schur right-crossing scalar and KLR orientation.
Report run_verify(const std::string& suite, const Options& o);

// Cyclotomic quotient dimension without the eigenvalue pass.
Report run_dim_cyclotomic(const Options& o);

// Basis decomposition T_w^{b,c} x^m of a Hecke expression.
json run_normal_form(const std::string& expr, const Options& o);

// Applies an expression (Hecke, KLR or Schur) to a polynomial.
json run_act(const std::string& expr, const std::string& poly, const Options& o);

// Machine-readable error object for a caught hw::Error or other exception.
json error_json(const std::string& code, const std::string& message);

} // namespace hw
