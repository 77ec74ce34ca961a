#include "hw/workbench.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <toml.hpp>

#include "hw/cyclotomic.hpp"
#include "hw/expr.hpp"
#include "hw/hecke.hpp"
#include "hw/isocheck.hpp"
#include "hw/klr.hpp"
#include "hw/quiver_schur.hpp"
#include "hw/schur.hpp"
#include "hw/schur_iso.hpp"

namespace hw {

namespace {

std::vector<std::string> string_list(const toml::node& n, const std::string& key) {
    std::vector<std::string> out;
    if (const auto* arr = n.as_array()) {
        for (const auto& v : *arr) {
            if (auto s = v.value<std::string>())
                out.push_back(*s);
            else if (auto i = v.value<int64_t>())
                out.push_back(std::to_string(*i));
            else
                fail("ConfigError", key + " entries must be strings or integers");
        }
    } else if (auto s = n.value<std::string>()) {
        std::stringstream ss(*s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
    } else if (auto i = n.value<int64_t>()) {
        out.push_back(std::to_string(*i));
    } else {
        fail("ConfigError", key + " must be a list or a comma-separated string");
    }
    return out;
}

std::string scalar_string(const toml::node& n, const std::string& key) {
    if (auto s = n.value<std::string>()) return *s;
    if (auto i = n.value<int64_t>()) return std::to_string(*i);
    fail("ConfigError", key + " must be a string or an integer");
}

template <class T>
T integer(const toml::node& n, const std::string& key) {
    auto i = n.value<int64_t>();
    if (!i) fail("ConfigError", key + " must be an integer");
    return static_cast<T>(*i);
}

template <class K>
std::vector<K> parse_values(const std::vector<std::string>& v) {
    std::vector<K> out;
    for (const auto& s : v) out.push_back(K::parse(s));
    return out;
}

// Runs f(cfg) in the field selected by the options.
template <class F>
auto with_field(const Options& o, F&& f) {
    ConfigSpec spec{o.characteristic, o.q, o.Q, o.d, o.ell};
    if (o.characteristic == 0) return f(validate_config<Rational>(spec));
    if (!is_prime_u64(o.characteristic)) fail("NonPrimeCharacteristic", std::to_string(o.characteristic) + " is not prime");
    ModP::Scope scope(o.characteristic);
    return f(validate_config<ModP>(spec));
}

// a, qa, a, ... with a = Q_1 (or 1 at level 0)
template <class K>
std::vector<K> default_nu(const FieldConfig<K>& cfg) {
    const K a = cfg.Q.empty() ? K(1) : cfg.Q[0];
    std::vector<K> out;
    for (int k = 0; k < cfg.d; ++k) out.push_back(k % 2 ? cfg.q * a : a);
    return out;
}

template <class K>
std::vector<K> labels(const FieldConfig<K>& cfg, const std::vector<std::string>& given) {
    std::vector<K> v = given.empty() ? default_nu(cfg) : parse_values<K>(given);
    if (static_cast<int>(v.size()) != cfg.d)
        fail("ShapeMismatch", "expected " + std::to_string(cfg.d) + " labels, got " + std::to_string(v.size()));
    return v;
}

// Resolves both sign/orientation conventions, records them and fails the
// report if they are unresolved or disagree with what the suite itself used.
template <class K>
void attach_conventions(Report& rep, const FieldConfig<K>& cfg, const std::vector<K>& nu) {
    const json before = rep.conventions;
    auto sign = resolve_right_crossing(cfg);
    rep.add("conventions/right-crossing", sign.has_value(), json{{"reason", "right crossing scalar unresolved"}});
    ConventionResolution klr = resolve_klr_convention(cfg, nu);
    rep.add("conventions/klr", klr.resolved, json{{"reason", "KLR orientation unresolved"}, {"evidence", klr.evidence}});

    json resolved = json::object();
    if (sign) resolved["schur_right_crossing"] = schur_conventions<K>(*sign)["schur_right_crossing"];
    if (klr.resolved) resolved["klr"] = klr.conv.to_json();
    json clash;
    for (auto it = resolved.begin(); it != resolved.end(); ++it) {
        if (before.contains(it.key()) && before[it.key()] != it.value())
            clash = json{{"key", it.key()}, {"suite", before[it.key()]}, {"resolved", it.value()}};
        rep.conventions[it.key()] = it.value();
    }
    rep.add("conventions/consistent", clash.is_null(), clash);
}

CyclotomicKind parse_kind(const std::string& k) {
    if (k == "classical") return CyclotomicKind::Classical;
    if (k == "higher-level") return CyclotomicKind::HigherLevel;
    fail("BadParameter", "kind must be classical or higher-level");
}

Report merged(const std::string& suite, const json& config, std::vector<std::pair<std::string, Report>> parts) {
    Report rep;
    rep.suite = suite;
    rep.config = config;
    for (auto& [prefix, r] : parts) rep.merge(r, prefix + "/");
    return rep;
}

template <class K>
Report verify_in(const std::string& suite, const FieldConfig<K>& cfg, const Options& o) {
    Report rep;
    std::vector<K> nu;
    if (suite == "hecke") {
        Hecke<K> H(cfg);
        rep = merged("hecke", config_json(cfg),
                     {{"presentation", verify_presentation(H)},
                      {"sharp-twist", verify_sharp_twist(H)},
                      {"center", center_check(H)},
                      {"basis", verify_basis(H, o.seed)}});
        rep.config["seed"] = o.seed;
    } else if (suite == "klr") {
        nu = labels(cfg, o.nu);
        rep = verify_klr_relations(cfg, nu);
    } else if (suite == "schur") {
        std::vector<std::pair<std::string, Report>> parts{{"identities", verify_schur(cfg, o.seed, o.samples)},
                                                          {"demazure", verify_demazure<K>(cfg.d, o.seed)}};
        // the Hom-space sweep grows fast; about a minute at d = 3
        if (cfg.d <= 2) parts.push_back({"hom-basis", verify_hom_basis(cfg, 1)});
        rep = merged("schur", config_json(cfg), std::move(parts));
        rep.config["seed"] = o.seed;
        rep.config["samples"] = o.samples;
    } else if (suite == "qschur") {
        nu = labels(cfg, o.nu);
        rep = verify_qschur(cfg, nu, o.window);
    } else if (suite == "iso") {
        nu = labels(cfg, o.point.empty() ? o.nu : o.point);
        const bool fwd = o.direction == "forward";
        if (!fwd && o.direction != "inverse") fail("BadParameter", "direction must be forward or inverse");
        if (o.side == "hecke-klr")
            rep = verify_iso_hecke_klr(cfg, nu, o.order, fwd ? IsoDirection::KLRToHecke : IsoDirection::HeckeToKLR);
        else if (o.side == "schur-qschur")
            rep = verify_iso_schur_qschur(cfg, nu, o.order,
                                          fwd ? SchurIsoDirection::QSchurToSchur : SchurIsoDirection::SchurToQSchur);
        else
            fail("BadParameter", "side must be hecke-klr or schur-qschur");
    } else if (suite == "cyclotomic") {
        rep = verify_cyclotomic(cfg, parse_kind(o.kind), o.window, true);
    } else {
        fail("BadParameter", "unknown suite '" + suite + "'");
    }
    if (nu.empty()) nu = default_nu(cfg);
    attach_conventions(rep, cfg, nu);
    return rep;
}

template <class K>
json normal_form_in(const std::string& src, const FieldConfig<K>& cfg) {
    Expr e = parse_expr(src);
    bind(e, cfg.d, cfg.ell);
    const ExprAlgebra alg = classify(e);
    if (alg != ExprAlgebra::Hecke && alg != ExprAlgebra::Scalar)
        fail("BadParameter", "normal-form takes Hecke expressions, got a " + str(alg) + " expression");
    Hecke<K> H(cfg);
    std::optional<Schur<K>> S;
    if (contains(e, {Expr::M, Expr::N})) S.emplace(cfg, resolve_right_crossing(cfg).value_or(1));
    auto op = eval_hecke(e, H, S ? &*S : nullptr);
    json out;
    out["expr"] = print(e);
    out["config"] = config_json(cfg);
    out["basis"] = basis_json(H.to_basis(op), cfg.d);
    return out;
}

template <class K, class B, class BStr>
json images(const SmashOp<K, B>& op, const std::vector<B>& sources, const RF<K>& f, char var, BStr&& bstr) {
    json img = json::object();
    for (const auto& b : sources)
        for (const auto& [t, v] : op.apply(b, f))
            if (!v.is_zero()) img[bstr(b) + "->" + bstr(t)] = v.str(var);
    return img;
}

template <class K>
json act_in(const std::string& src, const std::string& poly, const FieldConfig<K>& cfg, const Options& o) {
    Expr e = parse_expr(src);
    bind(e, cfg.d, cfg.ell);
    const ExprAlgebra alg = classify(e);
    json out;
    out["expr"] = print(e);
    out["input"] = poly;
    out["config"] = config_json(cfg);
    json img = json::object();
    if (alg == ExprAlgebra::Schur) {
        Schur<K> S(cfg, resolve_right_crossing(cfg).value_or(1));
        const SchurRep rep = o.rep == "modified" ? SchurRep::Modified : SchurRep::Standard;
        if (o.rep != "standard" && o.rep != "modified") fail("BadParameter", "rep must be standard or modified");
        auto op = eval_schur(e, S, rep);
        const RF<K> f(Poly<K>::parse(poly, cfg.d, 'x'));
        const RF<K> v = op.apply(f);
        if (!v.is_zero()) img[op.src.str() + "->" + op.tgt.str()] = v.str('x');
        out["rep"] = o.rep;
    } else if (alg == ExprAlgebra::KLR) {
        const std::vector<K> nu = labels(cfg, o.nu);
        ConventionResolution res = resolve_klr_convention(cfg, nu);
        if (!res.resolved) fail("ConventionUnresolved", "KLR orientation could not be resolved");
        KLR<K> R(cfg, nu, res.conv);
        auto op = eval_klr(e, R);
        const RF<K> f(Poly<K>::parse(poly, cfg.d, 'y'));
        std::vector<LBlock> sources;
        for (const auto& b : R.blocks())
            if (o.block.empty() || b.c == ColorSeq::parse(o.block)) sources.push_back(b);
        img = images(op, sources, f, 'y', [&](const LBlock& b) { return R.block_str(b); });
        out["conventions"] = json{{"klr", res.conv.to_json()}};
    } else {
        Hecke<K> H(cfg);
        std::optional<Schur<K>> S;
        if (contains(e, {Expr::M, Expr::N})) S.emplace(cfg, resolve_right_crossing(cfg).value_or(1));
        auto op = eval_hecke(e, H, S ? &*S : nullptr);
        const RF<K> f(Poly<K>::parse(poly, cfg.d, 'x'));
        std::vector<ColorSeq> sources;
        for (const auto& c : H.blocks())
            if (o.block.empty() || c == ColorSeq::parse(o.block)) sources.push_back(c);
        img = images(op, sources, f, 'x', [](const ColorSeq& c) { return c.str(); });
    }
    out["images"] = img;
    if (img.size() == 1) out["result"] = img.begin().value();
    else if (img.empty()) out["result"] = "0";
    return out;
}

} // namespace

Options merge_options(Options o, const std::string& toml_text) {
    toml::table t;
    try {
        t = toml::parse(toml_text);
    } catch (const toml::parse_error& err) {
        fail("ConfigError", std::string(err.description()));
    }
    for (const auto& [k, v] : t) {
        const std::string key(k.str());
        if (key == "char") o.characteristic = integer<uint64_t>(v, key);
        else if (key == "q") o.q = scalar_string(v, key);
        else if (key == "Q") o.Q = string_list(v, key);
        else if (key == "d") o.d = integer<int>(v, key);
        else if (key == "level") o.ell = integer<int>(v, key);
        else if (key == "seed") o.seed = integer<uint64_t>(v, key);
        else if (key == "nu") o.nu = string_list(v, key);
        else if (key == "point") o.point = string_list(v, key);
        else if (key == "order") o.order = integer<int>(v, key);
        else if (key == "side") o.side = scalar_string(v, key);
        else if (key == "direction") o.direction = scalar_string(v, key);
        else if (key == "window") o.window = integer<int>(v, key);
        else if (key == "kind") o.kind = scalar_string(v, key);
        else if (key == "rep") o.rep = scalar_string(v, key);
        else if (key == "block") o.block = scalar_string(v, key);
        else if (key == "samples") o.samples = integer<int>(v, key);
        else fail("ConfigError", "unknown key '" + key + "'");
    }
    return o;
}

Options load_options(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ConfigError", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return merge_options(Options{}, ss.str());
}

Report run_verify(const std::string& suite, const Options& o) {
    return with_field(o, [&](const auto& cfg) { return verify_in(suite, cfg, o); });
}

Report run_dim_cyclotomic(const Options& o) {
    return with_field(o, [&](const auto& cfg) {
        Report rep = verify_cyclotomic(cfg, parse_kind(o.kind), o.window, false);
        attach_conventions(rep, cfg, default_nu(cfg));
        return rep;
    });
}

json run_normal_form(const std::string& expr, const Options& o) {
    return with_field(o, [&](const auto& cfg) { return normal_form_in(expr, cfg); });
}

json run_act(const std::string& expr, const std::string& poly, const Options& o) {
    return with_field(o, [&](const auto& cfg) { return act_in(expr, poly, cfg, o); });
}

json error_json(const std::string& code, const std::string& message) {
    return json{{"error", json{{"code", code}, {"message", message}}}, {"pass", false}};
}

} // namespace hw
