#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hw/cyclotomic.hpp"
#include "hw/hecke.hpp"
#include "hw/isocheck.hpp"
#include "hw/klr.hpp"
#include "hw/quiver_schur.hpp"
#include "hw/schur.hpp"
#include "hw/schur_iso.hpp"
#include "hw/workbench.hpp"

using namespace hw;

namespace {

struct Tally {
    int configs = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void add(const Report& r, const std::string& label, const std::function<bool(const Check&)>& keep = nullptr) {
        ++configs;
        for (const auto& c : r.checks) {
            if (keep && !keep(c)) continue;
            ++checks;
            if (!c.pass) failures.push_back(label + " " + c.id);
        }
    }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

int failed_criteria = 0;

void line(int n, const std::string& name, const Tally& t, double secs) {
    const bool ok = t.failures.empty() && t.checks > 0;
    if (!ok) ++failed_criteria;
    std::printf("%s %2d %-34s %4d configs %7zu checks %7.1fs", ok ? "PASS" : "FAIL", n, name.c_str(), t.configs, t.checks, secs);
    if (!t.failures.empty()) std::printf("  first failure: %s (%zu total)", t.failures.front().c_str(), t.failures.size());
    if (t.checks == 0) std::printf("  no checks ran");
    std::printf("\n");
    std::fflush(stdout);
}

void criterion(int n, const std::string& name, const std::function<void(Tally&)>& body) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const Error& e) {
        t.failures.push_back(std::string("exception ") + e.what());
    }
    line(n, name, t, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

// Q = (3,5) over the rationals and (1,3) over F_7, with q = 2 in both.
struct Field {
    uint64_t p;
    std::vector<std::string> Q;
};
const std::vector<Field> kFields{{0, {"3", "5"}}, {7, {"1", "3"}}};

ConfigSpec spec(const Field& f, int d, int ell) {
    return ConfigSpec{f.p, "2", std::vector<std::string>(f.Q.begin(), f.Q.begin() + ell), d, ell};
}

std::string tag(const Field& f, int d, int ell) {
    return (f.p ? "F" + std::to_string(f.p) : std::string("Q")) + "(d=" + std::to_string(d) + ",l=" + std::to_string(ell) + ")";
}

// Calls body.template operator()<K>(cfg) in the field of f.
template <class Body>
void in_field(const Field& f, int d, int ell, Body&& body) {
    if (f.p == 0) {
        body(validate_config<Rational>(spec(f, d, ell)));
    } else {
        ModP::Scope scope(f.p);
        body(validate_config<ModP>(spec(f, d, ell)));
    }
}

template <class K>
std::vector<K> point_alternating(const FieldConfig<K>& cfg) {
    const K a = cfg.Q.empty() ? K(1) : cfg.Q[0];
    std::vector<K> v;
    for (int k = 0; k < cfg.d; ++k) v.push_back(k % 2 ? cfg.q * a : a);
    return v;
}

template <class K>
std::vector<K> point_constant(const FieldConfig<K>& cfg) {
    return std::vector<K>(cfg.d, cfg.Q.empty() ? K(1) : cfg.Q[0]);
}

} // namespace

int main() {
    criterion(1, "presentation", [](Tally& t) {
        for (const auto& f : kFields)
            for (auto [d, ell] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}})
                in_field(f, d, ell, [&](const auto& cfg) { t.add(verify_presentation(Hecke(cfg)), tag(f, d, ell)); });
    });

    criterion(2, "basis round-trip", [](Tally& t) {
        for (const auto& f : kFields)
            for (auto [d, ell] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {2, 1}, {2, 2}})
                in_field(f, d, ell, [&](const auto& cfg) { t.add(verify_basis(Hecke(cfg), 1, 200, 6), tag(f, d, ell)); });
        for (const std::string q : {"2", "3", "-1/2"}) {
            auto cfg = validate_config<Rational>(ConfigSpec{0, q, {}, 2, 0});
            Hecke<Rational> H(cfg);
            const ColorSeq bb = ColorSeq::parse("bb");
            Mono x2 = Mono::unit(1, 1);
            HeckeBasis<Rational> expect{{{bb, bb, Perm::simple(2, 0), x2}, Rational(1)},
                                        {{bb, bb, Perm(2), x2}, -(cfg.q - Rational(1))}};
            t.expect(H.to_basis(H.X(1) * H.T(1)) == expect, "X1T1 decomposition at q=" + q);
        }
    });

    criterion(3, "center", [](Tally& t) {
        for (const auto& f : kFields)
            for (int d = 1; d <= 3; ++d)
                for (int ell = 0; ell <= 2; ++ell)
                    in_field(f, d, ell, [&](const auto& cfg) { t.add(center_check(Hecke(cfg)), tag(f, d, ell)); });
    });

    criterion(4, "Demazure identities", [](Tally& t) {
        for (int d = 2; d <= 4; ++d) t.add(verify_demazure<Rational>(d, 1, 100), "d=" + std::to_string(d));
    });

    // Schur operator identities at level 0 and Phi-compatibility up to level 1
    std::vector<std::pair<std::string, Report>> schur_reports;
    for (const auto& f : kFields)
        for (int d = 1; d <= 3; ++d)
            for (int ell = 0; ell <= 1; ++ell)
                in_field(f, d, ell, [&](const auto& cfg) { schur_reports.push_back({tag(f, d, ell), verify_schur(cfg, 1, 20)}); });
    criterion(5, "Schur operator identities", [&](Tally& t) {
        std::size_t spots = 0, factorizations = 0;
        for (const auto& [name, r] : schur_reports) {
            if (r.config["level"] != 0) continue;
            t.add(r, name);
            for (const auto& c : r.checks) {
                spots += c.id.rfind("spot/", 0) == 0;
                factorizations += c.id.rfind("nab.nprime", 0) == 0;
            }
        }
        t.expect(spots >= 3 && factorizations > 0, "spot values and the n_a n_b factorization were checked");
    });
    criterion(6, "Phi-compatibility", [&](Tally& t) {
        std::size_t n = 0;
        for (const auto& [name, r] : schur_reports) {
            t.add(r, name, [](const Check& c) { return c.id.find("phi") != std::string::npos; });
            for (const auto& c : r.checks) n += c.id.rfind("phi-compat", 0) == 0;
        }
        t.expect(n > 0, "phi-compat checks present");
    });

    criterion(7, "KLR and red-strand relations", [](Tally& t) {
        for (const auto& f : kFields)
            for (int ell = 0; ell <= 2; ++ell)
                for (int len = 1; len <= 3; ++len)
                    in_field(f, len, ell, [&](const auto& cfg) {
                        using K = std::decay_t<decltype(cfg.q)>;
                        const K a = ell > 0 ? cfg.Q[0] : K(1);
                        std::vector<K> alphabet{a, cfg.q * a};
                        if (ell == 2) alphabet.push_back(cfg.Q[1]);
                        std::vector<int> digit(len, 0);
                        while (true) {
                            std::vector<K> nu;
                            std::string s;
                            for (int k : digit) {
                                nu.push_back(alphabet[k]);
                                s += (s.empty() ? "" : ",") + alphabet[k].str();
                            }
                            Report r = verify_klr_relations(cfg, nu);
                            t.add(r, tag(f, len, ell) + " nu=" + s);
                            t.expect(r.conventions.contains("klr"), "klr convention recorded");
                            int k = 0;
                            while (k < len && ++digit[k] == static_cast<int>(alphabet.size())) digit[k++] = 0;
                            if (k == len) break;
                        }
                    });
    });

    auto iso_grid = [](Tally& t, bool schur_side) {
        for (const auto& f : kFields)
            for (int d = 1; d <= 3; ++d)
                for (int ell = 0; ell <= 2; ++ell)
                    in_field(f, d, ell, [&](const auto& cfg) {
                        for (const auto& a : {point_alternating(cfg), point_constant(cfg)})
                            for (bool fwd : {true, false}) {
                                const std::string name = tag(f, d, ell) + (fwd ? " forward" : " inverse");
                                if (schur_side)
                                    t.add(verify_iso_schur_qschur(cfg, a, 4, fwd ? SchurIsoDirection::QSchurToSchur : SchurIsoDirection::SchurToQSchur), name);
                                else
                                    t.add(verify_iso_hecke_klr(cfg, a, 4, fwd ? IsoDirection::KLRToHecke : IsoDirection::HeckeToKLR), name);
                            }
                    });
    };
    criterion(8, "completed iso Hecke-KLR (N=4)", [&](Tally& t) { iso_grid(t, false); });
    criterion(9, "completed iso Schur-quiver Schur (N=4)", [&](Tally& t) { iso_grid(t, true); });

    criterion(10, "cyclotomic dimensions and eigenvalues", [](Tally& t) {
        for (auto [d, ell] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
            for (auto kind : {CyclotomicKind::Classical, CyclotomicKind::HigherLevel})
                in_field(kFields[0], d, ell, [&](const auto& cfg) { t.add(verify_cyclotomic(cfg, kind, 2, true), tag(kFields[0], d, ell) + " " + str(kind)); });
        for (auto [d, ell] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}})
            in_field(kFields[1], d, ell, [&](const auto& cfg) { t.add(verify_cyclotomic(cfg, CyclotomicKind::Classical, 2, true), tag(kFields[1], d, ell) + " classical"); });
    });

    criterion(11, "convention ledger in every report", [](Tally& t) {
        for (const auto& f : kFields) {
            Options o;
            o.characteristic = f.p;
            o.d = 2;
            o.ell = 1;
            o.Q = {f.Q[0]};
            for (const std::string suite : {"hecke", "klr", "schur", "qschur", "iso", "cyclotomic"})
                for (const std::string side : {"hecke-klr", "schur-qschur"}) {
                    if (suite != "iso" && side != "hecke-klr") continue;
                    o.side = side;
                    Report r = run_verify(suite, o);
                    const std::string name = suite + (suite == "iso" ? "/" + side : "") + (f.p ? " F7" : " Q");
                    t.add(r, name, [](const Check& c) { return c.id.rfind("conventions/", 0) == 0; });
                    t.expect(r.conventions.contains("klr") && r.conventions.contains("schur_right_crossing"), name + " records both conventions");
                    t.expect(r.pass(), name + " passes");
                }
        }
    });

    std::printf("%s: %d of 11 criteria failed\n", failed_criteria ? "FAIL" : "PASS", failed_criteria);
    return failed_criteria ? 1 : 0;
}
