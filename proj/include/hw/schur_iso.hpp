#pragma once

#include <map>
#include <string>
#include <vector>

#include "hw/jet.hpp"
#include "hw/quiver_schur.hpp"
#include "hw/schur.hpp"

namespace hw {

enum class SchurIsoDirection { QSchurToSchur, SchurToQSchur };

inline std::string str(SchurIsoDirection d) { return d == SchurIsoDirection::QSchurToSchur ? "qschur->schur" : "schur->qschur"; }

// Completed Schur and quiver Schur actions compared at a label point i, in the
// x coordinates y_k = 1 - x_k / i_k (so that -i_k y_k = x_k - i_k).
template <class K>
class SchurQSchurIso {
public:
    using PS = PermSum<K>;
    using GS = SchurGenSpec<K>;
    using QS = QuiverSchur<K>;

    SchurQSchurIso(const FieldConfig<K>& cfg, const std::vector<K>& a, int sign) : cfg_(cfg), d_(cfg.d), S_(cfg, sign), A_(cfg, a) {}

    const Schur<K>& schur() const { return S_; }
    const QS& qschur() const { return A_; }

    std::vector<K> point(const QSIndex& x) const {
        std::vector<K> pt;
        for (int v : x.lab) pt.push_back(A_.quiver().label(v));
        return pt;
    }
    RF<K> y_to_x(const RF<K>& f, const std::vector<K>& pt) const {
        std::vector<RF<K>> img;
        for (int k = 0; k < d_; ++k) img.push_back(RF<K>(Poly<K>::constant(d_, K(1)) - pt[k].inv() * Poly<K>::var(d_, k)));
        return f.substitute(img);
    }
    // x_k -> i_k (1 - y_k)
    RF<K> x_to_y(const RF<K>& f, const std::vector<K>& pt) const {
        std::vector<RF<K>> img;
        for (int k = 0; k < d_; ++k) img.push_back(RF<K>(Poly<K>::constant(d_, pt[k]) - pt[k] * Poly<K>::var(d_, k)));
        return f.substitute(img);
    }
    PS y_to_x(const PS& s, const std::vector<K>& pt) const {
        return s.map_coeffs([&](const Perm&, const RF<K>& c) { return y_to_x(c, pt); });
    }

    // Germ at i of the Schur operator applied to the element whose germ at i is f
    // and which vanishes off the S_lambda-orbit of i.
    RF<K> schur_apply(const SchurOp<K>& op, const QSIndex& x, const RF<K>& f) const {
        std::map<std::vector<int>, Perm> orbit; // label tuple u.i -> u
        for (const auto& u : x.lam.bar().parabolic()) orbit.emplace(x.permuted(u).lab, u);
        RF<K> out(d_);
        for (const auto& [w, c] : op.body.terms()) {
            auto it = orbit.find(x.permuted(w.inverse()).lab);
            if (it == orbit.end()) continue;
            out += c * f.permuted(it->second).permuted(w);
        }
        return out;
    }

    typename QS::Kind kind(typename GS::Kind k) const {
        switch (k) {
        case GS::SPLIT: return QS::SPLIT;
        case GS::MERGE: return QS::MERGE;
        case GS::LCROSS: return QS::LCROSS;
        case GS::RCROSS: return QS::RCROSS;
        case GS::POLY: return QS::POLY;
        default: return QS::E;
        }
    }

    // Unit u with schur(f) = qschur(u f) (merge) or schur(f) = u qschur(f) (right
    // crossing); 1 for the other generators.
    RF<K> unit(const GS& g, const QSIndex& x) const {
        const auto pt = point(x);
        auto X = [&](int k) { return Poly<K>::var(d_, k); };
        auto C = [&](const K& c) { return Poly<K>::constant(d_, c); };
        Poly<K> num = C(K(1)), den = C(K(1));
        if (g.kind == GS::MERGE) {
            auto s = *split_shape(g.to, g.from);
            for (int n = s.offset; n < s.offset + s.a; ++n)
                for (int m = s.offset + s.a; m < s.offset + s.a + s.b; ++m) {
                    const int h = A_.quiver().h(x.lab[n], x.lab[m]);
                    // p<-' factor over the Euler factor, Demazure rescaling or the cross term
                    Poly<K> top = X(m) - cfg_.q * X(n);
                    if (h > 0) {
                        top = C(K(1));
                        for (int j = 0; j < h; ++j) top *= C(pt[m]);
                        for (int j = 1; j < h; ++j) den *= X(m) - cfg_.q * X(n);
                    }
                    num *= top;
                    if (x.lab[n] == x.lab[m])
                        den *= C(-pt[n]);
                    else
                        den *= X(n) - X(m);
                }
        } else if (g.kind == GS::RCROSS) {
            auto s = *right_cross_shape(g.from, g.to);
            const K Q = cfg_.Qk(s.red);
            const K sg = S_.rcross_sign() > 0 ? K(1) : K(-1);
            for (int n = s.start; n < s.start + s.size; ++n)
                num *= x.lab[n] == A_.red_id(s.red) ? C(-Q * sg) : sg * (X(n) - C(Q));
        }
        return RF<K>::frac(num, den);
    }

    // Inputs: S_{lambda,i}-orbit sums of y-monomials of degree < N, in x coordinates.
    std::vector<RF<K>> inputs(const QSIndex& x, int N) const {
        auto stab = x.stabilizer();
        std::vector<RF<K>> out;
        std::vector<Poly<K>> seen;
        std::vector<int> e(d_, 0);
        auto rec = [&](auto&& self, int k, int left) -> void {
            if (k == d_) {
                Mono m;
                for (int t = 0; t < d_; ++t) m.e[t] = static_cast<int16_t>(e[t]);
                Poly<K> p = symmetrize_over(stab, Poly<K>::monomial(d_, m));
                if (std::find(seen.begin(), seen.end(), p) != seen.end()) return;
                seen.push_back(p);
                out.push_back(y_to_x(RF<K>(p), point(x)));
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[k] = v;
                self(self, k + 1, left - v);
            }
        };
        rec(rec, 0, N - 1);
        return out;
    }

private:
    FieldConfig<K> cfg_;
    int d_;
    Schur<K> S_;
    QS A_;
};

template <class K>
Report verify_iso_schur_qschur(const FieldConfig<K>& cfg, const std::vector<K>& a, int N,
                               SchurIsoDirection dir = SchurIsoDirection::QSchurToSchur) {
    Report rep;
    rep.suite = "iso-schur";
    rep.config = config_json(cfg);
    json aj = json::array();
    for (const auto& v : a) aj.push_back(v.str());
    rep.config["point"] = aj;
    rep.config["order"] = N;
    rep.config["direction"] = str(dir);
    if (static_cast<int>(a.size()) != cfg.d) fail("ShapeMismatch", "point length must equal d");

    auto sign = resolve_right_crossing(cfg);
    rep.add("convention/right-crossing", sign.has_value(), json{{"reason", "right crossing scalar unresolved"}});
    if (!sign) return rep;
    rep.conventions = schur_conventions<K>(*sign);
    rep.conventions["identification"] = "-i_k y_k <-> x_k - i_k";

    SchurQSchurIso<K> I(cfg, a, *sign);
    const auto& A = I.qschur();
    using GS = SchurGenSpec<K>;
    using QS = QuiverSchur<K>;

    for (const auto& x : A.indices()) {
        const auto pt = I.point(x);
        const auto ins = I.inputs(x, N);
        std::vector<GS> gens = schur_generators_from<K>(x.lam);
        gens.push_back(GS::e(x.lam));
        for (const auto& p : invariant_probes<K>(x.lam.bar(), 1))
            if (!p.is_constant()) gens.push_back(GS::poly(x.lam, RF<K>(p)));

        for (const auto& g : gens) {
            const std::string id = g.str() + " @ " + A.index_str(x);
            auto sop = I.schur().generator(g, SchurRep::Modified);
            typename QS::Op qop = g.kind == GS::POLY ? A.generator_at(QS::POLY, x.lam, x.lam, x.lab, I.x_to_y(g.f, pt))
                                                     : A.generator_at(I.kind(g.kind), g.from, g.to, x.lab);
            const PermSum<K> qx = I.y_to_x(qop.body, pt);
            const RF<K> u = I.unit(g, x);

            // the unit must be an invertible germ at i, invariant where it acts
            json uw;
            try {
                const auto j = expand_to_jet(u, pt, 1);
                if (j.body().constant_term().is_zero()) uw = {{"unit", u.str()}, {"reason", "vanishes at the point"}};
                if (!qs_invariant(u, g.kind == GS::MERGE ? x : QSIndex{g.to, x.lab}))
                    uw = {{"unit", u.str()}, {"reason", "not invariant"}};
            } catch (const Error& e) {
                uw = {{"unit", u.str()}, {"reason", e.what()}};
            }
            if (g.kind == GS::MERGE || g.kind == GS::RCROSS) rep.add("unit[" + id + "]", uw.is_null(), uw);
            if (!uw.is_null()) continue;
            const RF<K> uinv = u.inv();

            json wit;
            for (const auto& f : ins) {
                RF<K> lhs, rhs;
                if (dir == SchurIsoDirection::QSchurToSchur) {
                    // image of the quiver Schur generator acting on f, against the Schur action
                    lhs = I.schur_apply(sop, x, f);
                    rhs = g.kind == GS::MERGE ? qx.apply(u * f) : g.kind == GS::RCROSS ? u * qx.apply(f) : qx.apply(f);
                } else {
                    lhs = qx.apply(f);
                    rhs = g.kind == GS::MERGE    ? I.schur_apply(sop, x, uinv * f)
                          : g.kind == GS::RCROSS ? uinv * I.schur_apply(sop, x, f)
                                                 : I.schur_apply(sop, x, f);
                }
                try {
                    auto diff = expand_to_jet(lhs - rhs, pt, N);
                    if (!diff.is_zero()) wit = {{"input", f.str()}, {"order", N}, {"difference", diff.str()}};
                } catch (const Error& e) {
                    wit = {{"input", f.str()}, {"error", e.what()}};
                }
                if (!wit.is_null()) break;
            }
            rep.add("action[" + id + "]", wit.is_null(), wit);
        }
    }
    return rep;
}

} // namespace hw
