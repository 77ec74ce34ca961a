#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <string>
#include <vector>

#include "hw/klr.hpp"
#include "hw/schur.hpp"

namespace hw {

// (lambda, i): i lists the vertex id of every black strand.
struct QSIndex {
    MultiComposition lam;
    std::vector<int> lab;

    friend bool operator==(const QSIndex& a, const QSIndex& b) { return a.lam == b.lam && a.lab == b.lab; }
    friend bool operator!=(const QSIndex& a, const QSIndex& b) { return !(a == b); }
    friend bool operator<(const QSIndex& a, const QSIndex& b) {
        if (a.lam != b.lam) return a.lam < b.lam;
        return a.lab < b.lab;
    }
    // labels moved along w: (w.i)_{w(k)} = i_k
    QSIndex permuted(const Perm& w) const {
        QSIndex r{lam, lab};
        for (int k = 0; k < static_cast<int>(lab.size()); ++k) r.lab[w(k)] = lab[k];
        return r;
    }
    // S_{lambda,i}: the stabiliser of i in S_lambda, as a composition-free list
    std::vector<Perm> stabilizer() const {
        std::vector<Perm> out;
        for (const auto& w : lam.bar().parabolic())
            if (permuted(w).lab == lab) out.push_back(w);
        return out;
    }
    // Canonical representative (smallest labels) and w in S_lambda with w.i = canonical.
    std::pair<QSIndex, Perm> canonical() const {
        const int d = static_cast<int>(lab.size());
        auto blk = lam.bar().block_ids();
        std::vector<int> order(d);
        std::iota(order.begin(), order.end(), 0);
        // stable sort inside each part by label
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (blk[a] != blk[b]) return blk[a] < blk[b];
            return lab[a] < lab[b];
        });
        std::vector<int> img(d);
        for (int k = 0; k < d; ++k) img[order[k]] = k;
        Perm w(img);
        return {permuted(w), w};
    }
};

template <class K>
struct QSOp {
    QSIndex src, tgt;
    PermSum<K> body;

    RF<K> apply(const RF<K>& f) const { return body.apply(f); }
    friend QSOp operator*(const QSOp& a, const QSOp& b) {
        if (a.src != b.tgt) fail("BlockMismatch", "quiver Schur operators are not composable");
        return {b.src, a.tgt, a.body * b.body};
    }
    friend QSOp operator+(const QSOp& a, const QSOp& b) {
        if (a.src != b.src || a.tgt != b.tgt) fail("BlockMismatch", "sum of operators between different blocks");
        return {a.src, a.tgt, a.body + b.body};
    }
};

template <class K>
bool qs_equal(const QSOp<K>& a, const QSOp<K>& b) {
    require_symmetrizer_invertible<K>(static_cast<int>(a.src.lab.size()));
    if (a.src != b.src || a.tgt != b.tgt) return false;
    PermSum<K> sym(a.body.nvars());
    const int d = static_cast<int>(a.src.lab.size());
    for (const auto& u : a.src.stabilizer()) sym.add_term(u, RF<K>::constant(d, K(1)));
    return ((a.body - b.body) * sym).is_zero();
}

// The quiver Schur algebra on sPol, generators realised at a given representative.
template <class K>
class QuiverSchur {
public:
    using PS = PermSum<K>;
    using Op = QSOp<K>;
    enum Kind { E, POLY, SPLIT, MERGE, LCROSS, RCROSS };

    QuiverSchur(FieldConfig<K> cfg, const std::vector<K>& nu) : cfg_(std::move(cfg)), d_(cfg_.d), g_(Quiver<K>::for_config(cfg_, nu)) {
        for (const auto& v : nu) nu_ids_.push_back(g_.id(v));
        for (const auto& Qm : cfg_.Q) red_ids_.push_back(g_.add(Qm));
    }

    const FieldConfig<K>& config() const { return cfg_; }
    const Quiver<K>& quiver() const { return g_; }
    int d() const { return d_; }
    const std::vector<int>& nu_ids() const { return nu_ids_; }

    std::string index_str(const QSIndex& x) const {
        std::string s = x.lam.str() + " @ [";
        for (std::size_t k = 0; k < x.lab.size(); ++k) s += (k ? "," : "") + g_.label(x.lab[k]).str();
        return s + "]";
    }

    // All (lambda, i) with i the canonical representative of an S_lambda-orbit on the orbit of nu.
    std::vector<QSIndex> indices() const {
        std::vector<QSIndex> out;
        std::vector<int> base = nu_ids_;
        std::sort(base.begin(), base.end());
        for (const auto& lam : MultiComposition::all(cfg_.ell, d_)) {
            std::vector<int> i = base;
            do {
                QSIndex x{lam, i};
                if (x.canonical().first == x) out.push_back(x);
            } while (std::next_permutation(i.begin(), i.end()));
        }
        return out;
    }

    RF<K> y(int t) const { return RF<K>(Poly<K>::var(d_, t)); }

    // Demazure operator on the ordered variable list vars, splitting as (a, b).
    PS demazure_on(const std::vector<int>& vars, int a) const {
        const int n = static_cast<int>(vars.size());
        std::vector<int> img(n);
        for (int k = 0; k < a; ++k) img[k] = k + (n - a);
        for (int k = a; k < n; ++k) img[k] = k - a;
        PS acc = PS::identity(d_);
        for (int r : Perm(img).reduced_word()) {
            int u = vars[r], v = vars[r + 1];
            RF<K> inv = RF<K>::inverse_of_product(d_, {Poly<K>::var(d_, u) - Poly<K>::var(d_, v)});
            PS s(d_);
            s.add_term(Perm(d_), inv);
            s.add_term(Perm::transposition(d_, u, v), -inv);
            acc = acc * s;
        }
        return acc;
    }

    // Euler factor prod (y_n - y_m), n in the first block, m in the second, i_n -> i_m.
    RF<K> euler(const std::vector<int>& lab, int off, int a, int b) const {
        Poly<K> p = Poly<K>::constant(d_, K(1));
        for (int n = off; n < off + a; ++n)
            for (int m = off + a; m < off + a + b; ++m)
                for (int k = 0; k < g_.h(lab[n], lab[m]); ++k) p *= Poly<K>::var(d_, n) - Poly<K>::var(d_, m);
        return RF<K>(p);
    }
    // Vertex-wise Demazure product prod_v D_{a_v,b_v} on a merged block.
    PS vertex_demazure(const std::vector<int>& lab, int off, int a, int b) const {
        std::map<int, std::pair<std::vector<int>, int>> per; // vertex -> (positions, #first)
        for (int n = off; n < off + a + b; ++n) {
            auto& e = per[lab[n]];
            e.first.push_back(n);
            if (n < off + a) ++e.second;
        }
        PS acc = PS::identity(d_);
        for (const auto& [v, e] : per) acc = acc * demazure_on(e.first, e.second);
        return acc;
    }

    // Generator between (from, i) and (to, i) at the representative i, no re-indexing.
    Op generator_at(Kind k, const MultiComposition& from, const MultiComposition& to, const std::vector<int>& i,
                    const RF<K>& f = RF<K>()) const {
        if (static_cast<int>(i.size()) != d_) fail("ShapeMismatch", "label tuple has wrong length");
        QSIndex s{from, i}, t{to, i};
        switch (k) {
        case E:
            if (from != to) fail("ShapeMismatch", "idempotent needs equal shapes");
            return {s, t, PS::identity(d_)};
        case POLY: {
            if (from != to) fail("ShapeMismatch", "polynomial needs equal shapes");
            for (const auto& w : s.stabilizer())
                if (!(f.permuted(w) - f).is_zero()) fail("NotInvariant", "polynomial is not S_{lambda,i}-invariant");
            return {s, t, PS::mult(f)};
        }
        case SPLIT:
            if (!split_shape(from, to)) fail("ShapeMismatch", "not a split: " + from.str() + "->" + to.str());
            return {s, t, PS::identity(d_)};
        case MERGE: {
            auto sh = split_shape(to, from);
            if (!sh) fail("ShapeMismatch", "not a merge: " + from.str() + "->" + to.str());
            return {s, t, vertex_demazure(i, sh->offset, sh->a, sh->b) * PS::mult(euler(i, sh->offset, sh->a, sh->b))};
        }
        case LCROSS:
            if (!left_cross_shape(from, to)) fail("ShapeMismatch", "not a left crossing: " + from.str() + "->" + to.str());
            return {s, t, PS::identity(d_)};
        case RCROSS: {
            auto sh = right_cross_shape(from, to);
            if (!sh) fail("ShapeMismatch", "not a right crossing: " + from.str() + "->" + to.str());
            Poly<K> p = Poly<K>::constant(d_, K(1));
            for (int n = sh->start; n < sh->start + sh->size; ++n)
                if (i[n] == red_ids_[sh->red - 1]) p *= Poly<K>::var(d_, n);
            return {s, t, PS::mult(RF<K>(p))};
        }
        }
        return {s, t, PS(d_)};
    }

    // Re-index an operator so that source and target are canonical representatives.
    Op canonicalize(const Op& a) const {
        auto [cs, ws] = a.src.canonical();
        auto [ct, wt] = a.tgt.canonical();
        const RF<K> one = RF<K>::constant(d_, K(1));
        // the component at w.i is w applied to the component at i
        return {cs, ct, PS::single(wt, one) * a.body * PS::single(ws.inverse(), one)};
    }
    Op generator(Kind k, const MultiComposition& from, const MultiComposition& to, const std::vector<int>& i,
                 const RF<K>& f = RF<K>()) const {
        return canonicalize(generator_at(k, from, to, i, f));
    }

    // Invariant probes: S_{lambda,i}-orbit sums of monomials with exponents in [0,B].
    std::vector<Poly<K>> probes(const QSIndex& x, int B) const {
        auto stab = x.stabilizer();
        std::vector<Poly<K>> out;
        std::set<std::vector<std::pair<std::vector<int>, std::string>>> seen;
        std::vector<int> e(d_, 0);
        auto rec = [&](auto&& self, int k) -> void {
            if (k == d_) {
                Mono m;
                for (int t = 0; t < d_; ++t) m.e[t] = static_cast<int16_t>(e[t]);
                Poly<K> p = symmetrize_over(stab, Poly<K>::monomial(d_, m));
                std::vector<std::pair<std::vector<int>, std::string>> key;
                for (const auto& [mm, c] : p.terms()) key.push_back({std::vector<int>(mm.e.begin(), mm.e.end()), c.str()});
                if (seen.insert(key).second) out.push_back(p);
                return;
            }
            for (int v = 0; v <= B; ++v) {
                e[k] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        return out;
    }

    int red_id(int k) const { return red_ids_.at(k - 1); }

private:
    FieldConfig<K> cfg_;
    int d_;
    Quiver<K> g_;
    std::vector<int> nu_ids_, red_ids_;
};

template <class K>
bool qs_invariant(const RF<K>& f, const QSIndex& x) {
    for (const auto& w : x.stabilizer())
        if (!(f.permuted(w) - f).is_zero()) return false;
    return true;
}

template <class K>
Report verify_qschur(const FieldConfig<K>& cfg, const std::vector<K>& nu, int B = 2) {
    Report rep;
    rep.suite = "qschur";
    rep.config = config_json(cfg);
    json nj = json::array();
    for (const auto& v : nu) nj.push_back(v.str());
    rep.config["nu"] = nj;
    rep.config["window"] = B;
    QuiverSchur<K> A(cfg, nu);
    rep.config["quiver"] = A.quiver().describe();
    using QS = QuiverSchur<K>;
    auto kind_of = [](typename SchurGenSpec<K>::Kind k) {
        switch (k) {
        case SchurGenSpec<K>::SPLIT: return QS::SPLIT;
        case SchurGenSpec<K>::MERGE: return QS::MERGE;
        case SchurGenSpec<K>::LCROSS: return QS::LCROSS;
        case SchurGenSpec<K>::RCROSS: return QS::RCROSS;
        default: return QS::E;
        }
    };
    for (const auto& x : A.indices()) {
        auto probes = A.probes(x, B);
        for (const auto& g : schur_generators_from<K>(x.lam)) {
            auto op = A.generator(kind_of(g.kind), g.from, g.to, x.lab);
            json wit;
            for (const auto& p : probes) {
                RF<K> v = op.apply(RF<K>(p));
                bool ok = v.is_polynomial() && v.poly().is_polynomial() && qs_invariant(v, op.tgt);
                if (!ok) {
                    wit = {{"probe", p.str('y')}, {"value", v.str('y')}};
                    break;
                }
            }
            rep.add("invariance[" + g.str() + " @ " + A.index_str(x) + "]", wit.is_null(), wit);
        }
        auto e = A.generator(QS::E, x.lam, x.lam, x.lab);
        rep.add("idempotent[" + A.index_str(x) + "]", qs_equal(e * e, e));
    }
    // spot values on small shapes
    if (cfg.d >= 2) {
        std::vector<int> parts(cfg.d, 1);
        parts[0] = 1;
        std::vector<int> cp = parts;
        cp[0] = 2;
        cp.erase(cp.begin() + 1);
        std::vector<Composition> fine_c(cfg.ell + 1), coarse_c(cfg.ell + 1);
        fine_c[0] = Composition(parts);
        coarse_c[0] = Composition(cp);
        MultiComposition fine(fine_c), coarse(coarse_c);
        for (const auto& x : A.indices()) {
            if (x.lam != fine || x.lab[0] != x.lab[1]) continue;
            auto m = A.generator_at(QS::MERGE, fine, coarse, x.lab);
            auto s = A.generator_at(QS::SPLIT, coarse, fine, x.lab);
            RF<K> one = RF<K>::constant(cfg.d, K(1));
            rep.add("spot[merge(y1)=1 @ " + A.index_str(x) + "]", (m.apply(A.y(0)) - one).is_zero(),
                    json{{"value", m.apply(A.y(0)).str('y')}});
            rep.add("spot[merge.split(1)=0 @ " + A.index_str(x) + "]", (m * s).apply(one).is_zero());
        }
    }
    if (cfg.ell >= 1) {
        std::vector<Composition> a(cfg.ell + 1), b(cfg.ell + 1);
        a[1] = Composition::trivial(cfg.d);
        b[0] = Composition::trivial(cfg.d);
        MultiComposition lam(a), mu(b);
        for (const auto& x : A.indices()) {
            if (x.lam != lam) continue;
            auto rl = A.generator_at(QS::RCROSS, mu, lam, x.lab) * A.generator_at(QS::LCROSS, lam, mu, x.lab);
            Poly<K> expect = Poly<K>::constant(cfg.d, K(1));
            for (int n = 0; n < cfg.d; ++n)
                if (x.lab[n] == A.red_id(1)) expect *= Poly<K>::var(cfg.d, n);
            rep.add("spot[rcross.lcross @ " + A.index_str(x) + "]", rl.body == PermSum<K>::mult(RF<K>(expect)),
                    json{{"value", rl.body.str('y')}});
        }
    }
    // consistency with the KLR Demazure action: split o merge on e((1^d), i) with i_r = i_{r+1}
    if (cfg.ell == 0 && cfg.d >= 2) {
        KLR<K> R(cfg, nu, KLRConvention{});
        const MultiComposition fine = MultiComposition::level0(Composition::finest(cfg.d));
        for (const auto& b : R.blocks()) {
            for (int r = 0; r + 1 < cfg.d; ++r) {
                if (b.lab[r] != b.lab[r + 1]) continue;
                std::vector<int> parts(cfg.d, 1);
                parts[r] = 2;
                parts.erase(parts.begin() + r + 1);
                MultiComposition coarse = MultiComposition::level0(Composition(parts));
                std::vector<int> lab;
                for (int t = 0; t < cfg.d; ++t) lab.push_back(A.quiver().id(R.quiver().label(b.lab[t])));
                auto sm = A.generator_at(QS::SPLIT, coarse, fine, lab) * A.generator_at(QS::MERGE, fine, coarse, lab);
                const auto klr_op = R.psie(r + 1, b);
                const PermSum<K>* psi = klr_op.find(b, b);
                bool ok = psi && *psi == sm.body;
                rep.add("klr-demazure[r=" + std::to_string(r + 1) + "," + R.block_str(b) + "]", ok,
                        json{{"quiver_schur", sm.body.str('y')}, {"klr", psi ? psi->str('y') : "0"}});
            }
        }
    }
    return rep;
}

} // namespace hw
