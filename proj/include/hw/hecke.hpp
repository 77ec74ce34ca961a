#pragma once

#include <functional>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hw/combinatorics.hpp"
#include "hw/report.hpp"
#include "hw/scalars.hpp"
#include "hw/smash.hpp"
#include "hw/words.hpp"

namespace hw {

// Generator alphabet. Indices are 1-based positions in the colour sequence,
// except for x/xinv which index black strands.
struct HeckeGen {
    enum Kind { E, X, Xinv, T, x, xinv };
    Kind kind = E;
    int idx = 0;
    ColorSeq c; // for E

    static HeckeGen e(ColorSeq c) { return {E, 0, std::move(c)}; }
    static HeckeGen X_(int i) { return {X, i, {}}; }
    static HeckeGen Xi_(int i) { return {Xinv, i, {}}; }
    static HeckeGen T_(int r) { return {T, r, {}}; }

    std::string str() const {
        switch (kind) {
        case E: return "e(" + c.str() + ")";
        case X: return "X" + std::to_string(idx);
        case Xinv: return "Xi" + std::to_string(idx);
        case T: return "T" + std::to_string(idx);
        case x: return "x" + std::to_string(idx);
        case xinv: return "x" + std::to_string(idx) + "^-1";
        }
        return "?";
    }
};

template <class K>
std::string field_str(const FieldConfig<K>& cfg) {
    std::string s = K::field_name() + " q=" + cfg.q.str() + " Q=(";
    for (std::size_t m = 0; m < cfg.Q.size(); ++m) s += (m ? "," : "") + cfg.Q[m].str();
    return s + ")";
}

template <class K>
json config_json(const FieldConfig<K>& cfg) {
    json j;
    j["field"] = K::field_name();
    j["q"] = cfg.q.str();
    json qs = json::array();
    for (const auto& v : cfg.Q) qs.push_back(v.str());
    j["Q"] = qs;
    j["d"] = cfg.d;
    j["level"] = cfg.ell;
    return j;
}

// First differing block of two block operators, or null when equal.
template <class K, class B, class BStr>
json op_difference(const SmashOp<K, B>& a, const SmashOp<K, B>& b, BStr&& bstr) {
    SmashOp<K, B> diff = a - b;
    if (diff.is_zero()) return nullptr;
    const auto& [key, ps] = *diff.blocks().begin();
    json w;
    w["target"] = bstr(key.first);
    w["source"] = bstr(key.second);
    const PermSum<K>* pa = a.find(key.first, key.second);
    const PermSum<K>* pb = b.find(key.first, key.second);
    w["lhs"] = pa ? pa->str() : "0";
    w["rhs"] = pb ? pb->str() : "0";
    return w;
}

template <class K>
struct HeckeBasisKey {
    ColorSeq b, c;
    Perm w;
    Mono m;
    friend bool operator<(const HeckeBasisKey& x, const HeckeBasisKey& y) {
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        if (x.w != y.w) return x.w < y.w;
        return x.m.e < y.m.e;
    }
    friend bool operator==(const HeckeBasisKey& x, const HeckeBasisKey& y) {
        return x.b == y.b && x.c == y.c && x.w == y.w && x.m.e == y.m.e;
    }
};

template <class K>
using HeckeBasis = std::map<HeckeBasisKey<K>, K>;

// The level-l affine Hecke algebra realised on its polynomial representation.
template <class K>
class Hecke {
public:
    using Op = SmashOp<K, ColorSeq>;
    using PS = PermSum<K>;
    using Gen = HeckeGen;

    explicit Hecke(FieldConfig<K> cfg) : cfg_(std::move(cfg)), d_(cfg_.d), ell_(cfg_.ell), blocks_(ColorSeq::all(ell_, d_)) {}

    const FieldConfig<K>& config() const { return cfg_; }
    int d() const { return d_; }
    int ell() const { return ell_; }
    int width() const { return ell_ + d_; }
    const std::vector<ColorSeq>& blocks() const { return blocks_; }

    RF<K> rf(const K& c) const { return RF<K>::constant(d_, c); }
    RF<K> var(int t) const { return RF<K>(Poly<K>::var(d_, t)); } // 0-based black index

    Op zero() const { return Op(d_); }
    Op one() const { return Op::identity(d_, blocks_); }
    Op e(const ColorSeq& c) const {
        check_colors(c);
        return Op::block(c, c, PS::identity(d_));
    }
    // X_i, 1-based position; zero on blocks where position i is red
    Op X(int i) const { return Xpow(i, 1); }
    Op Xinv(int i) const { return Xpow(i, -1); }
    // x_t on every block, 1-based black index
    Op x(int t, int power = 1) const {
        if (t < 1 || t > d_) fail("IndexOutOfRange", "x" + std::to_string(t));
        Mono m = Mono::unit(t - 1, power);
        return Op::diag(d_, blocks_, [&](const ColorSeq&) { return RF<K>(Poly<K>::monomial(d_, m)); });
    }
    Op poly(const RF<K>& f) const {
        return Op::diag(d_, blocks_, [&](const ColorSeq&) { return f; });
    }
    Op T(int r) const {
        check_r(r);
        Op acc(d_);
        for (const auto& c : blocks_) acc += Te(r, c);
        return acc;
    }
    // T_r e(c)
    Op Te(int r, const ColorSeq& c) const {
        check_r(r);
        const int p = r - 1; // 0-based position
        if (c.black(p) && c.black(p + 1)) {
            int t = c.black_index(p);
            RF<K> xt = var(t), xs = var(t + 1);
            RF<K> den = xt - xs;
            PS s(d_);
            s.add_term(Perm::simple(d_, t), (cfg_.q * xs - xt) / den);
            s.add_term(Perm(d_), -((cfg_.q - K(1)) * xs / den));
            return Op::block(c, c, s);
        }
        if (c.red(p) && c.red(p + 1)) return Op(d_);
        ColorSeq b = c.swapped(p);
        if (c.red(p)) return Op::block(b, c, PS::identity(d_));
        int t = c.black_index(p);
        int k = c.reds_upto(p + 1);
        return Op::block(b, c, PS::mult(var(t) - rf(cfg_.Qk(k))));
    }

    Op generator(const Gen& g) const {
        switch (g.kind) {
        case Gen::E: return e(g.c);
        case Gen::X: return X(g.idx);
        case Gen::Xinv: return Xinv(g.idx);
        case Gen::T: return T(g.idx);
        case Gen::x: return x(g.idx, 1);
        case Gen::xinv: return x(g.idx, -1);
        }
        return zero();
    }

    // T_w^{b,c} along the lexicographically smallest reduced word of pi(b,c,w)
    Op canonical_T(const ColoredPerm& g) const {
        check_colors(g.b);
        check_colors(g.c);
        auto it = tw_cache_.find(g);
        if (it != tw_cache_.end()) return it->second;
        std::vector<int> word = g.full().reduced_word();
        Op op = e(g.c);
        for (auto k = word.rbegin(); k != word.rend(); ++k) op = T(*k + 1) * op;
        // reds never cross and a reduced diagram crosses each pair at most once,
        // so the result must be supported on (b,c) with a nonzero top coefficient
        const PS* blk = op.find(g.b, g.c);
        if (!blk || blk->coeff(g.w).is_zero() || op.blocks().size() != 1)
            fail("InternalError", "T_w^{b,c} has unexpected support for w=" + g.w.str());
        tw_cache_.emplace(g, op);
        return op;
    }
    RF<K> leading_coeff(const ColoredPerm& g) const { return canonical_T(g).find(g.b, g.c)->coeff(g.w); }

    // Decomposition in the basis T_w^{b,c} x^m.
    HeckeBasis<K> to_basis(const Op& a) const {
        HeckeBasis<K> out;
        for (const auto& [key, ps] : a.blocks()) {
            const ColorSeq &b = key.first, &c = key.second;
            PS rest = ps;
            int guard = 0;
            while (!rest.is_zero()) {
                if (++guard > 100000) fail("InternalError", "basis peeling did not terminate");
                const Perm* top = nullptr;
                for (const auto& [w, coef] : rest.terms())
                    if (!top || length_lex_less(*top, w)) top = &w;
                Perm w = *top;
                ColoredPerm g(b, c, w);
                RF<K> ratio = rest.coeff(w) / leading_coeff(g);
                RF<K> p = ratio.permuted(w.inverse());
                if (!p.is_polynomial()) fail("NotInAlgebra", "coefficient of " + w.str() + " is not Laurent: " + p.str());
                for (const auto& [m, v] : p.poly().terms()) {
                    auto& slot = out[HeckeBasisKey<K>{b, c, w, m}];
                    slot += v;
                }
                rest -= *canonical_T(g).find(b, c) * PS::mult(p);
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }
    Op reconstruct(const HeckeBasis<K>& basis) const {
        Op acc(d_);
        for (const auto& [key, v] : basis) {
            Op tw = canonical_T(ColoredPerm(key.b, key.c, key.w));
            acc += v * (tw * Op::block(key.c, key.c, PS::mult(RF<K>(Poly<K>::monomial(d_, key.m)))));
        }
        return acc;
    }

    // Does every block map the monomials x^m, |m_i| <= B, to Laurent polynomials?
    bool preserves_laurent(const Op& a, int B) const {
        std::vector<Mono> probes;
        std::vector<int> cur(d_, -B);
        auto rec = [&](auto&& self, int k) -> void {
            if (k == d_) {
                Mono m;
                for (int j = 0; j < d_; ++j) m.e[j] = static_cast<int16_t>(cur[j]);
                probes.push_back(m);
                return;
            }
            for (int v = -B; v <= B; ++v) {
                cur[k] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        for (const auto& [key, ps] : a.blocks())
            for (const auto& m : probes)
                if (!ps.apply(RF<K>(Poly<K>::monomial(d_, m))).is_polynomial()) return false;
        return true;
    }

    std::string block_str(const ColorSeq& c) const { return c.str(); }

private:
    void check_colors(const ColorSeq& c) const {
        if (c.size() != width() || c.reds() != ell_) fail("IndexOutOfRange", "colour sequence " + c.str() + " not in J^{l,d}");
    }
    void check_r(int r) const {
        if (r < 1 || r >= width()) fail("IndexOutOfRange", "T" + std::to_string(r));
    }
    Op Xpow(int i, int e) const {
        if (i < 1 || i > width()) fail("IndexOutOfRange", "X" + std::to_string(i));
        Op acc(d_);
        for (const auto& c : blocks_) {
            if (c.red(i - 1)) continue;
            Mono m = Mono::unit(c.black_index(i - 1), e);
            acc.add_block(c, c, PS::mult(RF<K>(Poly<K>::monomial(d_, m))));
        }
        return acc;
    }

    FieldConfig<K> cfg_;
    int d_, ell_;
    std::vector<ColorSeq> blocks_;
    mutable std::map<ColoredPerm, Op> tw_cache_;
};

// The defining relations as words in e(c), X_i, X'_i, T_r.
template <class K>
std::vector<Relation<HeckeGen, K>> hecke_relations(const FieldConfig<K>& cfg) {
    using G = HeckeGen;
    using L = LinComb<G, K>;
    const int n = cfg.ell + cfg.d;
    const K one(1), q = cfg.q;
    auto blocks = ColorSeq::all(cfg.ell, cfg.d);
    std::vector<Relation<G, K>> rels;
    auto add = [&](std::string id, L lhs, L rhs) { rels.push_back({std::move(id), std::move(lhs), std::move(rhs)}); };
    auto W = [](std::vector<G> g) { return L::word(std::move(g)); };
    auto Z = L();
    auto tag = [](const char* name, std::initializer_list<std::pair<const char*, int>> idx, const ColorSeq* c) {
        std::string s = name;
        s += "[";
        bool first = true;
        for (const auto& [k, v] : idx) {
            s += (first ? "" : ",") + std::string(k) + "=" + std::to_string(v);
            first = false;
        }
        if (c) s += std::string(first ? "" : ",") + "c=" + c->str();
        return s + "]";
    };

    {
        L sum;
        for (const auto& c : blocks) sum += W({G::e(c)});
        add("idempotents-sum", sum, L::unit(one));
        for (const auto& c : blocks) add(tag("idempotent", {}, &c), W({G::e(c), G::e(c)}), W({G::e(c)}));
    }
    for (const auto& c : blocks)
        for (int i = 1; i <= n; ++i) {
            if (c.red(i - 1)) {
                add(tag("X-red-zero", {{"i", i}}, &c), W({G::X_(i), G::e(c)}), Z);
                add(tag("Xinv-red-zero", {{"i", i}}, &c), W({G::Xi_(i), G::e(c)}), Z);
            } else {
                add(tag("X-Xinv", {{"i", i}}, &c), W({G::X_(i), G::Xi_(i), G::e(c)}), W({G::e(c)}));
                add(tag("Xinv-X", {{"i", i}}, &c), W({G::Xi_(i), G::X_(i), G::e(c)}), W({G::e(c)}));
            }
            add(tag("X-e-commute", {{"i", i}}, &c), W({G::X_(i), G::e(c)}), W({G::e(c), G::X_(i)}));
            add(tag("Xinv-e-commute", {{"i", i}}, &c), W({G::Xi_(i), G::e(c)}), W({G::e(c), G::Xi_(i)}));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            add(tag("X-commute", {{"i", i}, {"j", j}}, nullptr), W({G::X_(i), G::X_(j)}), W({G::X_(j), G::X_(i)}));
            add(tag("Xinv-commute", {{"i", i}, {"j", j}}, nullptr), W({G::Xi_(i), G::Xi_(j)}), W({G::Xi_(j), G::Xi_(i)}));
        }
    for (int r = 1; r < n; ++r) {
        for (int s = r + 2; s < n; ++s)
            add(tag("T-commute", {{"r", r}, {"s", s}}, nullptr), W({G::T_(r), G::T_(s)}), W({G::T_(s), G::T_(r)}));
        for (int i = 1; i <= n; ++i)
            if (std::abs(r - i) > 1)
                add(tag("T-X-commute", {{"r", r}, {"i", i}}, nullptr), W({G::T_(r), G::X_(i)}), W({G::X_(i), G::T_(r)}));
    }
    for (int r = 1; r < n; ++r)
        for (const auto& c : blocks) {
            const int p = r - 1;
            const bool bb = c.black(p) && c.black(p + 1);
            if (c.red(p) && c.red(p + 1)) add(tag("T-red-red", {{"r", r}}, &c), W({G::T_(r), G::e(c)}), Z);
            add(tag("T-e", {{"r", r}}, &c), W({G::T_(r), G::e(c)}), W({G::e(c.swapped(p)), G::T_(r)}));
            add(tag("TX-XT", {{"r", r}}, &c), W({G::T_(r), G::X_(r + 1), G::e(c)}) - W({G::X_(r), G::T_(r), G::e(c)}),
                bb ? L(q - one, {G::X_(r + 1), G::e(c)}) : Z);
            add(tag("TX-XT-2", {{"r", r}}, &c), W({G::T_(r), G::X_(r), G::e(c)}) - W({G::X_(r + 1), G::T_(r), G::e(c)}),
                bb ? L(one - q, {G::X_(r + 1), G::e(c)}) : Z);
            L sq = W({G::T_(r), G::T_(r), G::e(c)});
            if (bb) {
                add(tag("T-quadratic", {{"r", r}}, &c), sq, L(q - one, {G::T_(r), G::e(c)}) + L(q, {G::e(c)}));
            } else if (c.black(p) && c.red(p + 1)) {
                add(tag("T-quadratic", {{"r", r}}, &c), sq,
                    W({G::X_(r), G::e(c)}) - L(cfg.Qk(c.reds_upto(p + 1)), {G::e(c)}));
            } else if (c.red(p) && c.black(p + 1)) {
                add(tag("T-quadratic", {{"r", r}}, &c), sq,
                    W({G::X_(r + 1), G::e(c)}) - L(cfg.Qk(c.reds_upto(p)), {G::e(c)}));
            }
            if (r + 1 < n) {
                L braid = W({G::T_(r), G::T_(r + 1), G::T_(r), G::e(c)}) - W({G::T_(r + 1), G::T_(r), G::T_(r + 1), G::e(c)});
                if (c.black(p + 1))
                    add(tag("braid", {{"r", r}}, &c), braid, Z);
                else if (c.black(p) && c.black(p + 2))
                    add(tag("braid", {{"r", r}}, &c), braid, L(one - q, {G::X_(r + 2), G::e(c)}));
            }
        }
    return rels;
}

template <class K, class Op, class Image, class BStr>
void check_relations(Report& rep, const std::vector<Relation<HeckeGen, K>>& rels, Image&& image, const Op& one, BStr&& bstr) {
    for (const auto& rel : rels) {
        Op l = evaluate<Op>(rel.lhs, image, one);
        Op r = evaluate<Op>(rel.rhs, image, one);
        json w = op_difference(l, r, bstr);
        if (!w.is_null()) w["relation"] = rel.lhs.str() + " = " + rel.rhs.str();
        rep.add(rel.id, w.is_null(), w);
    }
}

template <class K>
Report verify_presentation(const Hecke<K>& H) {
    Report rep;
    rep.suite = "hecke";
    rep.config = config_json(H.config());
    auto image = [&](const HeckeGen& g) { return H.generator(g); };
    check_relations(rep, hecke_relations(H.config()), image, H.one(), [](const ColorSeq& c) { return c.str(); });
    return rep;
}

// Sharp twist of a generator of H_{d,Q}(q), as an element of H_{d,Q^{-1}}(q).
// The black-red case uses -Q_k X'_{r+1} T_r e(c) with k = c_1 + ... + c_{r+1}.
template <class K>
typename Hecke<K>::Op sharp_image(const Hecke<K>& src, const Hecke<K>& dst, const HeckeGen& g) {
    using G = HeckeGen;
    switch (g.kind) {
    case G::E: return dst.e(g.c);
    case G::X: return dst.Xinv(g.idx);
    case G::Xinv: return dst.X(g.idx);
    case G::x: return dst.x(g.idx, -1);
    case G::xinv: return dst.x(g.idx, 1);
    case G::T: break;
    }
    const int r = g.idx, p = r - 1;
    typename Hecke<K>::Op acc = dst.zero();
    const K q = src.config().q;
    for (const auto& c : dst.blocks()) {
        if (c.black(p) && c.black(p + 1))
            acc += (q - K(1)) * dst.e(c) - dst.Te(r, c);
        else if (c.red(p) && c.black(p + 1))
            acc += dst.Te(r, c);
        else if (c.black(p) && c.red(p + 1))
            acc += (-src.config().Qk(c.reds_upto(p + 1))) * (dst.Xinv(r + 1) * dst.Te(r, c));
    }
    return acc;
}

template <class K>
FieldConfig<K> inverted_parameters(FieldConfig<K> cfg) {
    for (auto& v : cfg.Q) v = v.inv();
    return cfg;
}

// Twisted relations of H_{d,Q}(q) hold in H_{d,Q^{-1}}(q).
template <class K>
Report verify_sharp_twist(const Hecke<K>& H) {
    Hecke<K> Hinv(inverted_parameters(H.config()));
    Report rep;
    rep.suite = "sharp-twist";
    rep.config = config_json(H.config());
    auto image = [&](const HeckeGen& g) { return sharp_image(H, Hinv, g); };
    check_relations(rep, hecke_relations(H.config()), image, Hinv.one(), [](const ColorSeq& c) { return c.str(); });
    return rep;
}

template <class K>
Poly<K> elementary_symmetric(int d, int k) {
    Poly<K> acc(d);
    for (int mask = 0; mask < (1 << d); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Mono m;
        for (int t = 0; t < d; ++t)
            if (mask >> t & 1) m.e[t] = 1;
        acc += Poly<K>::monomial(d, m);
    }
    return acc;
}

// e_1..e_d and e_d^{-1} commute with every generator; x_1 does not when d >= 2.
template <class K>
Report center_check(const Hecke<K>& H) {
    Report rep;
    rep.suite = "center";
    rep.config = config_json(H.config());
    const int d = H.d(), n = H.width();
    std::vector<typename Hecke<K>::Op> gens;
    std::vector<std::string> names;
    for (const auto& c : H.blocks()) {
        gens.push_back(H.e(c));
        names.push_back("e(" + c.str() + ")");
    }
    for (int i = 1; i <= n; ++i) {
        gens.push_back(H.X(i));
        names.push_back("X" + std::to_string(i));
        gens.push_back(H.Xinv(i));
        names.push_back("Xi" + std::to_string(i));
    }
    for (int r = 1; r < n; ++r) {
        gens.push_back(H.T(r));
        names.push_back("T" + std::to_string(r));
    }
    auto bstr = [](const ColorSeq& c) { return c.str(); };
    std::vector<std::pair<std::string, RF<K>>> central;
    for (int k = 1; k <= d; ++k) central.push_back({"e" + std::to_string(k), RF<K>(elementary_symmetric<K>(d, k))});
    if (d > 0) central.push_back({"e" + std::to_string(d) + "^-1", RF<K>(elementary_symmetric<K>(d, d)).inv()});
    for (const auto& [zn, z] : central) {
        auto Z = H.poly(z);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            json w = op_difference(Z * gens[g], gens[g] * Z, bstr);
            rep.add("commutes[" + zn + "," + names[g] + "]", w.is_null(), w);
        }
    }
    if (d >= 2) {
        auto Z = H.x(1);
        bool any = false;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (Z * gens[g] != gens[g] * Z) any = true;
        rep.add("noncentral[x1]", any, json{{"reason", "x1 commutes with every generator"}});
    }
    return rep;
}

inline std::string word_str(const Perm& w) {
    auto word = w.reduced_word();
    if (word.empty()) return "e";
    std::string s;
    for (int r : word) s += (s.empty() ? "s" : "*s") + std::to_string(r + 1);
    return s;
}

// Basis decomposition as an array of {target, source, perm, word, exponents, coeff}.
template <class K>
json basis_json(const HeckeBasis<K>& b, int d) {
    json arr = json::array();
    for (const auto& [key, v] : b) {
        json ex = json::array();
        for (int t = 0; t < d; ++t) ex.push_back(key.m.e[t]);
        arr.push_back(json{{"target", key.b.str()}, {"source", key.c.str()}, {"perm", key.w.str()},
                           {"word", word_str(key.w)}, {"exponents", ex}, {"coeff", v.str()}});
    }
    return arr;
}

// Seeded random words in e(c), X_i^{+-1}, T_r of length <= maxlen.
template <class K>
std::vector<std::vector<HeckeGen>> random_hecke_words(const Hecke<K>& H, std::mt19937_64& rng, int count, int maxlen) {
    std::vector<HeckeGen> alphabet;
    for (const auto& c : H.blocks()) alphabet.push_back(HeckeGen::e(c));
    for (int i = 1; i <= H.width(); ++i) {
        alphabet.push_back(HeckeGen::X_(i));
        alphabet.push_back(HeckeGen::Xi_(i));
    }
    for (int r = 1; r < H.width(); ++r) alphabet.push_back(HeckeGen::T_(r));
    std::uniform_int_distribution<int> len(1, maxlen);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::vector<std::vector<HeckeGen>> out;
    for (int k = 0; k < count; ++k) {
        std::vector<HeckeGen> w(len(rng));
        for (auto& g : w) g = alphabet[pick(rng)];
        out.push_back(std::move(w));
    }
    return out;
}

// to_basis followed by reconstruct is the identity on random words.
template <class K>
Report verify_basis(const Hecke<K>& H, uint64_t seed = 1, int count = 200, int maxlen = 6) {
    Report rep;
    rep.suite = "basis";
    rep.config = config_json(H.config());
    rep.config["seed"] = seed;
    rep.config["words"] = count;
    rep.config["max_length"] = maxlen;
    std::mt19937_64 rng(seed);
    auto bstr = [](const ColorSeq& c) { return c.str(); };
    int k = 0;
    for (const auto& word : random_hecke_words(H, rng, count, maxlen)) {
        std::string name;
        typename Hecke<K>::Op op = H.one();
        for (const auto& g : word) {
            name += (name.empty() ? "" : "*") + g.str();
            op = op * H.generator(g);
        }
        json w;
        try {
            w = op_difference(H.reconstruct(H.to_basis(op)), op, bstr);
        } catch (const Error& e) {
            w = json{{"error", e.code()}, {"message", e.what()}};
        }
        if (!w.is_null()) w["word"] = name;
        char id[32];
        std::snprintf(id, sizeof id, "roundtrip[%03d]", k++);
        rep.add(id, w.is_null(), w);
    }
    return rep;
}

} // namespace hw
