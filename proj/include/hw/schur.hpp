#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hw/combinatorics.hpp"
#include "hw/hecke.hpp"
#include "hw/report.hpp"
#include "hw/smash.hpp"

namespace hw {

enum class SchurRep { Standard, Modified };

template <class K>
void require_symmetrizer_invertible(int d) {
    if constexpr (K::prime_field)
        if (K::characteristic() <= static_cast<uint64_t>(d))
            fail("CharacteristicTooSmall", "need characteristic 0 or p > d for invariant-module equality");
}

// ---------------------------------------------------------------------------
// Shapes

struct SplitShape {
    int comp = 0, part = 0, a = 0, b = 0;
    int offset = 0; // first black index of the split part
};

// mu is a split of lambda: part j of component k replaced by (a, b)
inline std::optional<SplitShape> split_shape(const MultiComposition& lambda, const MultiComposition& mu) {
    if (lambda.ell() != mu.ell() || lambda.d() != mu.d()) return std::nullopt;
    std::optional<SplitShape> found;
    for (int k = 0; k <= lambda.ell(); ++k) {
        const auto &L = lambda[k].parts(), &M = mu[k].parts();
        if (L == M) continue;
        if (found || M.size() != L.size() + 1) return std::nullopt;
        for (std::size_t j = 0; j < L.size(); ++j) {
            bool prefix = std::equal(L.begin(), L.begin() + j, M.begin());
            bool suffix = std::equal(L.begin() + j + 1, L.end(), M.begin() + j + 2);
            if (prefix && suffix && M[j] + M[j + 1] == L[j]) {
                found = SplitShape{k, static_cast<int>(j), M[j], M[j + 1], lambda.comp_start(k) + lambda[k].start(static_cast<int>(j))};
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return found;
}

struct CrossShape {
    int from = 0, to = 0; // components
    int start = 0, size = 0; // moved black block
    int red = 0;          // 1-based index of the red strand crossed
};

// mu is obtained from lambda by moving the first part of lambda^(t) to the end of lambda^(t-1)
inline std::optional<CrossShape> left_cross_shape(const MultiComposition& lambda, const MultiComposition& mu) {
    if (lambda.ell() != mu.ell() || lambda.d() != mu.d()) return std::nullopt;
    for (int t = 1; t <= lambda.ell(); ++t) {
        if (lambda[t].size() == 0) continue;
        std::vector<Composition> c = lambda.comps();
        std::vector<int> rest(c[t].parts().begin() + 1, c[t].parts().end());
        std::vector<int> grown = c[t - 1].parts();
        int a = c[t][0];
        grown.push_back(a);
        c[t] = Composition(rest);
        c[t - 1] = Composition(grown);
        if (MultiComposition(c) == mu) return CrossShape{t, t - 1, lambda.comp_start(t), a, t};
    }
    return std::nullopt;
}

// lambda is obtained from mu by moving the last part of mu^(t) to the front of mu^(t+1)
inline std::optional<CrossShape> right_cross_shape(const MultiComposition& mu, const MultiComposition& lambda) {
    auto s = left_cross_shape(lambda, mu);
    if (!s) return std::nullopt;
    return CrossShape{s->to, s->from, s->start, s->size, s->red};
}

template <class K>
struct SchurGenSpec {
    enum Kind { E, POLY, SPLIT, MERGE, LCROSS, RCROSS };
    Kind kind = E;
    MultiComposition from, to;
    RF<K> f; // POLY only

    static SchurGenSpec e(const MultiComposition& l) { return {E, l, l, RF<K>()}; }
    static SchurGenSpec poly(const MultiComposition& l, RF<K> f) { return {POLY, l, l, std::move(f)}; }
    static SchurGenSpec split(const MultiComposition& l, const MultiComposition& m) { return {SPLIT, l, m, RF<K>()}; }
    static SchurGenSpec merge(const MultiComposition& m, const MultiComposition& l) { return {MERGE, m, l, RF<K>()}; }
    static SchurGenSpec lcross(const MultiComposition& l, const MultiComposition& m) { return {LCROSS, l, m, RF<K>()}; }
    static SchurGenSpec rcross(const MultiComposition& m, const MultiComposition& l) { return {RCROSS, m, l, RF<K>()}; }

    std::string str() const {
        switch (kind) {
        case E: return "e" + from.str();
        case POLY: return "poly" + from.str();
        case SPLIT: return "split " + from.str() + "->" + to.str();
        case MERGE: return "merge " + from.str() + "->" + to.str();
        case LCROSS: return "lcross " + from.str() + "->" + to.str();
        case RCROSS: return "rcross " + from.str() + "->" + to.str();
        }
        return "?";
    }
};

// All split/merge/crossing generators with source lambda.
template <class K>
std::vector<SchurGenSpec<K>> schur_generators_from(const MultiComposition& lambda) {
    using S = SchurGenSpec<K>;
    std::vector<S> out;
    auto comps = lambda.comps();
    for (int k = 0; k <= lambda.ell(); ++k) {
        const auto& P = comps[k].parts();
        for (std::size_t j = 0; j < P.size(); ++j) {
            for (int a = 1; a < P[j]; ++a) {
                auto c = comps;
                std::vector<int> np(P.begin(), P.begin() + j);
                np.push_back(a);
                np.push_back(P[j] - a);
                np.insert(np.end(), P.begin() + j + 1, P.end());
                c[k] = Composition(np);
                out.push_back(S::split(lambda, MultiComposition(c)));
            }
            if (j + 1 < P.size()) {
                auto c = comps;
                std::vector<int> np(P.begin(), P.begin() + j);
                np.push_back(P[j] + P[j + 1]);
                np.insert(np.end(), P.begin() + j + 2, P.end());
                c[k] = Composition(np);
                out.push_back(S::merge(lambda, MultiComposition(c)));
            }
        }
        if (k >= 1 && comps[k].size() > 0) {
            auto c = comps;
            std::vector<int> rest(P.begin() + 1, P.end()), grown = comps[k - 1].parts();
            grown.push_back(P[0]);
            c[k] = Composition(rest);
            c[k - 1] = Composition(grown);
            out.push_back(S::lcross(lambda, MultiComposition(c)));
        }
        if (k < lambda.ell() && comps[k].size() > 0) {
            auto c = comps;
            std::vector<int> rest(P.begin(), P.end() - 1), grown{P.back()};
            grown.insert(grown.end(), comps[k + 1].parts().begin(), comps[k + 1].parts().end());
            c[k] = Composition(rest);
            c[k + 1] = Composition(grown);
            out.push_back(S::rcross(lambda, MultiComposition(c)));
        }
    }
    return out;
}

// Operator k(x)^{S_lambda} -> k(x)^{S_mu}.
template <class K>
struct SchurOp {
    MultiComposition src, tgt;
    PermSum<K> body;

    RF<K> apply(const RF<K>& f) const { return body.apply(f); }
    friend SchurOp operator*(const SchurOp& a, const SchurOp& b) {
        if (a.src != b.tgt) fail("BlockMismatch", "cannot compose " + a.src.str() + " after " + b.tgt.str());
        return {b.src, a.tgt, a.body * b.body};
    }
    friend SchurOp operator+(const SchurOp& a, const SchurOp& b) {
        if (a.src != b.src || a.tgt != b.tgt) fail("BlockMismatch", "sum of operators between different blocks");
        return {a.src, a.tgt, a.body + b.body};
    }
    friend SchurOp operator*(const K& c, const SchurOp& a) { return {a.src, a.tgt, c * a.body}; }
};

// Element of m_lambda H, stored as the full Hecke operator (m_lambda already applied).
template <class K>
struct HeckeModuleElement {
    MultiComposition lambda;
    typename Hecke<K>::Op op;
};

template <class K>
PermSum<K> symmetrizer(const Composition& lambda) {
    PermSum<K> s(lambda.total());
    for (const auto& u : lambda.parabolic()) s.add_term(u, RF<K>::constant(lambda.total(), K(1)));
    return s;
}

// a = b on S_src-invariants iff (a - b) Sym_src = 0.
template <class K>
bool schur_equal(const SchurOp<K>& a, const SchurOp<K>& b) {
    require_symmetrizer_invertible<K>(a.src.d());
    if (a.src != b.src || a.tgt != b.tgt) return false;
    return ((a.body - b.body) * symmetrizer<K>(a.src.bar())).is_zero();
}

// Orbit sums of monomials with exponents in [-B,B]^d under S_lambda.
template <class K>
std::vector<Poly<K>> invariant_probes(const Composition& lambda, int B) {
    const int d = lambda.total();
    std::vector<Poly<K>> out;
    auto group = lambda.parabolic();
    for (const auto& dm : dominant_monomials(lambda, B)) out.push_back(symmetrize_over(group, Poly<K>::monomial(d, dm.m)));
    return out;
}

template <class K>
bool is_invariant(const RF<K>& f, const Composition& lambda) {
    for (int r = 0; r + 1 < lambda.total(); ++r)
        if (lambda.contains_simple(r) && !(f.permuted(Perm::simple(lambda.total(), r)) - f).is_zero()) return false;
    return true;
}

template <class K>
Poly<K> random_invariant(std::mt19937_64& rng, const Composition& lambda, int B, int terms) {
    const int d = lambda.total();
    std::uniform_int_distribution<int> ex(-B, B), co(-3, 3);
    auto group = lambda.parabolic();
    Poly<K> f = Poly<K>::constant(d, K(co(rng)));
    for (int k = 0; k < terms; ++k) {
        Mono m;
        for (int t = 0; t < d; ++t) m.e[t] = static_cast<int16_t>(ex(rng));
        f += K(co(rng)) * symmetrize_over(group, Poly<K>::monomial(d, m));
    }
    return f;
}

// ---------------------------------------------------------------------------

template <class K>
class Schur {
public:
    using HOp = typename Hecke<K>::Op;
    using PS = PermSum<K>;
    using Op = SchurOp<K>;
    using Spec = SchurGenSpec<K>;

    // rcross_sign = +1: prod (x_i - Q_t); -1: prod (Q_t - x_i)
    explicit Schur(FieldConfig<K> cfg, int rcross_sign = 1) : H_(cfg), cfg_(std::move(cfg)), d_(cfg_.d), sign_(rcross_sign) {
        require_symmetrizer_invertible<K>(d_);
        std::vector<int> c(cfg_.ell, 1);
        c.insert(c.end(), d_, 0);
        c0_ = ColorSeq(c);
    }

    const Hecke<K>& hecke() const { return H_; }
    const FieldConfig<K>& config() const { return cfg_; }
    int d() const { return d_; }
    int ell() const { return cfg_.ell; }
    int rcross_sign() const { return sign_; }
    const ColorSeq& c0() const { return c0_; }
    std::vector<MultiComposition> compositions() const { return MultiComposition::all(cfg_.ell, d_); }

    RF<K> one() const { return RF<K>::constant(d_, K(1)); }
    Poly<K> x(int t) const { return Poly<K>::var(d_, t); }

    // Linear factors of the arrow polynomials; pair (i,j), i<j, filtered by pred.
    template <class Pred>
    std::vector<Poly<K>> pair_factors(bool left, Pred&& pred) const {
        std::vector<Poly<K>> out;
        for (int i = 0; i < d_; ++i)
            for (int j = i + 1; j < d_; ++j)
                if (pred(i, j)) out.push_back(left ? x(j) - cfg_.q * x(i) : x(i) - cfg_.q * x(j));
        return out;
    }
    RF<K> product(const std::vector<Poly<K>>& fs) const {
        Poly<K> p = Poly<K>::constant(d_, K(1));
        for (const auto& f : fs) p *= f;
        return RF<K>(p);
    }
    // p->_lambda and p<-_lambda: pairs inside one part of lambda
    std::vector<Poly<K>> pr_factors(const Composition& l) const {
        auto b = l.block_ids();
        return pair_factors(false, [&](int i, int j) { return b[i] == b[j]; });
    }
    std::vector<Poly<K>> pl_factors(const Composition& l) const {
        auto b = l.block_ids();
        return pair_factors(true, [&](int i, int j) { return b[i] == b[j]; });
    }
    // p<-'_lambda: pairs in different parts
    std::vector<Poly<K>> plp_factors(const Composition& l) const {
        auto b = l.block_ids();
        return pair_factors(true, [&](int i, int j) { return b[i] != b[j]; });
    }
    RF<K> p_right(const Composition& l) const { return product(pr_factors(l)); }
    RF<K> p_left(const Composition& l) const { return product(pl_factors(l)); }
    RF<K> p_left_prime(const Composition& l) const { return product(plp_factors(l)); }
    // p<-'_{a,b} for a split: pairs in one part of lambda but different parts of mu
    RF<K> p_left_split(const Composition& lambda, const Composition& mu) const {
        auto lb = lambda.block_ids(), mb = mu.block_ids();
        return product(pair_factors(true, [&](int i, int j) { return lb[i] == lb[j] && mb[i] != mb[j]; }));
    }
    // p->'_{a,b} placed at offset: x_i - q x_j, i in the first a, j in the next b
    RF<K> p_right_ab(int a, int b, int off) const {
        return product(pair_factors(false, [&](int i, int j) { return i >= off && i < off + a && j >= off + a && j < off + a + b; }));
    }

    // partial_r, 0-based r
    PS partial(int r) const {
        RF<K> inv = RF<K>::inverse_of_product(d_, {x(r) - x(r + 1)});
        PS s(d_);
        s.add_term(Perm(d_), inv);
        s.add_term(Perm::simple(d_, r), -inv);
        return s;
    }
    PS partial(const Perm& w) const {
        PS acc = PS::identity(d_);
        for (int r : w.reduced_word()) acc = acc * partial(r);
        return acc;
    }
    // D_{a,b} at offset: w(i) = i+b for i <= a, i-a for i > a (within the block)
    static Perm w_ab(int d, int a, int b, int off) {
        std::vector<int> img(d);
        for (int k = 0; k < d; ++k) img[k] = k;
        for (int k = 0; k < a; ++k) img[off + k] = off + k + b;
        for (int k = a; k < a + b; ++k) img[off + k] = off + k - a;
        return Perm(img);
    }
    PS D_ab(int a, int b, int off) const { return partial(w_ab(d_, a, b, off)); }
    // D_n on the n variables starting at off
    PS D_block(int n, int off) const {
        std::vector<int> img(d_);
        for (int k = 0; k < d_; ++k) img[k] = k;
        for (int k = 0; k < n; ++k) img[off + k] = off + n - 1 - k;
        return partial(Perm(img));
    }

    // ---- Hecke side ------------------------------------------------------

    HOp Tw(const ColorSeq& b, const ColorSeq& c, const Perm& w) const { return H_.canonical_T(ColoredPerm(b, c, w)); }
    K mq_pow(int n) const {
        K r(1);
        for (int k = 0; k < n; ++k) r *= -cfg_.q;
        return r;
    }

    // m_lambda, n_lambda or n'_lambda on the block c (default colors(lambda))
    enum Variant { M, N, NPRIME };
    HOp m_element(const Composition& bar, Variant v, const ColorSeq& c) const {
        HOp acc = H_.zero();
        if (v == NPRIME) {
            for (const auto& w : coset_reps(bar, Composition::finest(d_))) acc += Tw(c, c, w);
            return acc;
        }
        int top = bar.longest().length();
        for (const auto& w : bar.parabolic()) acc += (v == M ? mq_pow(top - w.length()) : K(1)) * Tw(c, c, w);
        return acc;
    }
    HOp m_element(const MultiComposition& l, Variant v) const { return m_element(l.bar(), v, l.colors()); }

    // r_lambda: left crossings from c0 to colors(lambda)
    HOp rblock(const MultiComposition& l) const { return Tw(l.colors(), c0_, Perm(d_)); }

    HOp on_c0(const RF<K>& f) const { return HOp::block(c0_, c0_, PS::mult(f)); }

    // Phi_lambda(f) = r_lambda iota(m p-> f n')
    HeckeModuleElement<K> phi(const MultiComposition& l, const RF<K>& f) const {
        if (!is_invariant(f, l.bar())) fail("NotInvariant", "Phi_lambda needs an S_lambda-invariant polynomial");
        const Composition bar = l.bar();
        HOp body = rblock(l) * m_element(bar, M, c0_) * on_c0(p_right(bar) * f) * m_element(bar, NPRIME, c0_);
        return {l, body};
    }
    // r iota(p<- f p->_d D_d), the closed form of the same element
    HOp phi_closed(const MultiComposition& l, const RF<K>& f) const {
        const Composition bar = l.bar();
        return rblock(l) * HOp::block(c0_, c0_, PS::mult(p_left(bar) * f * p_right(Composition::trivial(d_))) * D_block(d_, 0));
    }

    // Element z with z m_lambda-images = the generator on m_lambda H.
    HOp hecke_generator(const Spec& g) const {
        const ColorSeq cs = g.from.colors(), ct = g.to.colors();
        switch (g.kind) {
        case Spec::E: return H_.e(cs);
        case Spec::POLY: return HOp::block(cs, cs, PS::mult(g.f));
        case Spec::SPLIT:
            need(split_shape(g.from, g.to), "InvalidSplit", g);
            return H_.e(cs);
        case Spec::MERGE: {
            need(split_shape(g.to, g.from), "InvalidSplit", g);
            const Composition lam = g.to.bar(), mu = g.from.bar();
            std::vector<Perm> reps;
            int top = 0;
            for (const auto& u : lam.parabolic()) {
                bool ok = true;
                for (int r = 0; r + 1 < d_; ++r)
                    if (mu.contains_simple(r) && u(r) > u(r + 1)) ok = false;
                if (ok) {
                    reps.push_back(u);
                    top = std::max(top, u.length());
                }
            }
            HOp acc = H_.zero();
            for (const auto& u : reps) acc += mq_pow(top - u.length()) * Tw(cs, cs, u);
            return acc;
        }
        case Spec::LCROSS:
            need(left_cross_shape(g.from, g.to), "InvalidCrossing", g);
            return Tw(ct, cs, Perm(d_));
        case Spec::RCROSS:
            need(right_cross_shape(g.from, g.to), "InvalidCrossing", g);
            return Tw(ct, cs, Perm(d_));
        }
        return H_.zero();
    }
    HeckeModuleElement<K> act(const Spec& g, const HeckeModuleElement<K>& v) const {
        if (v.lambda != g.from) fail("BlockMismatch", "generator source " + g.from.str() + " vs element in " + v.lambda.str());
        return {g.to, hecke_generator(g) * v.op};
    }

    // ---- polynomial representation ---------------------------------------

    RF<K> rcross_poly(const CrossShape& s) const {
        Poly<K> p = Poly<K>::constant(d_, K(1));
        const K Q = cfg_.Qk(s.red);
        for (int n = s.start; n < s.start + s.size; ++n) p *= sign_ > 0 ? x(n) - Poly<K>::constant(d_, Q) : Poly<K>::constant(d_, Q) - x(n);
        return RF<K>(p);
    }

    Op generator(const Spec& g, SchurRep rep = SchurRep::Standard) const {
        switch (g.kind) {
        case Spec::E: return {g.from, g.to, PS::identity(d_)};
        case Spec::POLY:
            if (!is_invariant(g.f, g.from.bar())) fail("NotInvariant", "polynomial is not S_lambda-invariant");
            return {g.from, g.to, PS::mult(g.f)};
        case Spec::SPLIT: {
            need(split_shape(g.from, g.to), "InvalidSplit", g);
            if (rep == SchurRep::Modified) return {g.from, g.to, PS::identity(d_)};
            return {g.from, g.to, PS::mult(p_left_split(g.from.bar(), g.to.bar()))};
        }
        case Spec::MERGE: {
            auto s = need(split_shape(g.to, g.from), "InvalidSplit", g);
            PS D = D_ab(s.a, s.b, s.offset);
            if (rep == SchurRep::Modified) D = D * PS::mult(p_left_split(g.to.bar(), g.from.bar()));
            return {g.from, g.to, D};
        }
        case Spec::LCROSS:
            need(left_cross_shape(g.from, g.to), "InvalidCrossing", g);
            return {g.from, g.to, PS::identity(d_)};
        case Spec::RCROSS: {
            auto s = need(right_cross_shape(g.from, g.to), "InvalidCrossing", g);
            return {g.from, g.to, PS::mult(rcross_poly(s))};
        }
        }
        return {g.from, g.to, PS(d_)};
    }

    // (p<-'_mu)^{-1} x p<-'_lambda
    Op to_modified(const Op& a) const {
        return {a.src, a.tgt,
                PS::mult(RF<K>::inverse_of_product(d_, plp_factors(a.tgt.bar()))) * a.body * PS::mult(p_left_prime(a.src.bar()))};
    }

    // Standard-rep operator of left multiplication by z : m_lambda H -> m_mu H.
    Op from_left_mult(const MultiComposition& lambda, const MultiComposition& mu, const HOp& z) const {
        const PS* zs = z.find(mu.colors(), lambda.colors());
        PS body(d_);
        if (zs) {
            auto den = pl_factors(mu.bar());
            for (const auto& f : pr_factors(Composition::trivial(d_))) den.push_back(f);
            body = PS::mult(RF<K>::inverse_of_product(d_, den)) * *zs * PS::mult(p_left(lambda.bar()) * p_right(Composition::trivial(d_)));
        }
        return {lambda, mu, body};
    }

    // Standard-rep operator of the homomorphism m_lambda h -> Z h, Z : colors(lambda) -> colors(mu).
    Op from_hom(const MultiComposition& lambda, const MultiComposition& mu, const HOp& Z) const {
        const Composition bar = lambda.bar();
        HOp ZR = Z * rblock(lambda);
        const PS* zs = ZR.find(mu.colors(), c0_);
        PS body(d_);
        if (zs) {
            RF<K> psi0 = m_element(bar, NPRIME, c0_).find(c0_, c0_)->apply(rho());
            auto den = pl_factors(mu.bar());
            for (const auto& f : pr_factors(Composition::trivial(d_))) den.push_back(f);
            body = PS::mult(RF<K>::inverse_of_product(d_, den)) * *zs * PS::mult(p_right(bar) * psi0);
        }
        return {lambda, mu, body};
    }
    // x^rho with D_d(x^rho) = 1
    RF<K> rho() const {
        Mono m;
        for (int t = 0; t < d_; ++t) m.e[t] = static_cast<int16_t>(d_ - 1 - t);
        return RF<K>(Poly<K>::monomial(d_, m));
    }

    std::string hstr(const ColorSeq& c) const { return c.str(); }

private:
    template <class T>
    static T need(const std::optional<T>& v, const char* code, const Spec& g) {
        if (!v) fail(code, g.str());
        return *v;
    }

    Hecke<K> H_;
    FieldConfig<K> cfg_;
    int d_;
    int sign_;
    ColorSeq c0_;
};

// ---------------------------------------------------------------------------
// Hom-space basis

template <class K>
struct HomBasisElement {
    Perm w;
    Mono p;
    Composition xi; // lambda cap w^{-1}(mu) cap p
    typename Hecke<K>::Op Z; // m_lambda h -> Z h
    SchurOp<K> op;
};

template <class K>
std::vector<HomBasisElement<K>> hom_basis(const Schur<K>& S, const MultiComposition& lambda, const MultiComposition& mu, int B) {
    using HOp = typename Hecke<K>::Op;
    const int d = S.d();
    const Composition lb = lambda.bar(), mb = mu.bar();
    const ColorSeq b = mu.colors(), c = lambda.colors();
    const HOp m_mu = S.m_element(mu, Schur<K>::M);
    std::vector<HomBasisElement<K>> out;
    for (const auto& w : coset_reps(mb, lb)) {
        Composition xi0 = intersect_parabolic(lb, mb, w.inverse());
        HOp left = m_mu * S.Tw(b, c, w);
        for (const auto& dm : dominant_monomials(xi0, B)) {
            auto ys = coset_reps(dm.refined, Composition::finest(d), &lb);
            int top = 0;
            for (const auto& y : ys) top = std::max(top, y.length());
            HOp Y = S.hecke().zero();
            for (const auto& y : ys) Y += S.mq_pow(top - y.length()) * S.Tw(c, c, y);
            HOp P = HOp::block(c, c, PermSum<K>::mult(RF<K>(Poly<K>::monomial(d, dm.m))));
            HOp Z = left * P * Y;
            out.push_back({w, dm.m, dm.refined, Z, S.from_hom(lambda, mu, Z)});
        }
    }
    return out;
}

// Rank of a family of sparse vectors over K.
template <class K, class Key>
int sparse_rank(std::vector<std::map<Key, K>> rows) {
    int rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto it = rows[i].begin(); it != rows[i].end();) it = it->second.is_zero() ? rows[i].erase(it) : std::next(it);
        if (rows[i].empty()) continue;
        ++rank;
        const auto [piv, pv] = *rows[i].begin();
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            auto f = rows[j].find(piv);
            if (f == rows[j].end() || f->second.is_zero()) continue;
            K fac = f->second / pv;
            for (const auto& [k, v] : rows[i]) rows[j][k] -= fac * v;
        }
    }
    return rank;
}

// Rank of the probe matrix of a list of operators with a common source.
template <class K>
int probe_rank(const std::vector<SchurOp<K>>& ops, const Composition& src, int probe_window) {
    auto probes = invariant_probes<K>(src, probe_window);
    using Key = std::pair<int, std::vector<int>>;
    std::vector<std::map<Key, K>> rows;
    for (const auto& op : ops) {
        std::map<Key, K> row;
        for (std::size_t k = 0; k < probes.size(); ++k) {
            RF<K> v = op.apply(RF<K>(probes[k]));
            if (!v.is_polynomial()) fail("NotInAlgebra", "hom basis element produced a non-Laurent value");
            for (const auto& [m, cf] : v.poly().terms()) row[{static_cast<int>(k), std::vector<int>(m.e.begin(), m.e.end())}] += cf;
        }
        rows.push_back(std::move(row));
    }
    return sparse_rank<K>(std::move(rows));
}

// ---------------------------------------------------------------------------
// Verification

template <class K>
json schur_conventions(int sign) {
    json j;
    j["schur_right_crossing"] = sign > 0 ? "prod (x_i - Q_t)" : "prod (Q_t - x_i)";
    return j;
}

// The right crossing scalar is the candidate for which right o left equals the
// red-black double crossing (X - Q) e on the Hecke side, probed at d=1, l=1.
template <class K>
std::optional<int> resolve_right_crossing(const FieldConfig<K>& cfg) {
    FieldConfig<K> probe = cfg;
    probe.d = 1;
    probe.ell = 1;
    if (probe.Q.empty()) probe.Q = {K(3)};
    probe.Q.resize(1);
    using MC = MultiComposition;
    const MC before = MC::parse("((1)|())"), after = MC::parse("(()|(1))");
    for (int sign : {1, -1}) {
        Schur<K> S(probe, sign);
        auto left = SchurGenSpec<K>::lcross(after, before);
        auto right = SchurGenSpec<K>::rcross(before, after);
        auto composite = S.generator(right) * S.generator(left);
        auto z = S.hecke_generator(right) * S.hecke_generator(left);
        if (schur_equal(composite, S.from_left_mult(after, after, z))) return sign;
    }
    return std::nullopt;
}

template <class K>
Report verify_demazure(int d, uint64_t seed, int samples = 100) {
    Report rep;
    rep.suite = "demazure";
    rep.config = {{"d", d}, {"seed", seed}, {"samples", samples}, {"field", K::field_name()}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ex(-2, 2), co(-4, 4), nt(1, 4);
    std::vector<Poly<K>> polys;
    for (int s = 0; s < samples; ++s) {
        Poly<K> f(d);
        int n = nt(rng);
        for (int k = 0; k < n; ++k) {
            Mono m;
            for (int t = 0; t < d; ++t) m.e[t] = static_cast<int16_t>(ex(rng));
            f += Poly<K>::monomial(d, m, K(co(rng)));
        }
        polys.push_back(f);
    }
    for (int r = 0; r + 1 < d; ++r) {
        bool ok = true;
        for (const auto& f : polys) ok = ok && demazure(r, demazure(r, f)).is_zero();
        rep.add("square-zero[r=" + std::to_string(r + 1) + "]", ok, json{{"r", r + 1}});
        if (r + 2 < d) {
            bool br = true;
            for (const auto& f : polys)
                br = br && demazure(r, demazure(r + 1, demazure(r, f))) == demazure(r + 1, demazure(r, demazure(r + 1, f)));
            rep.add("braid[r=" + std::to_string(r + 1) + "]", br, json{{"r", r + 1}});
        }
        for (int s = r + 2; s + 1 < d; ++s) {
            bool cm = true;
            for (const auto& f : polys) cm = cm && demazure(r, demazure(s, f)) == demazure(s, demazure(r, f));
            rep.add("commute[r=" + std::to_string(r + 1) + ",s=" + std::to_string(s + 1) + "]", cm, json{{"r", r + 1}, {"s", s + 1}});
        }
    }
    // reduced-word independence of partial_w
    for (const auto& w : Perm::all(d)) {
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        auto rec = [&](auto&& self, const Perm& v) -> void {
            if (v.is_identity()) {
                words.push_back(cur);
                return;
            }
            for (int r = 0; r + 1 < d; ++r)
                if (v.left_descent(r)) {
                    cur.push_back(r);
                    self(self, Perm::simple(d, r) * v);
                    cur.pop_back();
                }
        };
        rec(rec, w);
        bool ok = true;
        json wit;
        for (const auto& f : polys) {
            Poly<K> ref = demazure_composite(DemazurePlan::from_word(d, words[0]), f);
            for (std::size_t k = 1; k < words.size() && ok; ++k)
                if (demazure_composite(DemazurePlan::from_word(d, words[k]), f) != ref) {
                    ok = false;
                    wit = {{"w", w.str()}, {"poly", f.str()}};
                }
            if (!ok) break;
        }
        rep.add("reduced-word-independence[w=" + w.str() + "]", ok, wit);
    }
    return rep;
}

// Level-0 identities of the Demazure/symmetrizer calculus on d strands.
template <class K>
void schur_identities_level0(Report& rep, const FieldConfig<K>& base, int d) {
    FieldConfig<K> cfg = base;
    cfg.d = d;
    cfg.ell = 0;
    Schur<K> S(cfg, 1);
    using PS = PermSum<K>;
    const ColorSeq c = ColorSeq::omega(0, d);
    auto body = [&](const typename Hecke<K>::Op& op) {
        const PS* p = op.find(c, c);
        return p ? *p : PS(d);
    };
    auto cmp = [&](const std::string& id, const PS& a, const PS& b) {
        json w;
        if (!(a == b)) w = {{"lhs", a.str()}, {"rhs", b.str()}};
        rep.add(id + "[d=" + std::to_string(d) + "]", a == b, w);
    };
    const Composition full = Composition::trivial(d);
    const PS m = body(S.m_element(full, Schur<K>::M, c));
    const PS n = body(S.m_element(full, Schur<K>::N, c));
    const PS Dd = S.D_block(d, 0);
    const RF<K> pr = S.p_right(full), pl = S.p_left(full);
    cmp("m=D.pleft", m, Dd * PS::mult(pl));
    cmp("n=pright.D", n, PS::mult(pr) * Dd);
    cmp("m.pright=pleft.n", m * PS::mult(pr), PS::mult(pl) * n);
    for (int a = 1; a < d; ++a) {
        const int b = d - a;
        const Composition ab({a, b});
        PS lhs = body(S.m_element(ab, Schur<K>::N, c) * S.m_element(ab, Schur<K>::NPRIME, c));
        // (p->_a D_a)(p->_b^{+a} D_b^{+a})(p->'_{a,b} D_{b,a})
        PS first = PS::mult(S.p_right(ab)) * S.D_block(a, 0) * S.D_block(b, a);
        PS second = PS::mult(S.p_right_ab(a, b, 0)) * S.D_ab(b, a, 0);
        cmp("nab.nprime[a=" + std::to_string(a) + ",b=" + std::to_string(b) + "]", lhs, first * second);
    }
    // n_d = n_lambda n'_lambda for every lambda
    for (const auto& l : Composition::all(d))
        cmp("n=n.nprime[" + l.str() + "]", n, body(S.m_element(l, Schur<K>::N, c) * S.m_element(l, Schur<K>::NPRIME, c)));
    // T_r = -s_r - (q-1) X_{r+1} partial_r, and m_lambda T_r = -m_lambda for s_r in S_lambda
    for (int r = 0; r + 1 < d; ++r) {
        PS t = body(S.hecke().T(r + 1));
        PS rhs = -PS::single(Perm::simple(d, r), S.one()) - PS::mult((cfg.q - K(1)) * RF<K>(S.x(r + 1))) * S.partial(r);
        cmp("T=-s-(q-1)X.partial[r=" + std::to_string(r + 1) + "]", t, rhs);
    }
    for (const auto& l : Composition::all(d)) {
        PS ml = body(S.m_element(l, Schur<K>::M, c));
        for (int r = 0; r + 1 < d; ++r)
            if (l.contains_simple(r)) cmp("mT=-m[" + l.str() + ",r=" + std::to_string(r + 1) + "]", ml * body(S.hecke().T(r + 1)), -ml);
    }
    if (d == 2) {
        const K q = cfg.q;
        RF<K> v = m.apply(S.one());
        bool ok = (v - RF<K>::constant(2, -K(1) - q)).is_zero();
        rep.add("spot/m2(1)=-1-q", ok, ok ? json(nullptr) : json{{"value", v.str()}});
        RF<K> u = (m * PS::mult(pr)).apply(S.one());
        rep.add("spot/m2.pright(1)=0", u.is_zero(), u.is_zero() ? json(nullptr) : json{{"value", u.str()}});
        RF<K> dd = (Dd * PS::mult(pl)).apply(S.one());
        bool ok2 = (dd - RF<K>::constant(2, -K(1) - q)).is_zero();
        rep.add("spot/D2.pleft(1)=-1-q", ok2, ok2 ? json(nullptr) : json{{"value", dd.str()}});
    }
}

template <class K>
Report verify_schur(const FieldConfig<K>& cfg, uint64_t seed = 1, int samples = 20) {
    Report rep;
    rep.suite = "schur";
    rep.config = config_json(cfg);
    rep.config["seed"] = seed;
    rep.config["samples"] = samples;
    require_symmetrizer_invertible<K>(cfg.d);

    auto sign = resolve_right_crossing(cfg);
    rep.add("convention/right-crossing", sign.has_value(), json{{"reason", "neither sign of the right crossing scalar matches the double crossing"}});
    if (!sign) return rep;
    rep.conventions = schur_conventions<K>(*sign);

    for (int k = 1; k <= cfg.d; ++k) schur_identities_level0(rep, cfg, k);

    Schur<K> S(cfg, *sign);
    using Spec = SchurGenSpec<K>;
    std::mt19937_64 rng(seed);
    auto bstr = [](const ColorSeq& c) { return c.str(); };

    for (const auto& lam : S.compositions()) {
        const Composition lb = lam.bar();
        // m_lambda T = -m_lambda on the red-interleaved block
        auto probes = invariant_probes<K>(lb, 2);
        std::vector<RF<K>> samples_f;
        for (int s = 0; s < samples; ++s) samples_f.push_back(RF<K>(random_invariant<K>(rng, lb, 1, 2)));

        {
            RF<K> f = samples_f.front();
            json w = op_difference(S.phi(lam, f).op, S.phi_closed(lam, f), bstr);
            rep.add("phi-closed-form[" + lam.str() + "]", w.is_null(), w);
        }
        for (const auto& g : schur_generators_from<K>(lam)) {
            const std::string gid = g.str();
            auto std_op = S.generator(g, SchurRep::Standard);
            auto mod_op = S.generator(g, SchurRep::Modified);
            // invariance on the windowed spanning set
            for (auto [rep_name, op] : {std::pair{"standard", &std_op}, std::pair{"modified", &mod_op}}) {
                json wit;
                for (const auto& p : probes) {
                    RF<K> v = op->apply(RF<K>(p));
                    if (!v.is_polynomial() || !is_invariant(v, g.to.bar())) {
                        wit = {{"probe", p.str()}, {"value", v.str()}};
                        break;
                    }
                }
                rep.add(std::string("invariance/") + rep_name + "[" + gid + "]", wit.is_null(), wit);
            }
            bool inter = schur_equal(mod_op, S.to_modified(std_op));
            rep.add("modified-intertwines[" + gid + "]", inter, json{{"generator", gid}});
            // the generator is left multiplication by z on m_lambda H
            bool lm = schur_equal(std_op, S.from_left_mult(g.from, g.to, S.hecke_generator(g)));
            rep.add("hecke-realization[" + gid + "]", lm, json{{"generator", gid}});
            // Phi-compatibility
            json wit;
            for (const auto& f : samples_f) {
                auto lhs = S.act(g, S.phi(lam, f));
                auto rhs = S.phi(g.to, std_op.apply(f));
                json w = op_difference(lhs.op, rhs.op, bstr);
                if (!w.is_null()) {
                    w["f"] = f.str();
                    wit = w;
                    break;
                }
            }
            rep.add("phi-compat[" + gid + "]", wit.is_null(), wit);
        }
        // merge factorisation m_lambda = C m_mu
        for (const auto& g : schur_generators_from<K>(lam)) {
            if (g.kind != Spec::MERGE) continue;
            auto lhs = S.m_element(g.to, Schur<K>::M);
            auto rhs = S.hecke_generator(g) * S.m_element(g.from, Schur<K>::M);
            json w = op_difference(lhs, rhs, bstr);
            rep.add("merge-factor[" + g.str() + "]", w.is_null(), w);
        }
    }
    // black crossing at d=2: T_1 = split o merge + q on m_(1,1) H
    if (cfg.d == 2) {
        std::vector<Composition> comps(cfg.ell + 1);
        comps[0] = Composition({1, 1});
        MultiComposition fine(comps);
        comps[0] = Composition({2});
        MultiComposition coarse(comps);
        auto sm = S.generator(Spec::split(coarse, fine)) * S.generator(Spec::merge(fine, coarse));
        auto t1 = S.from_left_mult(fine, fine, S.hecke().Te(fine.colors().black_positions()[0] + 1, fine.colors()));
        SchurOp<K> rhs = sm + cfg.q * S.generator(Spec::e(fine));
        rep.add("black-crossing[d=2]", schur_equal(t1, rhs), json{{"lhs", t1.body.str()}, {"rhs", rhs.body.str()}});
    }
    return rep;
}

template <class K>
Report verify_hom_basis(const FieldConfig<K>& cfg, int B) {
    Report rep;
    rep.suite = "schur-hom";
    rep.config = config_json(cfg);
    rep.config["window"] = B;
    auto sign = resolve_right_crossing(cfg);
    if (sign) rep.conventions = schur_conventions<K>(*sign);
    Schur<K> S(cfg, sign.value_or(1));
    auto bstr = [](const ColorSeq& c) { return c.str(); };
    for (const auto& lam : S.compositions())
        for (const auto& mu : S.compositions()) {
            const std::string id = lam.str() + "->" + mu.str();
            auto basis = hom_basis(S, lam, mu, B);
            // well-defined: Z T_r = -Z for s_r in S_lambda
            bool wd = true;
            const ColorSeq c = lam.colors();
            auto pos = c.black_positions();
            for (const auto& e : basis)
                for (int r = 0; r + 1 < S.d(); ++r)
                    if (lam.bar().contains_simple(r) && pos[r] + 1 == pos[r + 1])
                        wd = wd && (e.Z * S.hecke().Te(pos[r] + 1, c) == -e.Z);
            rep.add("well-defined[" + id + "]", wd);
            // values on Phi images are Phi images
            bool img = true;
            json wit;
            RF<K> f = RF<K>(symmetrize_over(lam.bar().parabolic(), Poly<K>::var(S.d(), 0)));
            if (S.d() == 0) f = S.one();
            for (const auto& e : basis) {
                auto lhs = e.Z * (S.rblock(lam) * S.on_c0(S.p_right(lam.bar()) * f) * S.m_element(lam.bar(), Schur<K>::NPRIME, S.c0()));
                RF<K> g = e.op.apply(f);
                if (!g.is_polynomial() || !is_invariant(g, mu.bar())) {
                    img = false;
                    wit = {{"w", e.w.str()}, {"value", g.str()}};
                    break;
                }
                json w = op_difference(lhs, S.phi(mu, g).op, bstr);
                if (!w.is_null()) {
                    img = false;
                    wit = w;
                    break;
                }
            }
            rep.add("image-in-phi[" + id + "]", img, wit);
            std::vector<SchurOp<K>> ops;
            for (const auto& e : basis) ops.push_back(e.op);
            int r = ops.empty() ? 0 : probe_rank(ops, lam.bar(), B + 1);
            rep.add("independent[" + id + "]", r == static_cast<int>(ops.size()), json{{"size", ops.size()}, {"rank", r}});
        }
    return rep;
}

} // namespace hw
