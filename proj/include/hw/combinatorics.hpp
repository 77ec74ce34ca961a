#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hw/poly.hpp"

namespace hw {

// Tuple of positive parts; text form (2,3). The empty composition is ().
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : p_(std::move(parts)) {
        for (int v : p_)
            if (v <= 0) fail("BadComposition", "parts must be positive");
    }
    static Composition trivial(int d) { return d ? Composition({d}) : Composition(); }
    static Composition finest(int d) { return Composition(std::vector<int>(d, 1)); }

    const std::vector<int>& parts() const { return p_; }
    int size() const { return static_cast<int>(p_.size()); }
    int operator[](int k) const { return p_[k]; }
    int total() const { return std::accumulate(p_.begin(), p_.end(), 0); }
    int start(int k) const { return std::accumulate(p_.begin(), p_.begin() + k, 0); }
    // block id of each position
    std::vector<int> block_ids() const {
        std::vector<int> b;
        for (int k = 0; k < size(); ++k) b.insert(b.end(), p_[k], k);
        return b;
    }
    // s_r in S_lambda
    bool contains_simple(int r) const {
        auto b = block_ids();
        return b[r] == b[r + 1];
    }
    bool contains(const Perm& w) const {
        auto b = block_ids();
        for (int k = 0; k < w.size(); ++k)
            if (b[k] != b[w(k)]) return false;
        return true;
    }
    bool refines(const Composition& coarse) const {
        if (total() != coarse.total()) return false;
        auto a = block_ids(), b = coarse.block_ids();
        for (std::size_t k = 0; k + 1 < a.size(); ++k)
            if (a[k] == a[k + 1] && b[k] != b[k + 1]) return false;
        return true;
    }
    std::vector<Perm> parabolic() const {
        std::vector<Perm> out;
        for (const auto& w : Perm::all(total()))
            if (contains(w)) out.push_back(w);
        return out;
    }
    Perm longest() const {
        std::vector<int> img;
        int s = 0;
        for (int v : p_) {
            for (int j = v - 1; j >= 0; --j) img.push_back(s + j);
            s += v;
        }
        return Perm(img);
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Composition& a, const Composition& b) { return a.p_ != b.p_; }
    friend bool operator<(const Composition& a, const Composition& b) { return a.p_ < b.p_; }

    std::string str() const {
        std::string s = "(";
        for (int k = 0; k < size(); ++k) s += (k ? "," : "") + std::to_string(p_[k]);
        return s + ")";
    }
    static Composition parse(const std::string& src) {
        std::string t;
        for (char ch : src)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') fail("ParseError", "composition: " + src);
        std::vector<int> v;
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                fail("ParseError", "composition part: " + src);
            v.push_back(std::stoi(item));
        }
        return Composition(v);
    }

    // all compositions of d
    static std::vector<Composition> all(int d) {
        std::vector<Composition> out;
        if (d == 0) return {Composition()};
        for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
            std::vector<int> parts;
            int run = 1;
            for (int k = 0; k < d - 1; ++k) {
                if (mask >> k & 1) {
                    parts.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            parts.push_back(run);
            out.emplace_back(parts);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<int> p_;
};

// Red/black sequence; 1 = red. Text form rbbrb.
class ColorSeq {
public:
    ColorSeq() = default;
    explicit ColorSeq(std::vector<int> c) : c_(std::move(c)) {
        for (int v : c_)
            if (v != 0 && v != 1) fail("BadColorSeq", "entries must be 0 or 1");
    }
    static ColorSeq omega(int ell, int d) {
        std::vector<int> c(ell, 1);
        c.insert(c.end(), d, 0);
        return ColorSeq(c);
    }
    // J^{ell,d} in lexicographic order of the 0/1 tuple
    static std::vector<ColorSeq> all(int ell, int d) {
        std::vector<int> c(d, 0);
        c.insert(c.end(), ell, 1);
        std::vector<ColorSeq> out;
        do {
            out.emplace_back(c);
        } while (std::next_permutation(c.begin(), c.end()));
        return out;
    }

    int size() const { return static_cast<int>(c_.size()); }
    int operator[](int k) const { return c_[k]; }
    bool red(int k) const { return c_[k] == 1; }
    bool black(int k) const { return c_[k] == 0; }
    const std::vector<int>& values() const { return c_; }
    int reds() const { return std::accumulate(c_.begin(), c_.end(), 0); }
    int blacks() const { return size() - reds(); }
    // number of reds among positions 0..k inclusive
    int reds_upto(int k) const {
        int s = 0;
        for (int j = 0; j <= k; ++j) s += c_[j];
        return s;
    }
    // 0-based black index of position k (k must be black)
    int black_index(int k) const {
        int t = 0;
        for (int j = 0; j < k; ++j) t += c_[j] == 0;
        return t;
    }
    int red_index(int k) const {
        int t = 0;
        for (int j = 0; j < k; ++j) t += c_[j];
        return t;
    }
    std::vector<int> black_positions() const {
        std::vector<int> out;
        for (int k = 0; k < size(); ++k)
            if (!c_[k]) out.push_back(k);
        return out;
    }
    std::vector<int> red_positions() const {
        std::vector<int> out;
        for (int k = 0; k < size(); ++k)
            if (c_[k]) out.push_back(k);
        return out;
    }
    ColorSeq swapped(int r) const {
        ColorSeq s(*this);
        std::swap(s.c_[r], s.c_[r + 1]);
        return s;
    }

    friend bool operator==(const ColorSeq& a, const ColorSeq& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ColorSeq& a, const ColorSeq& b) { return a.c_ != b.c_; }
    friend bool operator<(const ColorSeq& a, const ColorSeq& b) { return a.c_ < b.c_; }

    std::string str() const {
        std::string s;
        for (int v : c_) s += v ? 'r' : 'b';
        return s;
    }
    static ColorSeq parse(const std::string& src) {
        std::vector<int> c;
        for (char ch : src) {
            if (ch == 'r' || ch == '1')
                c.push_back(1);
            else if (ch == 'b' || ch == '0')
                c.push_back(0);
            else if (ch == ' ' || ch == ',')
                continue;
            else
                fail("ParseError", "color sequence: " + src);
        }
        return ColorSeq(c);
    }

private:
    std::vector<int> c_;
};

// (l+1)-tuple of compositions; components may be empty. Text form ((1)|(2,1)|()).
class MultiComposition {
public:
    MultiComposition() = default;
    explicit MultiComposition(std::vector<Composition> comps) : c_(std::move(comps)) {
        if (c_.empty()) fail("BadComposition", "a multicomposition has at least one component");
    }
    static MultiComposition level0(const Composition& c) { return MultiComposition({c}); }

    int ell() const { return static_cast<int>(c_.size()) - 1; }
    int d() const {
        int s = 0;
        for (const auto& c : c_) s += c.total();
        return s;
    }
    const std::vector<Composition>& comps() const { return c_; }
    const Composition& operator[](int k) const { return c_[k]; }
    // concatenation lambda-bar
    Composition bar() const {
        std::vector<int> p;
        for (const auto& c : c_) p.insert(p.end(), c.parts().begin(), c.parts().end());
        return Composition(p);
    }
    // black offset where component k starts
    int comp_start(int k) const {
        int s = 0;
        for (int j = 0; j < k; ++j) s += c_[j].total();
        return s;
    }
    // index into bar() of part j of component k
    int bar_index(int k, int j) const {
        int s = 0;
        for (int t = 0; t < k; ++t) s += c_[t].size();
        return s + j;
    }
    // e^0(lambda): blacks of component 0, red, blacks of component 1, red, ...
    ColorSeq colors() const {
        std::vector<int> c;
        for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
            if (k) c.push_back(1);
            c.insert(c.end(), c_[k].total(), 0);
        }
        return ColorSeq(c);
    }

    friend bool operator==(const MultiComposition& a, const MultiComposition& b) { return a.c_ == b.c_; }
    friend bool operator!=(const MultiComposition& a, const MultiComposition& b) { return a.c_ != b.c_; }
    friend bool operator<(const MultiComposition& a, const MultiComposition& b) { return a.c_ < b.c_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < c_.size(); ++k) s += (k ? "|" : "") + c_[k].str();
        return s + ")";
    }
    static MultiComposition parse(const std::string& src) {
        std::string t;
        for (char ch : src)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.size() >= 2 && t.front() == '(' && t[1] != '(' ) // bare composition, level 0
            return level0(Composition::parse(t));
        if (t.size() < 2 || t.front() != '(' || t.back() != ')') fail("ParseError", "multicomposition: " + src);
        std::string body = t.substr(1, t.size() - 2);
        std::vector<Composition> comps;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, '|')) comps.push_back(Composition::parse(item));
        if (!body.empty() && body.back() == '|') fail("ParseError", "multicomposition: " + src);
        return MultiComposition(comps);
    }

    // all (l+1)-compositions of d
    static std::vector<MultiComposition> all(int ell, int d) {
        std::vector<MultiComposition> out;
        std::vector<Composition> cur;
        auto rec = [&](auto&& self, int k, int left) -> void {
            if (k == ell) {
                cur.push_back(Composition::trivial(0));
                for (const auto& c : Composition::all(left)) {
                    cur.back() = c;
                    out.emplace_back(cur);
                }
                cur.pop_back();
                return;
            }
            for (int t = 0; t <= left; ++t)
                for (const auto& c : Composition::all(t)) {
                    cur.push_back(c);
                    self(self, k + 1, left - t);
                    cur.pop_back();
                }
        };
        rec(rec, 0, d);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<Composition> c_;
};

// Black permutation w between color sequences c (source) and b (target).
struct ColoredPerm {
    ColorSeq b, c;
    Perm w;

    ColoredPerm(ColorSeq target, ColorSeq source, Perm black) : b(std::move(target)), c(std::move(source)), w(std::move(black)) {
        if (b.size() != c.size() || b.reds() != c.reds()) fail("IncompatibleSequences", "color sequences not in one orbit");
        if (w.size() != c.blacks()) fail("IncompatibleSequences", "black permutation has wrong size");
    }
    static ColoredPerm identity(const ColorSeq& c) { return ColoredPerm(c, c, Perm(c.blacks())); }

    // pi(b,c,w) in S_{l+d}: k-th red of c to k-th red of b, t-th black of c to w(t)-th black of b
    Perm full() const {
        auto rb = b.red_positions(), rc = c.red_positions();
        auto bb = b.black_positions(), bc = c.black_positions();
        std::vector<int> img(c.size());
        for (std::size_t k = 0; k < rc.size(); ++k) img[rc[k]] = rb[k];
        for (std::size_t t = 0; t < bc.size(); ++t) img[bc[t]] = bb[w(static_cast<int>(t))];
        return Perm(img);
    }

    friend bool operator==(const ColoredPerm& x, const ColoredPerm& y) { return x.b == y.b && x.c == y.c && x.w == y.w; }
    friend bool operator<(const ColoredPerm& x, const ColoredPerm& y) {
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.w < y.w;
    }
};

// g o h, source of g must equal target of h
inline ColoredPerm compose(const ColoredPerm& g, const ColoredPerm& h) {
    if (g.c != h.b) fail("BlockMismatch", "colored permutations are not composable");
    return ColoredPerm(g.b, h.c, g.w * h.w);
}

// Minimal length representatives of S_lambda \ S_d / S_mu, optionally restricted to S_nu.
inline std::vector<Perm> coset_reps(const Composition& lambda, const Composition& mu, const Composition* nu = nullptr) {
    if (lambda.total() != mu.total()) fail("BlockMismatch", "compositions of different totals");
    if (nu && (!lambda.refines(*nu) || !mu.refines(*nu))) fail("NotSubgroup", "parabolic is not contained in S_nu");
    auto lb = lambda.block_ids(), mb = mu.block_ids();
    const int d = lambda.total();
    std::vector<Perm> out;
    for (const auto& w : Perm::all(d)) {
        if (nu && !nu->contains(w)) continue;
        bool ok = true;
        Perm wi = w.inverse();
        for (int r = 0; r + 1 < d && ok; ++r) {
            if (mb[r] == mb[r + 1] && w(r) > w(r + 1)) ok = false;
            if (lb[r] == lb[r + 1] && wi(r) > wi(r + 1)) ok = false;
        }
        if (ok) out.push_back(w);
    }
    return out;
}

inline bool is_min_double_coset_rep(const Composition& lambda, const Composition& mu, const Perm& w) {
    auto reps = coset_reps(lambda, mu);
    return std::find(reps.begin(), reps.end(), w) != reps.end();
}

// Composition with S = S_lambda cap w S_mu w^{-1}, for w in D_{lambda,mu}.
inline Composition intersect_parabolic(const Composition& lambda, const Composition& mu, const Perm& w) {
    if (!is_min_double_coset_rep(lambda, mu, w)) fail("NotMinimalRep", "w is not a minimal double coset representative");
    auto lb = lambda.block_ids(), mb = mu.block_ids();
    Perm wi = w.inverse();
    std::vector<int> parts;
    const int d = lambda.total();
    for (int k = 0; k < d; ++k) {
        if (k > 0 && lb[k] == lb[k - 1] && mb[wi(k)] == mb[wi(k - 1)])
            ++parts.back();
        else
            parts.push_back(1);
    }
    return Composition(parts);
}

// lambda cap mu for refinements (S_lambda cap S_mu)
inline Composition intersect(const Composition& lambda, const Composition& mu) {
    return intersect_parabolic(lambda, mu, Perm(lambda.total()));
}

struct DominantMonomial {
    Mono m;
    Composition refined; // lambda cap p
};

// Exponent vectors in [-B,B]^d non-decreasing inside each part of lambda.
inline std::vector<DominantMonomial> dominant_monomials(const Composition& lambda, int B) {
    if (B < 0) fail("BadParameter", "window must be nonnegative");
    const int d = lambda.total();
    auto blk = lambda.block_ids();
    std::vector<DominantMonomial> out;
    std::vector<int> a(d, -B);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == d) {
            Mono m;
            std::vector<int> parts;
            for (int j = 0; j < d; ++j) {
                m.e[j] = static_cast<int16_t>(a[j]);
                if (j > 0 && blk[j] == blk[j - 1] && a[j] == a[j - 1])
                    ++parts.back();
                else
                    parts.push_back(1);
            }
            out.push_back({m, Composition(parts)});
            return;
        }
        int lo = (k > 0 && blk[k] == blk[k - 1]) ? a[k - 1] : -B;
        for (int v = lo; v <= B; ++v) {
            a[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline Composition refine_by_monomial(const Composition& lambda, const Mono& p) {
    auto blk = lambda.block_ids();
    std::vector<int> parts;
    for (int j = 0; j < lambda.total(); ++j) {
        if (j > 0 && blk[j] == blk[j - 1] && p.e[j] < p.e[j - 1]) fail("NotDominant", "monomial not in X_lambda^+");
        if (j > 0 && blk[j] == blk[j - 1] && p.e[j] == p.e[j - 1])
            ++parts.back();
        else
            parts.push_back(1);
    }
    return Composition(parts);
}

} // namespace hw
