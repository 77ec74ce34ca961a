#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hw/poly.hpp"

namespace hw {

// num / prod f_k^{m_k}. Monomial and scalar parts of denominators are absorbed
// into the Laurent numerator; each stored factor is a polynomial without
// monomial content whose leading coefficient is 1. Denominator factors are
// cancelled by exact trial division, which is a complete test when the factors
// are irreducible (all denominators produced by the engines are linear forms).
template <class K>
class RF {
public:
    using Factor = std::pair<Poly<K>, int>;

    explicit RF(int n = 0) : num_(n) {}
    RF(Poly<K> p) : num_(std::move(p)) {}
    static RF constant(int n, const K& c) { return RF(Poly<K>::constant(n, c)); }
    static RF frac(const Poly<K>& num, const Poly<K>& den) {
        RF r(num);
        r.divide_by_poly(den);
        r.cancel();
        return r;
    }
    // 1 / (f_1 ... f_k), keeping factors separate
    static RF inverse_of_product(int n, const std::vector<Poly<K>>& fs) {
        RF r = constant(n, K(1));
        for (const auto& f : fs) r.divide_by_poly(f);
        r.cancel();
        return r;
    }

    int nvars() const { return num_.nvars(); }
    const Poly<K>& num() const { return num_; }
    const std::vector<Factor>& den() const { return den_; }
    Poly<K> den_poly() const {
        Poly<K> d = Poly<K>::constant(num_.nvars(), K(1));
        for (const auto& [f, m] : den_) d *= f.pow(m);
        return d;
    }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    const Poly<K>& poly() const {
        if (!den_.empty()) fail("NotPolynomial", "rational function has a denominator: " + str());
        return num_;
    }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }

    RF operator-() const {
        RF r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RF operator+(const RF& a, const RF& b) { return add(a, b, false); }
    friend RF operator-(const RF& a, const RF& b) { return add(a, b, true); }
    RF& operator+=(const RF& o) { return *this = add(*this, o, false); }
    RF& operator-=(const RF& o) { return *this = add(*this, o, true); }

    friend RF operator*(const RF& a, const RF& b) {
        if (a.is_zero() || b.is_zero()) return RF(std::max(a.nvars(), b.nvars()));
        RF r(a.num_ * b.num_);
        r.den_ = merge_factors(a.den_, b.den_);
        r.cancel();
        return r;
    }
    RF& operator*=(const RF& o) { return *this = *this * o; }
    friend RF operator*(RF a, const K& c) {
        a.num_ *= c;
        if (a.num_.is_zero()) a.den_.clear();
        return a;
    }
    friend RF operator*(const K& c, RF a) { return a * c; }

    RF inv() const {
        if (is_zero()) fail("DivisionByZero", "inverse of zero rational function");
        RF r(den_poly());
        r.divide_by_poly(num_);
        r.cancel();
        return r;
    }
    friend RF operator/(const RF& a, const RF& b) { return a * b.inv(); }

    RF permuted(const Perm& w) const {
        if (w.is_identity()) return *this;
        RF r(num_.permuted(w));
        for (const auto& [f, m] : den_) {
            for (int k = 0; k < m; ++k) r.divide_by_poly(f.permuted(w));
        }
        return r;
    }

    // Substitute x_k -> images[k] (rational functions in the same ring).
    RF substitute(const std::vector<RF>& images) const {
        const int n = nvars();
        auto eval_poly = [&](const Poly<K>& p) {
            RF acc(n);
            for (const auto& [m, c] : p.terms()) {
                RF t = constant(n, c);
                for (int k = 0; k < n; ++k) {
                    int e = m.e[k];
                    if (e > 0)
                        for (int j = 0; j < e; ++j) t *= images[k];
                    else if (e < 0) {
                        RF iv = images[k].inv();
                        for (int j = 0; j < -e; ++j) t *= iv;
                    }
                }
                acc += t;
            }
            return acc;
        };
        RF r = eval_poly(num_);
        for (const auto& [f, m] : den_) {
            RF fi = eval_poly(f).inv();
            for (int j = 0; j < m; ++j) r *= fi;
        }
        return r;
    }

    K eval(const std::vector<K>& pt) const {
        K d(1);
        for (const auto& [f, m] : den_) {
            K v = f.eval(pt);
            if (v.is_zero()) fail("PoleAtPoint", "denominator vanishes");
            d *= power(v, m);
        }
        return num_.eval(pt) / d;
    }

    friend bool operator==(const RF& a, const RF& b) { return (a - b).is_zero(); }
    friend bool operator!=(const RF& a, const RF& b) { return !(a == b); }

    std::string str(char var = 'x') const {
        if (den_.empty()) return num_.str(var);
        std::string d;
        for (const auto& [f, m] : den_) {
            if (!d.empty()) d += "*";
            d += "(" + f.str(var) + ")";
            if (m != 1) d += "^" + std::to_string(m);
        }
        return "(" + num_.str(var) + ")/(" + d + ")";
    }

private:
    // Multiply the denominator by p (nonzero); normalizes p first.
    void divide_by_poly(const Poly<K>& p) {
        if (p.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
        Mono mc = p.min_exponents();
        Poly<K> g = p.shift(Mono{} - mc);
        K lc = g.leading().second;
        num_ = num_.shift(Mono{} - mc) * lc.inv();
        if (g.is_monomial()) return; // g == lc after removing content
        g *= lc.inv();
        den_ = merge_factors(den_, std::vector<Factor>{{g, 1}});
    }

    static std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
        std::vector<Factor> out;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                out.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                out.push_back(b[j++]);
            else {
                out.push_back({a[i].first, a[i].second + b[j].second});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void cancel() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::vector<Factor> kept;
        for (auto& [f, m] : den_) {
            int left = m;
            while (left > 0) {
                auto q = divide_exact(num_, f);
                if (!q) break;
                num_ = std::move(*q);
                --left;
            }
            if (left > 0) kept.push_back({f, left});
        }
        den_ = std::move(kept);
    }

    static RF add(const RF& a, const RF& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        if (a.den_.empty() && b.den_.empty()) return RF(subtract ? a.num_ - b.num_ : a.num_ + b.num_);
        // lcm of the factor lists
        std::vector<Factor> l;
        std::size_t i = 0, j = 0;
        Poly<K> fa = Poly<K>::constant(a.nvars(), K(1)), fb = fa;
        while (i < a.den_.size() || j < b.den_.size()) {
            if (j == b.den_.size() || (i < a.den_.size() && a.den_[i].first < b.den_[j].first)) {
                fb *= a.den_[i].first.pow(a.den_[i].second);
                l.push_back(a.den_[i++]);
            } else if (i == a.den_.size() || b.den_[j].first < a.den_[i].first) {
                fa *= b.den_[j].first.pow(b.den_[j].second);
                l.push_back(b.den_[j++]);
            } else {
                int ma = a.den_[i].second, mb = b.den_[j].second;
                if (ma < mb) fa *= a.den_[i].first.pow(mb - ma);
                if (mb < ma) fb *= a.den_[i].first.pow(ma - mb);
                l.push_back({a.den_[i].first, std::max(ma, mb)});
                ++i;
                ++j;
            }
        }
        RF r(subtract ? a.num_ * fa - b.num_ * fb : a.num_ * fa + b.num_ * fb);
        r.den_ = std::move(l);
        r.cancel();
        return r;
    }

    Poly<K> num_;
    std::vector<Factor> den_;
};

} // namespace hw
