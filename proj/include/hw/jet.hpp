#pragma once

#include <string>
#include <vector>

#include "hw/ratfun.hpp"

namespace hw {

// Truncated power series at a point: a polynomial in u_k = x_k - point_k of
// total degree < order.
template <class K>
class Jet {
public:
    Jet() = default;
    Jet(std::vector<K> point, int order, Poly<K> body) : pt_(std::move(point)), N_(order), p_(std::move(body)) {
        if (N_ < 1) fail("BadOrder", "jet order must be >= 1");
        truncate();
    }
    static Jet constant(std::vector<K> point, int order, const K& c) {
        int n = static_cast<int>(point.size());
        return Jet(std::move(point), order, Poly<K>::constant(n, c));
    }

    const std::vector<K>& point() const { return pt_; }
    int order() const { return N_; }
    const Poly<K>& body() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    friend Jet operator+(const Jet& a, const Jet& b) {
        check(a, b);
        return Jet(a.pt_, a.N_, a.p_ + b.p_);
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        check(a, b);
        return Jet(a.pt_, a.N_, a.p_ - b.p_);
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        check(a, b);
        return Jet(a.pt_, a.N_, mul_trunc(a.p_, b.p_, a.N_));
    }
    Jet inverse() const {
        K c0 = p_.constant_term();
        if (c0.is_zero()) fail("PoleAtPoint", "jet with zero constant term is not invertible");
        return Jet(pt_, N_, series_inverse(p_, N_));
    }
    Jet truncated(int order) const { return Jet(pt_, std::min(order, N_), p_); }

    friend bool operator==(const Jet& a, const Jet& b) { return a.N_ == b.N_ && a.pt_ == b.pt_ && a.p_ == b.p_; }

    std::string str() const { return p_.str('u'); }

    static Poly<K> mul_trunc(const Poly<K>& a, const Poly<K>& b, int N) {
        Poly<K> r(std::max(a.nvars(), b.nvars()));
        for (const auto& [ma, ca] : a.terms()) {
            if (ma.deg() >= N) continue;
            Poly<K> part(r.nvars());
            for (const auto& [mb, cb] : b.terms())
                if (ma.deg() + mb.deg() < N) part += Poly<K>::monomial(r.nvars(), ma + mb, ca * cb);
            r += part;
        }
        return r;
    }
    static Poly<K> trunc(const Poly<K>& a, int N) {
        Poly<K> r(a.nvars());
        for (const auto& [m, c] : a.terms())
            if (m.deg() < N) r += Poly<K>::monomial(a.nvars(), m, c);
        return r;
    }
    // 1/a mod degree N, a(0) != 0
    static Poly<K> series_inverse(const Poly<K>& a, int N) {
        const int n = a.nvars();
        K c0 = a.constant_term();
        if (c0.is_zero()) fail("PoleAtPoint", "series inverse of a non-unit");
        K ic = c0.inv();
        Poly<K> r = a * ic - Poly<K>::constant(n, K(1)); // a/c0 = 1 + r
        Poly<K> acc = Poly<K>::constant(n, K(1)), term = acc;
        for (int k = 1; k < N; ++k) {
            term = mul_trunc(term, -r, N);
            if (term.is_zero()) break;
            acc += term;
        }
        return trunc(acc, N) * ic;
    }

private:
    static void check(const Jet& a, const Jet& b) {
        if (a.N_ != b.N_ || a.pt_ != b.pt_) fail("BlockMismatch", "jets at different points or orders");
    }
    void truncate() { p_ = trunc(p_, N_); }

    std::vector<K> pt_;
    int N_ = 1;
    Poly<K> p_;
};

namespace detail {

// (point_k + u_k)^e truncated, e may be negative
template <class K>
Poly<K> shifted_power(int n, int k, const K& a, int e, int N) {
    Poly<K> lin = Poly<K>::constant(n, a) + Poly<K>::var(n, k);
    if (e >= 0) return Jet<K>::trunc(lin.pow(e), N);
    Poly<K> inv = Jet<K>::series_inverse(lin, N);
    Poly<K> acc = Poly<K>::constant(n, K(1));
    for (int j = 0; j < -e; ++j) acc = Jet<K>::mul_trunc(acc, inv, N);
    return acc;
}

// p(point + u) truncated at total degree N (p Laurent).
template <class K>
Poly<K> shift_to_point(const Poly<K>& p, const std::vector<K>& pt, int N) {
    const int n = static_cast<int>(pt.size());
    Poly<K> out(n);
    std::vector<std::map<int, Poly<K>>> cache(n);
    for (const auto& [m, c] : p.terms()) {
        Poly<K> t = Poly<K>::constant(n, c);
        for (int k = 0; k < n; ++k) {
            int e = m.e[k];
            if (!e) continue;
            if (pt[k].is_zero() && e < 0) fail("PoleAtPoint", "negative power of a variable at a zero coordinate");
            auto it = cache[k].find(e);
            if (it == cache[k].end()) it = cache[k].emplace(e, shifted_power<K>(n, k, pt[k], e, N)).first;
            t = Jet<K>::mul_trunc(t, it->second, N);
        }
        out += t;
    }
    return out;
}

} // namespace detail

template <class K>
Jet<K> expand_to_jet(const RF<K>& f, const std::vector<K>& pt, int N) {
    if (N < 1) fail("BadOrder", "jet order must be >= 1");
    const int n = static_cast<int>(pt.size());
    Poly<K> num = detail::shift_to_point(f.num().with_nvars(n), pt, N);
    for (const auto& [g, m] : f.den()) {
        Poly<K> gs = detail::shift_to_point(g.with_nvars(n), pt, N);
        if (gs.constant_term().is_zero())
            fail("PoleAtPoint", "denominator factor " + g.str() + " vanishes at the base point");
        Poly<K> gi = Jet<K>::series_inverse(gs, N);
        for (int j = 0; j < m; ++j) num = Jet<K>::mul_trunc(num, gi, N);
    }
    return Jet<K>(pt, N, num);
}

// The polynomial in x with the same value as the jet body (u_k -> x_k - point_k).
template <class K>
Poly<K> jet_to_x(const Jet<K>& j) {
    const int n = static_cast<int>(j.point().size());
    std::vector<RF<K>> img;
    for (int k = 0; k < n; ++k) img.push_back(RF<K>(Poly<K>::var(n, k) - Poly<K>::constant(n, j.point()[k])));
    return RF<K>(j.body().with_nvars(n)).substitute(img).poly();
}

} // namespace hw
