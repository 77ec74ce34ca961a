#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hw/error.hpp"
#include "hw/perm.hpp"
#include "hw/scalars.hpp"

namespace hw {

constexpr int kMaxVars = 8;

struct Mono {
    std::array<int16_t, kMaxVars> e{};

    int deg() const {
        int s = 0;
        for (auto v : e) s += v;
        return s;
    }
    bool nonneg() const {
        for (auto v : e)
            if (v < 0) return false;
        return true;
    }
    Mono operator+(const Mono& o) const {
        Mono r;
        for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<int16_t>(e[k] + o.e[k]);
        return r;
    }
    Mono operator-(const Mono& o) const {
        Mono r;
        for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<int16_t>(e[k] - o.e[k]);
        return r;
    }
    bool divides(const Mono& o) const {
        for (int k = 0; k < kMaxVars; ++k)
            if (e[k] > o.e[k]) return false;
        return true;
    }
    static Mono unit(int var, int power = 1) {
        Mono m;
        m.e[var] = static_cast<int16_t>(power);
        return m;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
};

// Graded lexicographic order: a < b.
inline bool grlex_less(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    return a.e < b.e;
}
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_less(a, b); }
};

inline Mono mono_min(const Mono& a, const Mono& b) {
    Mono r;
    for (int k = 0; k < kMaxVars; ++k) r.e[k] = std::min(a.e[k], b.e[k]);
    return r;
}

// w acts by x_k -> x_{w(k)}
inline Mono permute_mono(const Mono& m, const Perm& w) {
    Mono r;
    for (int k = 0; k < w.size(); ++k) r.e[w(k)] = m.e[k];
    for (int k = w.size(); k < kMaxVars; ++k) r.e[k] = m.e[k];
    return r;
}

// Sparse Laurent polynomial; terms sorted by decreasing grlex, no zero coefficients.
template <class K>
class Poly {
public:
    using Term = std::pair<Mono, K>;

    explicit Poly(int n = 0) : n_(n) {
        if (n < 0 || n > kMaxVars) fail("IndexOutOfRange", "too many variables");
    }
    static Poly constant(int n, const K& c) {
        Poly p(n);
        if (!c.is_zero()) p.t_.push_back({Mono{}, c});
        return p;
    }
    static Poly monomial(int n, const Mono& m, const K& c = K(1)) {
        Poly p(n);
        if (!c.is_zero()) p.t_.push_back({m, c});
        return p;
    }
    // x_{var+1}
    static Poly var(int n, int var) {
        if (var < 0 || var >= n) fail("IndexOutOfRange", "variable index");
        return monomial(n, Mono::unit(var));
    }

    int nvars() const { return n_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == Mono{}); }
    bool is_monomial() const { return t_.size() == 1; }
    K constant_term() const {
        for (const auto& [m, c] : t_)
            if (m == Mono{}) return c;
        return K(0);
    }
    K coeff(const Mono& m) const {
        for (const auto& [mm, c] : t_)
            if (mm == m) return c;
        return K(0);
    }
    const Term& leading() const { return t_.front(); }
    bool is_polynomial() const {
        for (const auto& [m, c] : t_)
            if (!m.nonneg()) return false;
        return true;
    }
    Mono min_exponents() const {
        if (t_.empty()) return Mono{};
        Mono r = t_.front().first;
        for (const auto& [m, c] : t_) r = mono_min(r, m);
        return r;
    }
    int max_degree() const {
        int d = -1000000;
        for (const auto& [m, c] : t_) d = std::max(d, m.deg());
        return d;
    }
    int min_degree() const {
        int d = 1000000;
        for (const auto& [m, c] : t_) d = std::min(d, m.deg());
        return d;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = combine(*this, o, false); }
    Poly& operator-=(const Poly& o) { return *this = combine(*this, o, true); }
    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }

    Poly& operator*=(const K& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, v] : t_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const K& c) { return a *= c; }
    friend Poly operator*(const K& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(std::max(a.n_, b.n_));
        if (a.is_zero() || b.is_zero()) return r;
        if (a.size() == 1 || b.size() == 1) {
            const Poly& s = a.size() == 1 ? a : b;
            const Poly& o = a.size() == 1 ? b : a;
            const auto& [sm, sc] = s.t_.front();
            r.t_.reserve(o.size());
            for (const auto& [m, c] : o.t_) r.t_.push_back({m + sm, c * sc});
            return r; // monomial shift preserves grlex order
        }
        std::vector<Term> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) acc.push_back({ma + mb, ca * cb});
        r.t_ = normalize(std::move(acc));
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(int e) const {
        if (e < 0) fail("BadExponent", "negative power of a polynomial");
        Poly acc = constant(n_, K(1)), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }
    Poly shift(const Mono& m) const {
        Poly r(*this);
        for (auto& [mm, c] : r.t_) mm = mm + m;
        return r;
    }
    // (w f)(x_1..x_n) = f(x_{w(1)}..x_{w(n)})
    Poly permuted(const Perm& w) const {
        if (w.is_identity()) return *this;
        std::vector<Term> acc;
        acc.reserve(t_.size());
        for (const auto& [m, c] : t_) acc.push_back({permute_mono(m, w), c});
        Poly r(n_);
        r.t_ = normalize(std::move(acc));
        return r;
    }
    // Reinterpret in a ring with a different number of variables; the
    // extra variables must not occur.
    Poly with_nvars(int n) const {
        Poly r(n);
        for (const auto& [m, c] : t_)
            for (int k = n; k < kMaxVars; ++k)
                if (m.e[k] != 0) fail("IndexOutOfRange", "variable does not exist in target ring");
        r.t_ = t_;
        return r;
    }

    K eval(const std::vector<K>& pt) const {
        K s(0);
        for (const auto& [m, c] : t_) {
            K v = c;
            for (int k = 0; k < n_; ++k)
                if (m.e[k]) v *= power(pt[k], m.e[k]);
            s += v;
        }
        return s;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t k = 0; k < a.t_.size(); ++k)
            if (a.t_[k].first != b.t_[k].first || a.t_[k].second != b.t_[k].second) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size();
        for (std::size_t k = 0; k < a.t_.size(); ++k) {
            if (a.t_[k].first != b.t_[k].first) return grlex_less(a.t_[k].first, b.t_[k].first);
            if (a.t_[k].second != b.t_[k].second) return a.t_[k].second < b.t_[k].second;
        }
        return false;
    }

    std::string str(char var = 'x') const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : t_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::string ms;
            for (int k = 0; k < n_; ++k) {
                if (!m.e[k]) continue;
                if (!ms.empty()) ms += '*';
                ms += var + std::to_string(k + 1);
                if (m.e[k] != 1) ms += '^' + std::to_string(m.e[k]);
            }
            if (ms.empty())
                out += cs;
            else if (cs == "1")
                out += ms;
            else
                out += cs + '*' + ms;
        }
        return out;
    }

    static Poly parse(const std::string& src, int n, char var = 'x');

private:
    static std::vector<Term> normalize(std::vector<Term> acc) {
        std::sort(acc.begin(), acc.end(), [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& t : acc) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else {
                if (!out.empty() && out.back().second.is_zero()) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        return out;
    }
    static Poly combine(const Poly& a, const Poly& b, bool subtract) {
        Poly r(std::max(a.n_, b.n_));
        r.t_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && grlex_less(b.t_[j].first, a.t_[i].first))) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || grlex_less(a.t_[i].first, b.t_[j].first)) {
                r.t_.push_back({b.t_[j].first, subtract ? -b.t_[j].second : b.t_[j].second});
                ++j;
            } else {
                K c = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!c.is_zero()) r.t_.push_back({a.t_[i].first, c});
                ++i;
                ++j;
            }
        }
        return r;
    }

    int n_;
    std::vector<Term> t_;
};

// Exact quotient a/f in the Laurent ring, or nullopt when f does not divide a.
template <class K>
std::optional<Poly<K>> divide_exact(const Poly<K>& a, const Poly<K>& f) {
    if (f.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    const int n = std::max(a.nvars(), f.nvars());
    if (a.is_zero()) return Poly<K>(n);
    if (f.is_monomial()) {
        const auto& [m, c] = f.leading();
        Mono neg;
        for (int k = 0; k < kMaxVars; ++k) neg.e[k] = static_cast<int16_t>(-m.e[k]);
        return a.shift(neg) * c.inv();
    }
    Mono ma = a.min_exponents(), mf = f.min_exponents();
    Poly<K> r = a.shift(Mono{} - ma), g = f.shift(Mono{} - mf);
    const auto [lm, lc] = g.leading();
    const K lci = lc.inv();
    std::vector<typename Poly<K>::Term> qt;
    while (!r.is_zero()) {
        const auto& [m, c] = r.leading();
        if (!lm.divides(m)) return std::nullopt;
        Mono tm = m - lm;
        K tc = c * lci;
        qt.push_back({tm, tc});
        r -= Poly<K>::monomial(n, tm, tc) * g;
    }
    Poly<K> q(n);
    for (auto& [m, c] : qt) q += Poly<K>::monomial(n, m, c);
    return q.shift(ma - mf);
}

// Divided difference (f - s_r f)/(x_r - x_{r+1}), r 0-based.
template <class K>
Poly<K> demazure(int r, const Poly<K>& f) {
    const int n = f.nvars();
    if (r < 0 || r + 1 >= n) fail("IndexOutOfRange", "demazure index " + std::to_string(r + 1));
    Poly<K> num = f - f.permuted(Perm::simple(n, r));
    Poly<K> den = Poly<K>::var(n, r) - Poly<K>::var(n, r + 1);
    auto q = divide_exact(num, den);
    if (!q) fail("InternalError", "divided difference not exact");
    return *q;
}

// Demazure operator along an arbitrary transposition (a b), a < b, used for
// vertex-wise Demazure products on non-adjacent variables.
template <class K>
Poly<K> demazure_pair(int a, int b, const Poly<K>& f) {
    const int n = f.nvars();
    Poly<K> num = f - f.permuted(Perm::transposition(n, a, b));
    Poly<K> den = Poly<K>::var(n, a) - Poly<K>::var(n, b);
    auto q = divide_exact(num, den);
    if (!q) fail("InternalError", "divided difference not exact");
    return *q;
}

// partial_w along the plan's word: partial_{k1} o ... o partial_{kr}
template <class K>
Poly<K> demazure_composite(const DemazurePlan& plan, const Poly<K>& f) {
    if (!is_reduced_word(plan.w.size(), plan.word)) fail("NonReducedWord", "word is not reduced");
    Poly<K> g = f;
    for (auto it = plan.word.rbegin(); it != plan.word.rend(); ++it) g = demazure(*it, g);
    return g;
}

// Sum over an S_n-orbit of a monomial (used for spanning sets of invariants).
template <class K>
Poly<K> symmetrize_over(const std::vector<Perm>& group, const Poly<K>& f) {
    Poly<K> s(f.nvars());
    for (const auto& w : group) s += f.permuted(w);
    return s;
}

namespace detail {

// Small recursive-descent reader for polynomial text.
template <class K>
class PolyReader {
public:
    PolyReader(const std::string& s, int n, char var) : s_(s), n_(n), var_(var) {}

    Poly<K> run() {
        Poly<K> p = sum();
        skip();
        if (pos_ != s_.size()) error("unexpected character");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& msg) {
        fail("SyntaxError", msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly<K> sum() {
        skip();
        Poly<K> acc(n_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly<K> t = product();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+'))
                acc += product();
            else if (eat('-'))
                acc -= product();
            else
                break;
        }
        return acc;
    }
    Poly<K> product() {
        Poly<K> acc = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                acc *= factor();
            } else if (pos_ < s_.size() && (s_[pos_] == var_ || s_[pos_] == '(')) {
                acc *= factor(); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }
    long integer() {
        skip();
        std::size_t st = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_ || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) error("expected integer");
        return std::stol(s_.substr(st, pos_ - st));
    }
    Poly<K> factor() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        Poly<K> base(n_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            base = sum();
            if (!eat(')')) error("expected ')'");
        } else if (c == var_) {
            ++pos_;
            long idx = integer();
            if (idx < 1 || idx > n_) error("variable index out of range");
            base = Poly<K>::var(n_, static_cast<int>(idx - 1));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(st, pos_ - st);
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::size_t st2 = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (st2 == pos_) error("expected denominator");
                num += "/" + s_.substr(st2, pos_ - st2);
            }
            base = Poly<K>::constant(n_, K::parse(num));
        } else if (c == '-') {
            ++pos_;
            return -factor();
        } else {
            error("unexpected character");
        }
        if (eat('^')) {
            long e = integer();
            if (e >= 0) return base.pow(static_cast<int>(e));
            if (!base.is_monomial()) error("negative power of a non-monomial");
            const auto& [m, cc] = base.leading();
            Mono neg;
            for (int k = 0; k < kMaxVars; ++k) neg.e[k] = static_cast<int16_t>(-m.e[k] * (-e));
            return Poly<K>::monomial(n_, neg, power(cc, e));
        }
        return base;
    }

    std::string s_;
    std::size_t pos_ = 0;
    int n_;
    char var_;
};

} // namespace detail

template <class K>
Poly<K> Poly<K>::parse(const std::string& src, int n, char var) {
    return detail::PolyReader<K>(src, n, var).run();
}

} // namespace hw
