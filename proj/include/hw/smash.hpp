#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hw/ratfun.hpp"

namespace hw {

// sum_w C_w * w acting on rational functions in n variables.
template <class K>
class PermSum {
public:
    explicit PermSum(int n = 0) : n_(n) {}
    static PermSum identity(int n) { return single(Perm(n), RF<K>::constant(n, K(1))); }
    static PermSum single(const Perm& w, const RF<K>& c) {
        PermSum s(w.size());
        if (!c.is_zero()) s.t_.emplace(w, c);
        return s;
    }
    static PermSum mult(const RF<K>& c) { return single(Perm(c.nvars()), c); }

    int nvars() const { return n_; }
    const std::map<Perm, RF<K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    RF<K> coeff(const Perm& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? RF<K>(n_) : it->second;
    }

    void add_term(const Perm& w, const RF<K>& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    PermSum& operator+=(const PermSum& o) {
        for (const auto& [w, c] : o.t_) add_term(w, c);
        return *this;
    }
    PermSum& operator-=(const PermSum& o) {
        for (const auto& [w, c] : o.t_) add_term(w, -c);
        return *this;
    }
    friend PermSum operator+(PermSum a, const PermSum& b) { return a += b; }
    friend PermSum operator-(PermSum a, const PermSum& b) { return a -= b; }
    PermSum operator-() const {
        PermSum r(n_);
        for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
        return r;
    }
    friend PermSum operator*(const K& k, const PermSum& a) {
        PermSum r(a.n_);
        if (k.is_zero()) return r;
        for (const auto& [w, c] : a.t_) r.t_.emplace(w, c * k);
        return r;
    }

    // (C w)(D v) = C w(D) (wv)
    friend PermSum operator*(const PermSum& a, const PermSum& b) {
        PermSum r(std::max(a.n_, b.n_));
        for (const auto& [w, c] : a.t_)
            for (const auto& [v, d] : b.t_) r.add_term(w * v, c * d.permuted(w));
        return r;
    }
    // c * this
    PermSum left_mul(const RF<K>& c) const {
        PermSum r(n_);
        for (const auto& [w, d] : t_) r.add_term(w, c * d);
        return r;
    }

    RF<K> apply(const RF<K>& f) const {
        RF<K> acc(n_);
        for (const auto& [w, c] : t_) acc += c * f.permuted(w);
        return acc;
    }

    // Maps every coefficient; permutations kept.
    PermSum map_coeffs(const std::function<RF<K>(const Perm&, const RF<K>&)>& fn) const {
        PermSum r(n_);
        for (const auto& [w, c] : t_) r.add_term(w, fn(w, c));
        return r;
    }

    friend bool operator==(const PermSum& a, const PermSum& b) { return (a - b).is_zero(); }

    std::string str(char var = 'x') const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str(var) + ")*" + w.str();
        }
        return s;
    }

private:
    int n_;
    std::map<Perm, RF<K>> t_;
};

// Block-indexed operator: component (target, source) is a PermSum mapping
// functions on the source block to the target block.
template <class K, class B>
class SmashOp {
public:
    using Key = std::pair<B, B>; // (target, source)

    explicit SmashOp(int n = 0) : n_(n) {}
    static SmashOp block(const B& target, const B& source, const PermSum<K>& s) {
        SmashOp op(s.nvars());
        if (!s.is_zero()) op.m_.emplace(Key{target, source}, s);
        return op;
    }
    static SmashOp diag(int n, const std::vector<B>& blocks, const std::function<RF<K>(const B&)>& coeff) {
        SmashOp op(n);
        for (const auto& b : blocks) {
            RF<K> c = coeff(b);
            if (!c.is_zero()) op.m_.emplace(Key{b, b}, PermSum<K>::mult(c));
        }
        return op;
    }
    static SmashOp identity(int n, const std::vector<B>& blocks) {
        return diag(n, blocks, [n](const B&) { return RF<K>::constant(n, K(1)); });
    }

    int nvars() const { return n_; }
    const std::map<Key, PermSum<K>>& blocks() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    const PermSum<K>* find(const B& target, const B& source) const {
        auto it = m_.find(Key{target, source});
        return it == m_.end() ? nullptr : &it->second;
    }

    void add_block(const B& target, const B& source, const PermSum<K>& s) {
        if (s.is_zero()) return;
        auto it = m_.find(Key{target, source});
        if (it == m_.end()) {
            m_.emplace(Key{target, source}, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) m_.erase(it);
        }
    }
    SmashOp& operator+=(const SmashOp& o) {
        for (const auto& [k, s] : o.m_) add_block(k.first, k.second, s);
        return *this;
    }
    SmashOp& operator-=(const SmashOp& o) {
        for (const auto& [k, s] : o.m_) add_block(k.first, k.second, -s);
        return *this;
    }
    friend SmashOp operator+(SmashOp a, const SmashOp& b) { return a += b; }
    friend SmashOp operator-(SmashOp a, const SmashOp& b) { return a -= b; }
    SmashOp operator-() const {
        SmashOp r(n_);
        for (const auto& [k, s] : m_) r.m_.emplace(k, -s);
        return r;
    }
    friend SmashOp operator*(const K& c, const SmashOp& a) {
        SmashOp r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [k, s] : a.m_) r.m_.emplace(k, c * s);
        return r;
    }

    // composition a o b
    friend SmashOp operator*(const SmashOp& a, const SmashOp& b) {
        SmashOp r(std::max(a.n_, b.n_));
        std::map<B, std::vector<const std::pair<const Key, PermSum<K>>*>> by_target;
        for (const auto& kv : b.m_) by_target[kv.first.first].push_back(&kv);
        for (const auto& [ka, sa] : a.m_) {
            auto it = by_target.find(ka.second);
            if (it == by_target.end()) continue;
            for (const auto* kb : it->second) r.add_block(ka.first, kb->first.second, sa * kb->second);
        }
        return r;
    }

    // Result per target block of applying to f placed in block `source`.
    std::map<B, RF<K>> apply(const B& source, const RF<K>& f) const {
        std::map<B, RF<K>> out;
        for (const auto& [k, s] : m_) {
            if (!(k.second == source)) continue;
            RF<K> v = s.apply(f);
            if (v.is_zero()) continue;
            auto it = out.find(k.first);
            if (it == out.end())
                out.emplace(k.first, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }

    template <class Fn>
    SmashOp map_blocks(Fn fn) const {
        SmashOp r(n_);
        for (const auto& [k, s] : m_) {
            PermSum<K> t = fn(k.first, k.second, s);
            r.add_block(k.first, k.second, t);
        }
        return r;
    }

    friend bool operator==(const SmashOp& a, const SmashOp& b) { return (a - b).is_zero(); }
    friend bool operator!=(const SmashOp& a, const SmashOp& b) { return !(a == b); }

private:
    int n_;
    std::map<Key, PermSum<K>> m_;
};

} // namespace hw
