#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hw {

// scalar * g_1 g_2 ... g_k (g_1 leftmost); the empty word is the unit.
template <class Gen, class K>
struct Monomial {
    K coeff;
    std::vector<Gen> gens;
};

template <class Gen, class K>
struct LinComb {
    std::vector<Monomial<Gen, K>> terms;

    LinComb() = default;
    LinComb(K c, std::vector<Gen> g) { terms.push_back({std::move(c), std::move(g)}); }
    static LinComb unit(K one) { return LinComb(std::move(one), {}); }
    static LinComb word(std::vector<Gen> g) { return LinComb(K(1), std::move(g)); }

    LinComb& operator+=(const LinComb& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) {
        for (auto t : b.terms) {
            t.coeff = -t.coeff;
            a.terms.push_back(std::move(t));
        }
        return a;
    }
    friend LinComb operator*(const K& c, LinComb a) {
        for (auto& t : a.terms) t.coeff = c * t.coeff;
        return a;
    }
    friend LinComb operator*(const LinComb& a, const LinComb& b) {
        LinComb r;
        for (const auto& s : a.terms)
            for (const auto& t : b.terms) {
                auto g = s.gens;
                g.insert(g.end(), t.gens.begin(), t.gens.end());
                r.terms.push_back({s.coeff * t.coeff, std::move(g)});
            }
        return r;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& t : terms) {
            if (!s.empty()) s += " + ";
            s += t.coeff.str();
            for (const auto& g : t.gens) s += "*" + g.str();
        }
        return s;
    }
};

template <class Gen, class K>
struct Relation {
    std::string id;
    LinComb<Gen, K> lhs, rhs;
};

// Evaluates a linear combination of words with gen -> image(gen). Products are
// folded from the right since relation words usually end in an idempotent.
template <class Op, class Gen, class K, class Image>
Op evaluate(const LinComb<Gen, K>& e, Image&& image, const Op& one) {
    Op acc = K(0) * one;
    for (const auto& t : e.terms) {
        if (t.coeff.is_zero()) continue;
        if (t.gens.empty()) {
            acc = acc + t.coeff * one;
            continue;
        }
        Op p = image(t.gens.back());
        for (auto it = t.gens.rbegin() + 1; it != t.gens.rend(); ++it) p = image(*it) * p;
        acc = acc + t.coeff * p;
    }
    return acc;
}

} // namespace hw
