#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hw/error.hpp"

namespace hw {

// A permutation of {0..n-1} stored in one-line notation; w(k) = img[k].
// Text form is 1-based: [2,1,3].
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {
        std::vector<int> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= size() || seen[v]++) fail("BadPermutation", "not a bijection");
        }
    }
    static Perm one_based(const std::vector<int>& img) {
        std::vector<int> z(img.size());
        for (std::size_t k = 0; k < img.size(); ++k) z[k] = img[k] - 1;
        return Perm(std::move(z));
    }
    // s_r swaps r and r+1 (0-based)
    static Perm simple(int n, int r) {
        Perm w(n);
        std::swap(w.img_[r], w.img_[r + 1]);
        return w;
    }
    static Perm transposition(int n, int a, int b) {
        Perm w(n);
        std::swap(w.img_[a], w.img_[b]);
        return w;
    }
    static Perm from_word(int n, const std::vector<int>& word) {
        Perm w(n);
        for (int k : word) w = w * simple(n, k);
        return w;
    }
    static std::vector<Perm> all(int n) {
        std::vector<Perm> out;
        Perm w(n);
        do {
            out.push_back(w);
        } while (std::next_permutation(w.img_.begin(), w.img_.end()));
        return out;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k]; }
    const std::vector<int>& images() const { return img_; }

    // (w*v)(k) = w(v(k))
    Perm operator*(const Perm& v) const {
        if (v.size() != size()) fail("BadPermutation", "size mismatch");
        Perm r(size());
        for (int k = 0; k < size(); ++k) r.img_[k] = img_[v.img_[k]];
        return r;
    }
    Perm inverse() const {
        Perm r(size());
        for (int k = 0; k < size(); ++k) r.img_[img_[k]] = k;
        return r;
    }
    bool is_identity() const {
        for (int k = 0; k < size(); ++k)
            if (img_[k] != k) return false;
        return true;
    }
    int length() const {
        int inv = 0;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                if (img_[a] > img_[b]) ++inv;
        return inv;
    }
    // s_r w < w
    bool left_descent(int r) const {
        Perm wi = inverse();
        return wi.img_[r] > wi.img_[r + 1];
    }
    bool right_descent(int r) const { return img_[r] > img_[r + 1]; }

    // Lexicographically smallest reduced word k1..kr with w = s_k1 ... s_kr.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Perm w = *this;
        while (!w.is_identity()) {
            for (int r = 0; r + 1 < size(); ++r) {
                if (w.left_descent(r)) {
                    word.push_back(r);
                    w = simple(size(), r) * w;
                    break;
                }
            }
        }
        return word;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (int k = 0; k < size(); ++k) os << (k ? "," : "") << img_[k] + 1;
        os << ']';
        return os.str();
    }
    static Perm parse(const std::string& s) {
        std::string t;
        for (char ch : s)
            if (ch != ' ') t += ch;
        if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail("ParseError", "permutation: " + s);
        std::vector<int> v;
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            v.push_back(std::stoi(item));
        }
        return one_based(v);
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

// Length-then-lexicographic order on one-line notation; used for peeling.
inline bool length_lex_less(const Perm& a, const Perm& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a < b;
}

inline bool is_reduced_word(int n, const std::vector<int>& word) {
    return Perm::from_word(n, word).length() == static_cast<int>(word.size());
}

// A permutation together with the word used to build composites along it.
struct DemazurePlan {
    Perm w;
    std::vector<int> word;

    static DemazurePlan canonical(const Perm& w) { return {w, w.reduced_word()}; }
    static DemazurePlan from_word(int n, std::vector<int> word) {
        for (int k : word)
            if (k < 0 || k + 1 >= n) fail("IndexOutOfRange", "simple reflection out of range");
        if (!is_reduced_word(n, word)) fail("NonReducedWord", "word is not reduced");
        return {Perm::from_word(n, word), std::move(word)};
    }
};

} // namespace hw
