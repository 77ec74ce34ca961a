#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "hw/hecke.hpp"
#include "hw/klr.hpp"
#include "hw/schur.hpp"

namespace hw {

// Element expressions:
//   expr := term { ('+' | '-') term }
//   term := factor { '*' factor }
//   factor := '-' factor | atom
//   atom := scalar | 'e(' colors ')' | 'T' int | 'X' int | 'Xi' int | 'x' int
//         | 'psi' int | 'y' int | 'm(' mcomp ')' | 'n(' mcomp ')'
//         | ('split' | 'merge' | 'lcross' | 'rcross') '(' mcomp '->' mcomp ')'
//         | '(' expr ')'
struct Span {
    std::size_t begin = 0, end = 0;
};

struct Expr {
    enum Kind { Sum, Prod, Neg, Scalar, E, T, X, Xi, x, Psi, Y, M, N, Split, Merge, LCross, RCross };
    Kind kind = Scalar;
    std::string text, text2; // scalar literal, colors or compositions
    int idx = 0;
    std::vector<Expr> kids;
    Span span;

    friend bool operator==(const Expr& a, const Expr& b) {
        return a.kind == b.kind && a.text == b.text && a.text2 == b.text2 && a.idx == b.idx && a.kids == b.kids;
    }
};

inline const char* expr_name(Expr::Kind k) {
    switch (k) {
    case Expr::T: return "T";
    case Expr::X: return "X";
    case Expr::Xi: return "Xi";
    case Expr::x: return "x";
    case Expr::Psi: return "psi";
    case Expr::Y: return "y";
    case Expr::M: return "m";
    case Expr::N: return "n";
    case Expr::Split: return "split";
    case Expr::Merge: return "merge";
    case Expr::LCross: return "lcross";
    case Expr::RCross: return "rcross";
    default: return "";
    }
}

// Canonical printing: sums and products are flattened, negation binds tightest.
inline std::string print(const Expr& e) {
    switch (e.kind) {
    case Expr::Sum: {
        std::string s;
        for (std::size_t k = 0; k < e.kids.size(); ++k) {
            const auto& c = e.kids[k];
            if (k && c.kind == Expr::Neg) {
                const auto& t = c.kids[0];
                s += " - " + (t.kind == Expr::Sum ? "(" + print(t) + ")" : print(t));
                continue;
            }
            if (k) s += " + ";
            s += print(c);
        }
        return s;
    }
    case Expr::Prod: {
        std::string s;
        for (std::size_t k = 0; k < e.kids.size(); ++k) {
            if (k) s += "*";
            const auto& c = e.kids[k];
            s += c.kind == Expr::Sum ? "(" + print(c) + ")" : print(c);
        }
        return s;
    }
    case Expr::Neg: {
        const auto& c = e.kids[0];
        return "-" + (c.kind == Expr::Sum || c.kind == Expr::Prod ? "(" + print(c) + ")" : print(c));
    }
    case Expr::Scalar: return e.text;
    case Expr::E: return "e(" + e.text + ")";
    case Expr::M:
    case Expr::N: return std::string(expr_name(e.kind)) + "(" + e.text + ")";
    case Expr::Split:
    case Expr::Merge:
    case Expr::LCross:
    case Expr::RCross: return std::string(expr_name(e.kind)) + "(" + e.text + "->" + e.text2 + ")";
    default: return expr_name(e.kind) + std::to_string(e.idx);
    }
}

class ExprParser {
public:
    explicit ExprParser(std::string src) : s_(std::move(src)) {}

    Expr run() {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
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
    bool eat_word(const std::string& w) {
        skip();
        if (s_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Expr expr() {
        const std::size_t start = (skip(), pos_);
        Expr sum;
        sum.kind = Expr::Sum;
        auto push = [&](Expr t) {
            if (t.kind == Expr::Sum)
                for (auto& k : t.kids) sum.kids.push_back(std::move(k));
            else
                sum.kids.push_back(std::move(t));
        };
        push(term());
        while (true) {
            if (eat('+')) {
                push(term());
            } else if (eat('-')) {
                const std::size_t b = pos_;
                Expr n;
                n.kind = Expr::Neg;
                n.kids.push_back(term());
                n.span = {b, pos_};
                sum.kids.push_back(std::move(n));
            } else {
                break;
            }
        }
        if (sum.kids.size() == 1) return std::move(sum.kids[0]);
        sum.span = {start, pos_};
        return sum;
    }
    Expr term() {
        const std::size_t start = (skip(), pos_);
        Expr prod;
        prod.kind = Expr::Prod;
        auto push = [&](Expr f) {
            if (f.kind == Expr::Prod)
                for (auto& k : f.kids) prod.kids.push_back(std::move(k));
            else
                prod.kids.push_back(std::move(f));
        };
        push(factor());
        while (eat('*')) push(factor());
        if (prod.kids.size() == 1) return std::move(prod.kids[0]);
        prod.span = {start, pos_};
        return prod;
    }
    Expr factor() {
        const std::size_t start = (skip(), pos_);
        if (eat('-')) {
            Expr n;
            n.kind = Expr::Neg;
            n.kids.push_back(factor());
            n.span = {start, pos_};
            return n;
        }
        return atom();
    }
    int integer() {
        skip();
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) error("expected an integer");
        if (pos_ - b > 6) error("index too large");
        return std::stoi(s_.substr(b, pos_ - b));
    }
    // raw text up to the matching ')'
    std::string balanced() {
        int depth = 1;
        const std::size_t b = pos_;
        while (pos_ < s_.size()) {
            if (s_[pos_] == '(') ++depth;
            if (s_[pos_] == ')' && --depth == 0) return s_.substr(b, pos_++ - b);
            ++pos_;
        }
        error("unbalanced parenthesis");
    }
    static std::string trim(const std::string& t) {
        std::size_t b = t.find_first_not_of(" \t"), e = t.find_last_not_of(" \t");
        return b == std::string::npos ? "" : t.substr(b, e - b + 1);
    }

    Expr atom() {
        skip();
        const std::size_t start = pos_;
        if (pos_ >= s_.size()) error("unexpected end of input");
        Expr a;
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            a.kind = Expr::Scalar;
            a.text = s_.substr(start, pos_ - start);
            if (a.text.back() == '/' || a.text.find('/') != a.text.rfind('/')) error("malformed scalar");
        } else if (eat('(')) {
            a = expr();
            if (!eat(')')) error("expected ')'");
            return a;
        } else {
            static const std::vector<std::pair<std::string, Expr::Kind>> arrows = {
                {"split(", Expr::Split}, {"merge(", Expr::Merge}, {"lcross(", Expr::LCross}, {"rcross(", Expr::RCross}};
            static const std::vector<std::pair<std::string, Expr::Kind>> indexed = {
                {"psi", Expr::Psi}, {"Xi", Expr::Xi}, {"T", Expr::T}, {"X", Expr::X}, {"x", Expr::x}, {"y", Expr::Y}};
            bool done = false;
            for (const auto& [w, k] : arrows) {
                if (!eat_word(w)) continue;
                std::string body = balanced();
                auto arrow = body.find("->");
                if (arrow == std::string::npos) error("expected '->'");
                a.kind = k;
                a.text = trim(body.substr(0, arrow));
                a.text2 = trim(body.substr(arrow + 2));
                done = true;
                break;
            }
            if (!done && (eat_word("m(") || eat_word("n("))) {
                a.kind = s_[pos_ - 2] == 'm' ? Expr::M : Expr::N;
                a.text = trim(balanced());
                done = true;
            }
            if (!done && eat_word("e(")) {
                a.kind = Expr::E;
                a.text = trim(balanced());
                done = true;
            }
            if (!done)
                for (const auto& [w, k] : indexed) {
                    if (!eat_word(w)) continue;
                    a.kind = k;
                    a.idx = integer();
                    done = true;
                    break;
                }
            if (!done) error("unknown symbol");
        }
        a.span = {start, pos_};
        return a;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

inline Expr parse_expr(const std::string& src) { return ExprParser(src).run(); }

inline bool contains(const Expr& e, std::initializer_list<Expr::Kind> kinds) {
    for (auto k : kinds)
        if (e.kind == k) return true;
    for (const auto& c : e.kids)
        if (contains(c, kinds)) return true;
    return false;
}

enum class ExprAlgebra { Hecke, KLR, Schur, Scalar };

inline std::string str(ExprAlgebra a) {
    switch (a) {
    case ExprAlgebra::Hecke: return "hecke";
    case ExprAlgebra::KLR: return "klr";
    case ExprAlgebra::Schur: return "schur";
    default: return "scalar";
    }
}

// Which algebra the atoms belong to; e(...) is shared by the Hecke and KLR sides.
inline ExprAlgebra classify(const Expr& e) {
    std::optional<ExprAlgebra> found;
    auto join = [&](ExprAlgebra a) {
        if (found && *found != a) fail("SyntaxError", "expression mixes " + str(*found) + " and " + str(a) + " generators");
        found = a;
    };
    auto walk = [&](auto&& self, const Expr& n) -> void {
        switch (n.kind) {
        case Expr::T:
        case Expr::X:
        case Expr::Xi:
        case Expr::x:
        case Expr::M:
        case Expr::N: join(ExprAlgebra::Hecke); break;
        case Expr::Psi:
        case Expr::Y: join(ExprAlgebra::KLR); break;
        case Expr::Split:
        case Expr::Merge:
        case Expr::LCross:
        case Expr::RCross: join(ExprAlgebra::Schur); break;
        default: break;
        }
        for (const auto& k : n.kids) self(self, k);
    };
    walk(walk, e);
    if (found) return *found;
    auto has_e = [&](auto&& self, const Expr& n) -> bool {
        if (n.kind == Expr::E) return true;
        for (const auto& k : n.kids)
            if (self(self, k)) return true;
        return false;
    };
    return has_e(has_e, e) ? ExprAlgebra::Hecke : ExprAlgebra::Scalar;
}

// Checks every index and literal against (d, l).
inline void bind(const Expr& e, int d, int ell) {
    auto where = [&](const Expr& n) { return " (position " + std::to_string(n.span.begin) + ")"; };
    auto range = [&](const Expr& n, int hi) {
        if (n.idx < 1 || n.idx > hi)
            fail("IndexError", print(n) + ": index must lie in 1.." + std::to_string(hi) + where(n));
    };
    switch (e.kind) {
    case Expr::T:
    case Expr::Psi: range(e, ell + d - 1); break;
    case Expr::X:
    case Expr::Xi: range(e, ell + d); break;
    case Expr::x:
    case Expr::Y: range(e, d); break;
    case Expr::E: {
        ColorSeq c = ColorSeq::parse(e.text);
        if (c.reds() != ell || c.blacks() != d) fail("IndexError", "e(" + e.text + ") needs " + std::to_string(ell) + " red and " + std::to_string(d) + " black strands" + where(e));
        break;
    }
    case Expr::M:
    case Expr::N:
    case Expr::Split:
    case Expr::Merge:
    case Expr::LCross:
    case Expr::RCross:
        for (const auto& t : {e.text, e.text2}) {
            if (t.empty()) continue;
            auto m = MultiComposition::parse(t);
            if (m.ell() != ell || m.d() != d) fail("IndexError", t + " is not an " + std::to_string(ell) + "-multicomposition of " + std::to_string(d) + where(e));
        }
        break;
    default: break;
    }
    for (const auto& k : e.kids) bind(k, d, ell);
}

template <class K>
typename Hecke<K>::Op eval_hecke(const Expr& e, const Hecke<K>& H, const Schur<K>* S = nullptr) {
    using Op = typename Hecke<K>::Op;
    switch (e.kind) {
    case Expr::Sum: {
        Op acc = H.zero();
        for (const auto& k : e.kids) acc += eval_hecke(k, H, S);
        return acc;
    }
    case Expr::Prod: {
        Op acc = eval_hecke(e.kids[0], H, S);
        for (std::size_t k = 1; k < e.kids.size(); ++k) acc = acc * eval_hecke(e.kids[k], H, S);
        return acc;
    }
    case Expr::Neg: return K(-1) * eval_hecke(e.kids[0], H, S);
    case Expr::Scalar: return K::parse(e.text) * H.one();
    case Expr::E: return H.e(ColorSeq::parse(e.text));
    case Expr::T: return H.T(e.idx);
    case Expr::X: return H.X(e.idx);
    case Expr::Xi: return H.Xinv(e.idx);
    case Expr::x: return H.x(e.idx);
    case Expr::M:
    case Expr::N: {
        if (!S) fail("BadParameter", "m/n need a Schur engine");
        return S->m_element(MultiComposition::parse(e.text), e.kind == Expr::M ? Schur<K>::M : Schur<K>::N);
    }
    default: fail("SyntaxError", print(e) + " is not a Hecke element");
    }
}

template <class K>
typename KLR<K>::Op eval_klr(const Expr& e, const KLR<K>& R) {
    using Op = typename KLR<K>::Op;
    switch (e.kind) {
    case Expr::Sum: {
        Op acc = R.zero();
        for (const auto& k : e.kids) acc += eval_klr(k, R);
        return acc;
    }
    case Expr::Prod: {
        Op acc = eval_klr(e.kids[0], R);
        for (std::size_t k = 1; k < e.kids.size(); ++k) acc = acc * eval_klr(e.kids[k], R);
        return acc;
    }
    case Expr::Neg: return K(-1) * eval_klr(e.kids[0], R);
    case Expr::Scalar: return K::parse(e.text) * R.one();
    case Expr::E: {
        // all labellings of the colour sequence
        ColorSeq c = ColorSeq::parse(e.text);
        Op acc = R.zero();
        for (const auto& b : R.blocks())
            if (b.c == c) acc += R.e(b);
        return acc;
    }
    case Expr::Psi: return R.psi(e.idx);
    case Expr::Y: return R.y(e.idx);
    default: fail("SyntaxError", print(e) + " is not a KLR element");
    }
}

// Schur expressions: products of generators, with scalars as coefficients.
template <class K>
std::vector<std::pair<K, SchurOp<K>>> eval_schur_terms(const Expr& e, const Schur<K>& S, SchurRep rep) {
    using Terms = std::vector<std::pair<K, SchurOp<K>>>;
    using GS = SchurGenSpec<K>;
    auto mc = [](const std::string& t) { return MultiComposition::parse(t); };
    switch (e.kind) {
    case Expr::Sum: {
        Terms out;
        for (const auto& k : e.kids)
            for (auto& t : eval_schur_terms(k, S, rep)) out.push_back(std::move(t));
        return out;
    }
    case Expr::Neg: {
        Terms out = eval_schur_terms(e.kids[0], S, rep);
        for (auto& t : out) t.first = -t.first;
        return out;
    }
    case Expr::Prod: {
        // scalars commute out; operators compose right to left
        K c(1);
        std::optional<SchurOp<K>> op;
        std::vector<const Expr*> ops;
        for (const auto& k : e.kids) {
            if (k.kind == Expr::Scalar)
                c *= K::parse(k.text);
            else
                ops.push_back(&k);
        }
        Terms acc;
        if (ops.empty()) fail("SyntaxError", "a Schur expression needs at least one generator");
        acc = eval_schur_terms(*ops.back(), S, rep);
        for (auto it = ops.rbegin() + 1; it != ops.rend(); ++it) {
            Terms left = eval_schur_terms(**it, S, rep), next;
            for (const auto& [a, x] : left)
                for (const auto& [b, y] : acc) next.push_back({a * b, x * y});
            acc = std::move(next);
        }
        for (auto& t : acc) t.first *= c;
        return acc;
    }
    case Expr::Split: return {{K(1), S.generator(GS::split(mc(e.text), mc(e.text2)), rep)}};
    case Expr::Merge: return {{K(1), S.generator(GS::merge(mc(e.text), mc(e.text2)), rep)}};
    case Expr::LCross: return {{K(1), S.generator(GS::lcross(mc(e.text), mc(e.text2)), rep)}};
    case Expr::RCross: return {{K(1), S.generator(GS::rcross(mc(e.text), mc(e.text2)), rep)}};
    case Expr::Scalar: fail("SyntaxError", "a bare scalar has no Schur block; multiply it by a generator");
    default: fail("SyntaxError", print(e) + " is not a Schur generator");
    }
}

template <class K>
SchurOp<K> eval_schur(const Expr& e, const Schur<K>& S, SchurRep rep) {
    auto terms = eval_schur_terms(e, S, rep);
    std::optional<SchurOp<K>> acc;
    for (const auto& [c, op] : terms) {
        SchurOp<K> scaled = c * op;
        acc = acc ? *acc + scaled : scaled;
    }
    return *acc;
}

} // namespace hw
