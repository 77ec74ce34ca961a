#pragma once

#include <map>
#include <string>
#include <vector>

#include "hw/hecke.hpp"
#include "hw/report.hpp"

namespace hw {

enum class CyclotomicKind { Classical, HigherLevel };

inline std::string str(CyclotomicKind k) { return k == CyclotomicKind::Classical ? "classical" : "higher-level"; }

// Dense linear algebra helpers over K.
template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
int matrix_rank(Matrix<K> a) {
    const int n = static_cast<int>(a.size());
    const int m = n ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int p = r;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) continue;
        std::swap(a[p], a[r]);
        K inv = a[r][c].inv();
        for (int i = r + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            K f = a[i][c] * inv;
            for (int j = c; j < m; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

template <class K>
Matrix<K> matrix_mul(const Matrix<K>& a, const Matrix<K>& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Matrix<K> c(n, std::vector<K>(m, K(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

// Solves a x = b column by column; a must be invertible.
template <class K>
Matrix<K> matrix_solve(Matrix<K> a, Matrix<K> b) {
    const int n = static_cast<int>(a.size());
    const int m = n ? static_cast<int>(b[0].size()) : 0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) fail("InternalError", "singular matrix in solve");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        K inv = a[c][c].inv();
        for (auto& v : a[c]) v *= inv;
        for (auto& v : b[c]) v *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            K f = a[i][c];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[c][j];
            for (int j = 0; j < m; ++j) b[i][j] -= f * b[c][j];
        }
    }
    return b;
}

// Quotient of a corner of the Hecke algebra by a two-sided ideal, computed on
// the span of basis elements T_w x^m with exponents in [-B, B]^d. The ideal is
// spanned by x^m J x^n for the generators J; products are generated with
// |m_i|, |n_i| <= G and intersected with the window.
template <class K>
class CyclotomicWindow {
public:
    using Op = typename Hecke<K>::Op;
    using Key = HeckeBasisKey<K>;
    // out-of-window columns sort first so that echelon rows with an in-window
    // leading column span the intersection with the window
    struct Col {
        bool inside;
        Key k;
        friend bool operator<(const Col& a, const Col& b) {
            if (a.inside != b.inside) return !a.inside;
            return a.k < b.k;
        }
    };
    using Row = std::map<Col, K>;

    CyclotomicWindow(CyclotomicKind kind, const FieldConfig<K>& cfg)
        : kind_(kind), cfg_(hecke_config(kind, cfg)), H_(cfg_), d_(cfg.d), ell_(cfg.ell), Q_(cfg.Q) {
        if (ell_ < 1) fail("BadParameter", "cyclotomic quotients need level >= 1");
        corner_ = kind_ == CyclotomicKind::Classical ? ColorSeq::omega(0, d_) : ColorSeq::omega(ell_, d_);
        build_generators();
    }

    const Hecke<K>& hecke() const { return H_; }
    const ColorSeq& corner() const { return corner_; }
    int d() const { return d_; }

    static FieldConfig<K> hecke_config(CyclotomicKind kind, const FieldConfig<K>& cfg) {
        FieldConfig<K> c = cfg;
        if (kind == CyclotomicKind::Classical) c.ell = 0;
        return c;
    }

    const std::vector<Op>& generators() const { return gens_; }

    std::vector<Mono> window(int B) const {
        std::vector<Mono> out;
        Mono m;
        auto rec = [&](auto&& self, int k) -> void {
            if (k == d_) {
                out.push_back(m);
                return;
            }
            for (int v = -B; v <= B; ++v) {
                m.e[k] = static_cast<int16_t>(v);
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        return out;
    }
    std::vector<Key> basis(int B) const {
        std::vector<Key> out;
        for (const auto& w : Perm::all(d_))
            for (const auto& m : window(B)) out.push_back(Key{corner_, corner_, w, m});
        return out;
    }
    static bool inside(const Key& k, int B) {
        for (auto v : k.m.e)
            if (v > B || v < -B) return false;
        return true;
    }
    Op element(const Key& k) const {
        HeckeBasis<K> b;
        b[k] = K(1);
        return H_.reconstruct(b);
    }
    Op monomial(const Mono& m) const { return H_.poly(RF<K>(Poly<K>::monomial(d_, m))); }

    // Echelon form of the ideal rows, pivots keyed by leading column.
    struct Echelon {
        int B = 0;
        std::map<Col, Row> piv;
        int inside_rank() const {
            int r = 0;
            for (const auto& [c, row] : piv) r += c.inside;
            return r;
        }
    };

    void insert(Echelon& E, Row row) const {
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = E.piv.find(lead->first);
            if (it == E.piv.end()) {
                K inv = lead->second.inv();
                for (auto& [c, v] : row) v *= inv;
                E.piv.emplace(lead->first, std::move(row));
                return;
            }
            K f = lead->second;
            for (const auto& [c, v] : it->second) {
                auto& slot = row[c];
                slot -= f * v;
                if (slot.is_zero()) row.erase(c);
            }
        }
    }
    Row to_row(const HeckeBasis<K>& b, const Mono& shift, int B) const {
        Row r;
        for (const auto& [k, v] : b) {
            Key s = k;
            s.m = k.m + shift;
            r[Col{inside(s, B), s}] += v;
        }
        return r;
    }

    Echelon ideal(int B, int G) const {
        Echelon E;
        E.B = B;
        auto win = window(G);
        for (const auto& J : gens_)
            for (const auto& m : win) {
                HeckeBasis<K> left = H_.to_basis(monomial(m) * J);
                for (const auto& n : win) insert(E, to_row(left, n, B));
            }
        return E;
    }

    int quotient_dim(int B, int G) const {
        return static_cast<int>(basis(B).size()) - ideal(B, G).inside_rank();
    }

    // Normal form of an in-window element modulo the ideal: coordinates on the
    // non-pivot in-window columns.
    Row reduce(const Echelon& E, Row row) const {
        Row out;
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = E.piv.find(lead->first);
            if (it == E.piv.end()) {
                out.insert(*lead);
                row.erase(lead);
                continue;
            }
            K f = lead->second;
            for (const auto& [c, v] : it->second) {
                auto& slot = row[c];
                slot -= f * v;
                if (slot.is_zero()) row.erase(c);
            }
        }
        return out;
    }

    // Matrix of left multiplication by x_r on the quotient, using representatives
    // from window B and reduction in window B + 1.
    Matrix<K> x_matrix(int r, int B, int G, std::vector<Key>* reps = nullptr) const {
        Echelon E = ideal(B + 1, G + 1);
        std::vector<Col> free;
        for (const auto& k : basis(B + 1))
            if (!E.piv.count(Col{true, k})) free.push_back(Col{true, k});
        auto coords = [&](const Row& nf) {
            std::vector<K> v(free.size(), K(0));
            for (const auto& [c, val] : nf) {
                if (!c.inside) fail("WindowNotStabilized", "normal form left the window");
                auto it = std::lower_bound(free.begin(), free.end(), c);
                v[it - free.begin()] = val;
            }
            return v;
        };
        // independent representatives from window B
        Matrix<K> P;
        std::vector<Key> chosen;
        for (const auto& k : basis(B)) {
            HeckeBasis<K> b{{k, K(1)}};
            auto v = coords(reduce(E, to_row(b, Mono{}, B + 1)));
            Matrix<K> trial = P;
            trial.push_back(v);
            if (matrix_rank(trial) > static_cast<int>(P.size())) {
                P = trial;
                chosen.push_back(k);
            }
            if (P.size() == free.size()) break;
        }
        if (P.size() != free.size()) fail("WindowNotStabilized", "window representatives do not span the quotient");
        Matrix<K> img;
        Op xr = H_.x(r);
        for (const auto& k : chosen) {
            auto b = H_.to_basis(xr * element(k));
            img.push_back(coords(reduce(E, to_row(b, Mono{}, B + 1))));
        }
        if (reps) *reps = chosen;
        // row j of img is x_r rep_j = sum_i M[i][j] rep_i, so img = M^T P
        return matrix_solve(transpose(P), transpose(img));
    }

    static Matrix<K> transpose(const Matrix<K>& a) {
        if (a.empty()) return a;
        Matrix<K> t(a[0].size(), std::vector<K>(a.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
        return t;
    }

    // Candidate eigenvalues q^n Q_m, |n| <= d, all of them inside F.
    std::vector<K> candidates() const {
        std::vector<K> out;
        for (const auto& Qm : Q_) {
            K up = Qm, down = Qm;
            for (int n = 0; n <= d_; ++n) {
                for (const K& v : {up, down})
                    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
                up *= cfg_.q;
                down *= cfg_.q.inv();
            }
        }
        return out;
    }

private:
    void build_generators() {
        const Perm id(d_);
        if (kind_ == CyclotomicKind::Classical) {
            Poly<K> f = Poly<K>::constant(d_, K(1));
            for (const auto& Qm : Q_) f *= Poly<K>::var(d_, 0) - Poly<K>::constant(d_, Qm);
            Op F = H_.poly(RF<K>(f));
            for (const auto& u : Perm::all(d_))
                for (const auto& v : Perm::all(d_)) {
                    Op tu = H_.canonical_T(ColoredPerm(corner_, corner_, u));
                    Op tv = H_.canonical_T(ColoredPerm(corner_, corner_, v));
                    gens_.push_back(tu * F * tv);
                }
            return;
        }
        for (const auto& c : ColorSeq::all(ell_, d_)) {
            if (c.size() == 0 || !c.black(0)) continue;
            for (const auto& u : Perm::all(d_))
                for (const auto& v : Perm::all(d_))
                    gens_.push_back(H_.canonical_T(ColoredPerm(corner_, c, u)) * H_.canonical_T(ColoredPerm(c, corner_, v)));
        }
    }

    CyclotomicKind kind_;
    FieldConfig<K> cfg_;
    Hecke<K> H_;
    int d_, ell_;
    std::vector<K> Q_;
    ColorSeq corner_;
    std::vector<Op> gens_;
};

inline long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Windowed quotient dimensions for B = 1..Bmax; the last two must agree and
// match l^d d!.
template <class K>
Report verify_cyclotomic(const FieldConfig<K>& cfg, CyclotomicKind kind, int Bmax = 2, bool eigen = true) {
    Report rep;
    rep.suite = "cyclotomic";
    rep.config = config_json(cfg);
    rep.config["kind"] = str(kind);
    rep.config["window"] = Bmax;
    rep.config["heuristic"] = "windowed ideal; exact only once the dimension has stabilised";
    CyclotomicWindow<K> W(kind, cfg);
    long expect = 1;
    for (int k = 0; k < cfg.d; ++k) expect *= cfg.ell;
    expect *= factorial(cfg.d);

    json dims = json::array();
    int prev = -1, last = -1;
    for (int B = 1; B <= Bmax; ++B) {
        prev = last;
        last = W.quotient_dim(B, B);
        dims.push_back(last);
    }
    const bool stable = prev == last;
    rep.config["dims"] = dims;
    rep.config["dimension"] = last;
    rep.add("stabilized", stable, json{{"dims", dims}, {"reason", "WindowNotStabilized"}});
    rep.add("dimension", last == expect, json{{"dims", dims}, {"expected", expect}});

    if (eigen && stable) {
        const auto cand = W.candidates();
        for (int r = 1; r <= cfg.d; ++r) {
            json wit;
            try {
                Matrix<K> M = W.x_matrix(r, Bmax, Bmax);
                const int n = static_cast<int>(M.size());
                int total = 0;
                json eig = json::object();
                for (const auto& s : cand) {
                    Matrix<K> A = M;
                    for (int i = 0; i < n; ++i) A[i][i] -= s;
                    Matrix<K> P = A;
                    for (int k = 1; k < n; ++k) P = matrix_mul(P, A);
                    int mult = n - matrix_rank(P);
                    if (mult) eig[s.str()] = mult;
                    total += mult;
                }
                rep.config["eigenvalues_x" + std::to_string(r)] = eig;
                if (total != n) wit = {{"found", eig}, {"dimension", n}};
            } catch (const Error& e) {
                wit = {{"error", e.what()}};
            }
            rep.add("eigenvalues-in-F[x" + std::to_string(r) + "]", wit.is_null(), wit);
        }
    }
    return rep;
}

} // namespace hw
