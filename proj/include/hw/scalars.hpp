#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmp.h>
#include <gmpxx.h>

#include "hw/error.hpp"

namespace hw {

// Arbitrary precision rationals (characteristic 0).
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static constexpr bool prime_field = false;
    static uint64_t characteristic() { return 0; }
    static std::string field_name() { return "Q"; }

    static Rational parse(const std::string& s) {
        mpq_class r;
        if (s.empty() || r.set_str(s, 10) != 0)
            fail("ParseError", "not a rational number: '" + s + "'");
        r.canonicalize();
        if (r.get_den() == 0) fail("DivisionByZero", "zero denominator in '" + s + "'");
        return Rational(r);
    }

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    std::string str() const { return v_.get_str(); }
    std::size_t hash() const { return std::hash<std::string>{}(v_.get_str(16)); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail("DivisionByZero", "division by zero");
        v_ /= o.v_;
        return *this;
    }
    Rational inv() const { return Rational(1) / *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    // Total order used only for deterministic containers.
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    // Height used to bound searches for q-powers.
    std::size_t height_bits() const {
        return std::max(mpz_sizeinbase(v_.get_num_mpz_t(), 2), mpz_sizeinbase(v_.get_den_mpz_t(), 2));
    }

private:
    mpq_class v_;
};

// Residues modulo a prime below 2^63. The modulus is a thread-local context,
// installed with ModP::Scope for the duration of a computation.
class ModP {
public:
    ModP() = default;
    ModP(long n) {
        const uint64_t p = modulus();
        if (p == 0) fail("NoModulus", "ModP used outside of a ModP::Scope");
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        v_ = static_cast<uint64_t>(r);
    }

    static constexpr bool prime_field = true;
    static uint64_t characteristic() { return modulus(); }
    static std::string field_name() { return "F_" + std::to_string(modulus()); }

    static uint64_t& modulus() {
        thread_local uint64_t p = 0;
        return p;
    }
    class Scope {
    public:
        explicit Scope(uint64_t p) : old_(modulus()) { modulus() = p; }
        ~Scope() { modulus() = old_; }
        Scope(const Scope&) = delete;
        Scope& operator=(const Scope&) = delete;

    private:
        uint64_t old_;
    };

    static ModP from_raw(uint64_t r) {
        ModP x;
        x.v_ = r % modulus();
        return x;
    }

    static ModP parse(const std::string& s) {
        mpq_class r;
        if (s.empty() || r.set_str(s, 10) != 0)
            fail("ParseError", "not a rational number: '" + s + "'");
        r.canonicalize();
        const uint64_t p = modulus();
        mpz_class pz(std::to_string(p));
        mpz_class n = r.get_num() % pz, d = r.get_den() % pz;
        if (n < 0) n += pz;
        if (d == 0) fail("DivisionByZero", "denominator of '" + s + "' vanishes mod p");
        return from_raw(std::stoull(n.get_str())) / from_raw(std::stoull(d.get_str()));
    }

    uint64_t raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::string str() const { return std::to_string(v_); }
    std::size_t hash() const { return std::hash<uint64_t>{}(v_); }
    bool is_integer() const { return true; }
    std::size_t height_bits() const { return 64; }

    ModP operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    ModP& operator+=(const ModP& o) {
        const uint64_t p = modulus();
        v_ += o.v_;
        if (v_ >= p) v_ -= p;
        return *this;
    }
    ModP& operator-=(const ModP& o) {
        const uint64_t p = modulus();
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
        return *this;
    }
    ModP& operator*=(const ModP& o) {
        v_ = static_cast<uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % modulus());
        return *this;
    }
    ModP inv() const {
        if (v_ == 0) fail("DivisionByZero", "division by zero");
        return pow(modulus() - 2);
    }
    ModP& operator/=(const ModP& o) { return *this *= o.inv(); }
    ModP pow(uint64_t e) const {
        ModP base = *this, acc = from_raw(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ModP& a, const ModP& b) { return a.v_ != b.v_; }
    friend bool operator<(const ModP& a, const ModP& b) { return a.v_ < b.v_; }

private:
    uint64_t v_ = 0;
};

template <class K>
K power(K base, long e) {
    if (e < 0) {
        base = K(1) / base;
        e = -e;
    }
    K acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline bool is_prime_u64(uint64_t n) {
    mpz_class z(std::to_string(n));
    return n >= 2 && mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

// Parameters as text, before a field is chosen.
struct ConfigSpec {
    uint64_t characteristic = 0;
    std::string q = "2";
    std::vector<std::string> Q;
    int d = 2;
    int ell = 0;
};

template <class K>
struct FieldConfig {
    K q;
    std::vector<K> Q; // Q[0] is Q_1
    int d = 0;
    int ell = 0;
    // nullopt means infinite order
    std::optional<long> order_q;

    const K& Qk(int k) const {
        if (k < 1 || k > static_cast<int>(Q.size())) fail("IndexOutOfRange", "Q_" + std::to_string(k));
        return Q[k - 1];
    }
};

// Multiplicative order of q, or nullopt if infinite.
template <class K>
std::optional<long> multiplicative_order(const K& q) {
    if constexpr (K::prime_field) {
        K acc = q;
        for (long e = 1; e <= static_cast<long>(K::characteristic()); ++e) {
            if (acc.is_one()) return e;
            acc *= q;
        }
        return std::nullopt;
    } else {
        if (q.is_one()) return 1;
        if (q == K(-1)) return 2;
        return std::nullopt;
    }
}

// Builds and validates a configuration. For ModP the caller must hold a
// ModP::Scope for spec.characteristic.
template <class K>
FieldConfig<K> validate_config(const ConfigSpec& spec) {
    if constexpr (K::prime_field) {
        if (!is_prime_u64(spec.characteristic))
            fail("NonPrimeCharacteristic", std::to_string(spec.characteristic) + " is not prime");
        if (spec.characteristic >= (uint64_t(1) << 63))
            fail("NonPrimeCharacteristic", "prime must be below 2^63");
        if (K::characteristic() != spec.characteristic)
            fail("BadParameter", "ModP scope does not match the configured characteristic");
    } else {
        if (spec.characteristic != 0) fail("BadParameter", "rational backend needs characteristic 0");
    }
    if (spec.d < 0) fail("BadParameter", "d must be >= 0");
    if (spec.ell < 0) fail("BadParameter", "level must be >= 0");
    if (static_cast<int>(spec.Q.size()) != spec.ell)
        fail("BadParameter", "expected " + std::to_string(spec.ell) + " values of Q, got " +
                                 std::to_string(spec.Q.size()));
    FieldConfig<K> cfg;
    cfg.q = K::parse(spec.q);
    if (cfg.q.is_zero()) fail("BadParameter", "q=0");
    if (cfg.q.is_one()) fail("BadParameter", "q=1");
    for (std::size_t m = 0; m < spec.Q.size(); ++m) {
        K v = K::parse(spec.Q[m]);
        if (v.is_zero()) fail("BadParameter", "Q_" + std::to_string(m + 1) + "=0");
        cfg.Q.push_back(v);
    }
    cfg.d = spec.d;
    cfg.ell = spec.ell;
    cfg.order_q = multiplicative_order(cfg.q);
    return cfg;
}

} // namespace hw
