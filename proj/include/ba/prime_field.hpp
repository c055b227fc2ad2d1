#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include "ba/errors.hpp"
#include "ba/rational.hpp"

namespace ba {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

/// Element of GF(p). Every element carries its modulus; arithmetic between
/// different moduli throws MixedFields. There is no default constructor --
/// elements are created through a PrimeField handle.
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;  // p < 2^61, no overflow
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(detail::mulmod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        a.check(b);
        return a * b.inverse();
    }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (v_ == 0) throw DivisionByZero("inverse of zero in GF(p)");
        // extended Euclid on (v, p); p prime so gcd is 1
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t; std::swap(t, new_t);
            r -= q * new_r; std::swap(r, new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend bool is_zero(const Fp& a) { return a.v_ == 0; }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw MixedFields("GF(p) elements with different moduli");
    }
    std::uint64_t v_, p_;
};

/// Handle for GF(p). The modulus is validated on construction: it must be a
/// prime below 2^61 so that residues fit fixed-width arithmetic.
class PrimeField {
public:
    using Element = Fp;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ull << 61) || !detail::is_prime_u64(p))
            throw InvalidModulus("modulus " + std::to_string(p) + " is not a prime below 2^61");
    }

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return Fp(0, p_); }
    Element one() const { return Fp(1 % p_, p_); }
    Element from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return Fp(static_cast<std::uint64_t>(r), p_);
    }
    Element from_bigint(const BigInt& n) const {
        BigInt r = n % BigInt(p_);
        if (r < 0) r += BigInt(p_);
        return Fp(static_cast<std::uint64_t>(r), p_);
    }

    /// Parses a decimal residue (optionally signed); reduced into [0, p).
    Element parse(std::string_view text) const {
        std::string s(text);
        if (s.rfind("\xE2\x88\x92", 0) == 0) s.replace(0, 3, "-");
        bool neg = !s.empty() && s[0] == '-';
        std::size_t i = neg ? 1 : 0;
        if (i >= s.size()) throw ParseError("invalid residue: \"" + std::string(text) + "\"");
        std::uint64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("invalid residue: \"" + std::string(text) + "\"");
            v = (detail::mulmod(v, 10, p_) + static_cast<std::uint64_t>(s[i] - '0')) % p_;
        }
        return neg ? -Fp(v, p_) : Fp(v, p_);
    }

    std::string to_string(const Element& x) const { return std::to_string(x.value()); }

    Element random_nonzero(std::mt19937_64& rng) const { return Fp(1 + rng() % (p_ - 1), p_); }

    Element random_element(std::mt19937_64& rng) const { return Fp(rng() % p_, p_); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

private:
    std::uint64_t p_;
};

}  // namespace ba
