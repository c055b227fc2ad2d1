#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "ba/errors.hpp"

namespace ba {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, kept fully reduced with positive
/// denominator. Division by zero throws instead of invoking the backend's
/// own error path, so all field types fail uniformly.
class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(long long n) : v_(n) {}
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = Rep(num);
        v_ /= Rep(den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw DivisionByZero();
        return Rational(Rep(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(Rep(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    friend bool is_zero(const Rational& a) { return a.v_ == 0; }

    /// Canonical text form: "a" for integers, "a/b" otherwise (b > 0).
    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit Rational(Rep v) : v_(std::move(v)) {}
    Rep v_;
};

/// Handle for the field of rationals. Stateless; all instances are equal.
struct RationalField {
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(long long n) const { return Rational(n); }
    Element from_bigint(const BigInt& n) const { return Rational(n); }

    /// Parses "a" or "a/b" with decimal big integers; a may carry a leading
    /// '-' (ASCII) or U+2212 minus sign.
    Element parse(std::string_view text) const {
        std::string s(text);
        // tolerate the typographic minus on input
        if (s.rfind("\xE2\x88\x92", 0) == 0) s.replace(0, 3, "-");
        auto slash = s.find('/');
        std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
        std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
        if (!looks_like_int(num, true) || !looks_like_int(den, false))
            throw ParseError("invalid rational: \"" + std::string(text) + "\"");
        BigInt n(num), d(den);
        if (d == 0) throw ParseError("invalid rational (zero denominator): \"" + std::string(text) + "\"");
        return Rational(n, d);
    }

    std::string to_string(const Element& x) const { return x.str(); }

    /// Small random nonzero rational; numerator in [-9,9]\{0}, denominator in [1,4].
    Element random_nonzero(std::mt19937_64& rng) const {
        long long num = 1 + static_cast<long long>(rng() % 9);
        if (rng() % 2 == 0) num = -num;
        long long den = 1 + static_cast<long long>(rng() % 4);
        return Rational(BigInt(num), BigInt(den));
    }

    /// Small random rational, zero included.
    Element random_element(std::mt19937_64& rng) const {
        long long num = static_cast<long long>(rng() % 19) - 9;
        long long den = 1 + static_cast<long long>(rng() % 4);
        return Rational(BigInt(num), BigInt(den));
    }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
    friend bool operator!=(const RationalField&, const RationalField&) { return false; }

private:
    static bool looks_like_int(const std::string& s, bool allow_sign) {
        std::size_t i = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }
};

}  // namespace ba
