#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyzeta {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
///
/// Thin value wrapper over boost::multiprecision::cpp_rational, which keeps
/// the canonical form for us; this type pins down the string format
/// ("num/den", reduced) and the exact-equality semantics the rest of the
/// library relies on.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : v_(make(BigInt(num), BigInt(den))) {}
    Rational(const BigInt& num, const BigInt& den) : v_(make(num, den)) {}
    explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}

    /// Parses "p/q" or "p" (optional sign, arbitrary precision).
    static Rational parse(std::string_view s);

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_.is_zero() ? 0 : 1); }

    /// Always "num/den", e.g. "-1/2", "3/1" — the JSON wire form.
    std::string str() const;
    /// "num" when the denominator is 1, otherwise "num/den".
    std::string pretty() const;

    double to_double() const { return v_.template convert_to<double>(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static boost::multiprecision::cpp_rational make(BigInt num, BigInt den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^n for n >= 0 (exact).
Rational pow_nonneg(const Rational& r, int n);

/// Binomial coefficient C(n, k) as an exact rational (0 when k < 0 or k > n).
Rational binomial(int n, int k);

/// Factorial n! for n >= 0.
BigInt factorial(int n);

}  // namespace polyzeta
