#pragma once

#include "polyzeta/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace polyzeta {

/// Dense univariate polynomial over an exact scalar, coefficients stored in
/// ascending degree order with no trailing zeros. The zero polynomial has an
/// empty coefficient list and degree() == -1.
template <class Scalar>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Scalar constant) {  // NOLINT: implicit by design
        coeffs_.push_back(std::move(constant));
        trim();
    }
    explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Polynomial monomial(int degree, Scalar coeff = Scalar(1)) {
        std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }
    static Polynomial variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Scalar coeff(int degree) const {
        if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return Scalar(0);
        return coeffs_[static_cast<std::size_t>(degree)];
    }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar evaluate(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Taylor shift p(z) -> p(z + c), exact, by binomial expansion.
    Polynomial shifted(const Scalar& c) const {
        Polynomial out;
        out.coeffs_.assign(coeffs_.size(), Scalar(0));
        for (int i = 0; i <= degree(); ++i) {
            // expand a_i (z + c)^i
            Scalar cpow(1);
            for (int j = i; j >= 0; --j) {
                out.coeffs_[static_cast<std::size_t>(j)] +=
                    coeffs_[static_cast<std::size_t>(i)] * binom_as<Scalar>(i, j) * cpow;
                cpow = cpow * c;
            }
        }
        out.trim();
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
            out.coeffs_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        out.trim();
        return out;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        out.trim();
        return out;
    }
    friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
        Polynomial out = p;
        for (auto& c : out.coeffs_) c = s * c;
        out.trim();
        return out;
    }
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    template <class S>
    static S binom_as(int n, int k) {
        S num(1), den(1);
        for (int i = 1; i <= k; ++i) {
            num = num * S(n - k + i);
            den = den * S(i);
        }
        return num / den;
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using Poly = Polynomial<Rational>;

/// p(z) -> p(z + 1).
inline Poly shift_up(const Poly& p) { return p.shifted(Rational(1)); }
/// p(z) -> p(z - 1), the shift operator of the difference calculus.
inline Poly shift_down(const Poly& p) { return p.shifted(Rational(-1)); }
/// p(z) - p(z - 1).
inline Poly backward_difference(const Poly& p) { return p - shift_down(p); }

/// Renders like "z^2/2 - 1/6", descending degree, ASCII.
std::string to_string(const Poly& p, const std::string& var = "z");

}  // namespace polyzeta
