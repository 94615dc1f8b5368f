#pragma once

#include "polyzeta/rational.hpp"
#include "polyzeta/word.hpp"

#include <map>
#include <string>
#include <utility>

namespace polyzeta {

/// Finite rational-linear combination of words; zero coefficients are never
/// stored, so equality of the underlying maps is exact equality of elements.
class LinComb {
public:
    LinComb() = default;
    LinComb(const Word& w) { add(w, Rational(1)); }  // NOLINT: implicit by design

    static LinComb zero() { return {}; }
    static LinComb unit() { return LinComb(Word::unit()); }

    void add(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Word, Rational>& terms() const { return terms_; }

    friend LinComb operator+(const LinComb& a, const LinComb& b) {
        LinComb out = a;
        for (const auto& [w, c] : b.terms_) out.add(w, c);
        return out;
    }
    friend LinComb operator-(const LinComb& a, const LinComb& b) { return a + (-b); }
    LinComb operator-() const {
        LinComb out;
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }
    friend LinComb operator*(const Rational& s, const LinComb& a) {
        LinComb out;
        if (s.is_zero()) return out;
        for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, s * c);
        return out;
    }
    LinComb& operator+=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) { return *this += -o; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// "2(1,1) + (2)" style; "0" for the zero element.
    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

/// Rational-linear combination of pairs of words (tensors).
class TensorLinComb {
public:
    TensorLinComb() = default;

    void add(const Word& left, const Word& right, const Rational& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(left, right);
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Word& left, const Word& right) const {
        auto it = terms_.find(std::make_pair(left, right));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }

    friend bool operator==(const TensorLinComb& a, const TensorLinComb& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::map<std::pair<Word, Word>, Rational> terms_;
};

/// Polynomial in the formal symbol T (the regularized depth-one divergent
/// value) whose coefficients are combinations of convergent words only.
class RegElement {
public:
    RegElement() = default;

    static RegElement from_convergent(const LinComb& c) {
        RegElement out;
        out.set(0, c);
        return out;
    }
    /// T^1 with unit-word coefficient.
    static RegElement symbol_T() {
        RegElement out;
        out.set(1, LinComb::unit());
        return out;
    }

    void set(int t_degree, const LinComb& c) {
        if (t_degree < 0) throw std::invalid_argument("RegElement: negative T degree");
        for (const auto& [w, coeff] : c.terms()) {
            (void)coeff;
            if (!w.convergent())
                throw std::invalid_argument("RegElement: non-convergent word " + w.str() + " in coefficient");
        }
        if (c.is_zero())
            coeffs_.erase(t_degree);
        else
            coeffs_[t_degree] = c;
    }

    LinComb coeff(int t_degree) const {
        auto it = coeffs_.find(t_degree);
        return it == coeffs_.end() ? LinComb::zero() : it->second;
    }

    int t_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, LinComb>& coeffs() const { return coeffs_; }

    friend RegElement operator+(const RegElement& a, const RegElement& b) {
        RegElement out = a;
        for (const auto& [d, c] : b.coeffs_) out.set(d, out.coeff(d) + c);
        return out;
    }
    friend RegElement operator-(const RegElement& a, const RegElement& b) { return a + (Rational(-1) * b); }
    friend RegElement operator*(const Rational& s, const RegElement& a) {
        RegElement out;
        for (const auto& [d, c] : a.coeffs_) out.set(d, s * c);
        return out;
    }
    RegElement& operator+=(const RegElement& o) { *this = *this + o; return *this; }
    RegElement& operator-=(const RegElement& o) { *this = *this - o; return *this; }

    /// Multiply by T^n (shift every degree up by n).
    RegElement times_T(int n = 1) const {
        RegElement out;
        for (const auto& [d, c] : coeffs_) out.set(d + n, c);
        return out;
    }

    friend bool operator==(const RegElement& a, const RegElement& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;

private:
    std::map<int, LinComb> coeffs_;
};

}  // namespace polyzeta
