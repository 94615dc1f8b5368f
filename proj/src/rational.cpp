#include "polyzeta/rational.hpp"

namespace polyzeta {

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            BigInt n{std::string(s)};
            return Rational(n, BigInt(1));
        }
        BigInt n{std::string(s.substr(0, slash))};
        std::string_view den_part = s.substr(slash + 1);
        if (den_part.empty()) throw bad();
        BigInt d{std::string(den_part)};
        if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string Rational::str() const {
    return num().str() + "/" + den().str();
}

std::string Rational::pretty() const {
    return is_integer() ? num().str() : str();
}

Rational pow_nonneg(const Rational& r, int n) {
    if (n < 0) throw std::invalid_argument("pow_nonneg: negative exponent");
    Rational acc(1);
    for (int i = 0; i < n; ++i) acc *= r;
    return acc;
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    k = std::min(k, n - k);
    BigInt num(1), den(1);
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return Rational(num, den);
}

BigInt factorial(int n) {
    BigInt acc(1);
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace polyzeta
