#include "polyzeta/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace polyzeta {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // guarded by g_bernoulli_mutex

}  // namespace

Rational bernoulli_number(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: n must be >= 0");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
    while (static_cast<int>(g_bernoulli.size()) <= n) {
        const int m = static_cast<int>(g_bernoulli.size());
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * g_bernoulli[static_cast<std::size_t>(j)];
        g_bernoulli.push_back(-acc / Rational(m + 1));
    }
    return g_bernoulli[static_cast<std::size_t>(n)];
}

Poly bernoulli_poly(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_poly: n must be >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int j = 0; j <= n; ++j)
        c[static_cast<std::size_t>(n - j)] = binomial(n, j) * bernoulli_number(j);
    return Poly(std::move(c));
}

Poly bernoulli_substitute(const Poly& f) {
    Poly out;
    for (int n = 0; n <= f.degree(); ++n) {
        const Rational a = f.coeff(n);
        if (a.is_zero()) continue;
        out += (a / Rational(n + 1)) * bernoulli_poly(n + 1);
    }
    return out;
}

}  // namespace polyzeta
