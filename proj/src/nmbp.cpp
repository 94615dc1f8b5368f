#include "polyzeta/nmbp.hpp"

#include <map>
#include <mutex>

namespace polyzeta {

namespace {

std::mutex g_nmbp_mutex;
std::map<NegTuple, Poly> g_nmbp_cache;        // guarded by g_nmbp_mutex
std::mutex g_closed_mutex;
std::map<NegTuple, Poly> g_closed_cache;      // guarded by g_closed_mutex

Poly depth_one(int k) { return (Rational(-1) / Rational(k + 1)) * bernoulli_poly(k + 1); }

}  // namespace

Poly solve_difference(const Poly& q) { return bernoulli_substitute(q); }

Poly nmbp(const NegTuple& t) {
    {
        std::lock_guard<std::mutex> lock(g_nmbp_mutex);
        auto it = g_nmbp_cache.find(t);
        if (it != g_nmbp_cache.end()) return it->second;
    }
    Poly out;
    if (t.depth() == 1) {
        out = depth_one(t.front());
    } else {
        const Poly rhs = Rational(-1) * Poly::monomial(t.front()) * shift_up(nmbp(t.tail()));
        out = solve_difference(rhs);
    }
    {
        std::lock_guard<std::mutex> lock(g_nmbp_mutex);
        g_nmbp_cache.emplace(t, out);
    }
    return out;
}

Poly nmbp_closed_form(const NegTuple& t) {
    if (t.depth() == 0) throw std::invalid_argument("nmbp_closed_form: depth-0 input");
    if (t.depth() == 1) return depth_one(t.front());
    {
        std::lock_guard<std::mutex> lock(g_closed_mutex);
        auto it = g_closed_cache.find(t);
        if (it != g_closed_cache.end()) return it->second;
    }
    const auto& mags = t.magnitudes();
    const int r = t.depth();
    const int klast = mags[static_cast<std::size_t>(r - 1)];
    const int kprev = mags[static_cast<std::size_t>(r - 2)];
    // prefix of depth r-1 whose last slot absorbs the merged index
    auto merged = [&](int slot_value) {
        std::vector<int> m(mags.begin(), mags.end() - 2);
        m.push_back(slot_value);
        return NegTuple(std::move(m));
    };
    Poly out = (Rational(-1) / Rational(klast + 1)) * nmbp_closed_form(merged(kprev + klast + 1));
    out += (Rational(-1) / Rational(2)) * nmbp_closed_form(merged(kprev + klast));
    for (int q = 1; q <= klast; ++q) {
        const Rational c = rising_factorial(-klast, q) * bernoulli_number(q + 1) / Rational(factorial(q + 1), BigInt(1));
        if (c.is_zero()) continue;
        out += c * nmbp_closed_form(merged(kprev + klast - q));
    }
    {
        std::lock_guard<std::mutex> lock(g_closed_mutex);
        g_closed_cache.emplace(t, out);
    }
    return out;
}

Rational mzv_neg(const NegTuple& t, const Rational& at) { return nmbp(t).evaluate(at); }

bool verify_b0(const NegTuple& t) {
    if (t.depth() < 2) throw std::invalid_argument("verify_b0: depth must be >= 2");
    const Poly v = nmbp(t);
    const Poly lhs = shift_up(v) - v;
    const Poly rhs = Rational(-1) * Poly::monomial(t.front()) * shift_up(nmbp(t.tail()));
    return lhs == rhs;
}

NegTuple repeated_zero(int depth) { return NegTuple(std::vector<int>(static_cast<std::size_t>(depth), 0)); }

Rational rising_factorial(int a, int q) {
    Rational acc(1);
    for (int i = 0; i < q; ++i) acc *= Rational(a + i);
    return acc;
}

}  // namespace polyzeta
