#include "polyzeta/regularize.hpp"

#include "polyzeta/stuffle.hpp"

#include <map>
#include <mutex>

namespace polyzeta {

namespace {

std::mutex g_reg_mutex;
std::map<Word, RegElement> g_reg_cache;  // guarded by g_reg_mutex

}  // namespace

RegElement stuffle_regularize(const Word& w) {
    if (w.convergent()) return RegElement::from_convergent(LinComb(w));
    {
        std::lock_guard<std::mutex> lock(g_reg_mutex);
        auto it = g_reg_cache.find(w);
        if (it != g_reg_cache.end()) return it->second;
    }
    const Word u = w.prefix();  // w = u.y1
    const LinComb product = stuffle(u, Word::letter(1));
    const Rational mult = product.coeff(w);
    RegElement rest;
    for (const auto& [v, c] : product.terms()) {
        if (v == w) continue;
        rest += c * stuffle_regularize(v);
    }
    RegElement out = (Rational(1) / mult) * (stuffle_regularize(u).times_T() - rest);
    {
        std::lock_guard<std::mutex> lock(g_reg_mutex);
        g_reg_cache.emplace(w, out);
    }
    return out;
}

RegElement stuffle_regularize(const LinComb& c) {
    RegElement out;
    for (const auto& [w, coeff] : c.terms()) out += coeff * stuffle_regularize(w);
    return out;
}

RegElement reg_product(const RegElement& a, const RegElement& b) {
    RegElement out;
    for (const auto& [da, ca] : a.coeffs())
        for (const auto& [db, cb] : b.coeffs()) {
            RegElement piece;
            piece.set(da + db, stuffle(ca, cb));
            out += piece;
        }
    return out;
}

}  // namespace polyzeta
