#include "polyzeta/stuffle.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace polyzeta {

namespace {

LinComb prepend_all(int k, const LinComb& c) {
    LinComb out;
    for (const auto& [w, coeff] : c.terms()) out.add(prepend(k, w), coeff);
    return out;
}

std::mutex g_stuffle_mutex;
std::map<std::pair<Word, Word>, LinComb> g_stuffle_cache;  // guarded by g_stuffle_mutex

}  // namespace

LinComb stuffle(const Word& a, const Word& b) {
    if (a.empty()) return LinComb(b);
    if (b.empty()) return LinComb(a);
    const auto key = std::make_pair(a, b);
    {
        std::lock_guard<std::mutex> lock(g_stuffle_mutex);
        auto it = g_stuffle_cache.find(key);
        if (it != g_stuffle_cache.end()) return it->second;
    }
    const int k = a.front();
    const int kp = b.front();
    const Word w = a.tail();
    const Word wp = b.tail();
    LinComb out = prepend_all(k, stuffle(w, b));
    out += prepend_all(kp, stuffle(a, wp));
    out += prepend_all(k + kp, stuffle(w, wp));
    {
        std::lock_guard<std::mutex> lock(g_stuffle_mutex);
        g_stuffle_cache.emplace(key, out);
    }
    return out;
}

LinComb stuffle(const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out += (ca * cb) * stuffle(wa, wb);
    return out;
}

TensorLinComb tensor_concat(const TensorLinComb& a, const TensorLinComb& b) {
    TensorLinComb out;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms())
            out.add(concat(pa.first, pb.first), concat(pa.second, pb.second), ca * cb);
    return out;
}

TensorLinComb coproduct(const Word& w) {
    TensorLinComb out;
    out.add(Word::unit(), Word::unit(), Rational(1));
    for (int k : w.indices()) {
        TensorLinComb letter;
        for (int i = 0; i <= k; ++i) {
            const Word left = i == 0 ? Word::unit() : Word::letter(i);
            const Word right = i == k ? Word::unit() : Word::letter(k - i);
            letter.add(left, right, Rational(1));
        }
        out = tensor_concat(out, letter);
    }
    return out;
}

bool duality_pairing_check(const Word& w1, const Word& w2, const Word& W) {
    return coproduct(W).coeff(w1, w2) == stuffle(w1, w2).coeff(W);
}

}  // namespace polyzeta
