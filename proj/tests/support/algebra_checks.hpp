#pragma once

// Shared exhaustive-sweep helpers for the algebraic laws, used by both the
// unit tests and the acceptance suite. Each returns the number of instances
// checked and reports the first failure through `failure`.

#include "polyzeta/regularize.hpp"
#include "polyzeta/stuffle.hpp"
#include "polyzeta/word.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace polyzeta::checks {

using TripleTensor = std::map<std::tuple<Word, Word, Word>, Rational>;

// (coproduct applied to one leg of a TensorLinComb) -> triple tensors
inline TripleTensor expand_left(const TensorLinComb& t) {
    TripleTensor out;
    for (const auto& [pair, c] : t.terms()) {
        const TensorLinComb inner = coproduct(pair.first);
        for (const auto& [ip, ic] : inner.terms()) {
            auto key = std::make_tuple(ip.first, ip.second, pair.second);
            out[key] += c * ic;
            if (out[key].is_zero()) out.erase(key);
        }
    }
    return out;
}

inline TripleTensor expand_right(const TensorLinComb& t) {
    TripleTensor out;
    for (const auto& [pair, c] : t.terms()) {
        const TensorLinComb inner = coproduct(pair.second);
        for (const auto& [ip, ic] : inner.terms()) {
            auto key = std::make_tuple(pair.first, ip.first, ip.second);
            out[key] += c * ic;
            if (out[key].is_zero()) out.erase(key);
        }
    }
    return out;
}

inline bool coassociative(const Word& w) {
    const TensorLinComb d = coproduct(w);
    return expand_left(d) == expand_right(d);
}

// commutativity + associativity over all nonempty-word pairs/triples whose
// total weight stays within the bound
inline long stuffle_laws_sweep(int max_total_weight, std::string* failure) {
    long checked = 0;
    std::vector<Word> words;
    for (const Word& w : words_up_to_weight(max_total_weight - 1))
        if (!w.empty()) words.push_back(w);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const Word& a = words[i];
            const Word& b = words[j];
            if (a.weight() + b.weight() > max_total_weight) continue;
            ++checked;
            if (!(stuffle(a, b) == stuffle(b, a))) {
                if (failure) *failure = "commutativity " + a.str() + " * " + b.str();
                return -checked;
            }
        }
    for (const Word& a : words)
        for (const Word& b : words)
            for (const Word& c : words) {
                if (a.weight() + b.weight() + c.weight() > max_total_weight) continue;
                ++checked;
                if (!(stuffle(stuffle(a, b), LinComb(c)) == stuffle(LinComb(a), stuffle(b, c)))) {
                    if (failure)
                        *failure = "associativity " + a.str() + "," + b.str() + "," + c.str();
                    return -checked;
                }
            }
    return checked;
}

inline long coassociativity_sweep(int max_weight, std::string* failure) {
    long checked = 0;
    for (const Word& w : words_up_to_weight(max_weight)) {
        ++checked;
        if (!coassociative(w)) {
            if (failure) *failure = "coassociativity " + w.str();
            return -checked;
        }
    }
    return checked;
}

// duality <coproduct(W), w1 (x) w2> = <stuffle(w1,w2), W> over all W with
// weight <= bound and all splittings weight(w1) + weight(w2) = weight(W)
inline long duality_sweep(int max_weight, std::string* failure) {
    long checked = 0;
    const auto all = words_up_to_weight(max_weight);
    for (const Word& W : all)
        for (const Word& w1 : all)
            for (const Word& w2 : all) {
                if (w1.weight() + w2.weight() != W.weight()) continue;
                ++checked;
                if (!duality_pairing_check(w1, w2, W)) {
                    if (failure)
                        *failure = "duality " + w1.str() + "," + w2.str() + " vs " + W.str();
                    return -checked;
                }
            }
    return checked;
}

// stuffle_regularize is an algebra map: reg(a) reg(b) = reg(a * b)
inline long reg_homomorphism_sweep(int max_total_weight, std::string* failure) {
    long checked = 0;
    std::vector<Word> words;
    for (const Word& w : words_up_to_weight(max_total_weight - 1))
        if (!w.empty()) words.push_back(w);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const Word& a = words[i];
            const Word& b = words[j];
            if (a.weight() + b.weight() > max_total_weight) continue;
            ++checked;
            const RegElement lhs = reg_product(stuffle_regularize(a), stuffle_regularize(b));
            const RegElement rhs = stuffle_regularize(stuffle(a, b));
            if (!(lhs == rhs)) {
                if (failure) *failure = "reg homomorphism " + a.str() + " * " + b.str();
                return -checked;
            }
        }
    return checked;
}

// the closed trailing-1 formula: for convergent (k_1..k_r),
// reg(k_1..k_r,1) = T (k_1..k_r) - sum_j insert-1-before-j - sum_j bump-j
inline long trailing_one_formula_sweep(int max_prefix_weight, std::string* failure) {
    long checked = 0;
    for (const Word& u : words_up_to_weight(max_prefix_weight)) {
        if (u.empty() || !u.convergent()) continue;
        ++checked;
        RegElement expected;
        expected.set(1, LinComb(u));
        LinComb minus;
        const auto& idx = u.indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            std::vector<int> ins(idx.begin(), idx.end());
            ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(j), 1);
            minus.add(Word(ins), Rational(-1));
            std::vector<int> bump(idx.begin(), idx.end());
            bump[j] += 1;
            minus.add(Word(bump), Rational(-1));
        }
        expected.set(0, minus);
        const RegElement got = stuffle_regularize(concat(u, Word::letter(1)));
        if (!(got == expected)) {
            if (failure) *failure = "trailing-1 formula for " + u.str() + ".(1)";
            return -checked;
        }
    }
    return checked;
}

}  // namespace polyzeta::checks
