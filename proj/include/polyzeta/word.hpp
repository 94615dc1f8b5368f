#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyzeta {

/// Index word (k_1,...,k_r), all k_j >= 1; the empty word is the unit.
/// Words order by (weight, depth, lexicographic indices) — the canonical
/// output ordering everywhere in the library.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> indices) : idx_(std::move(indices)) {
        for (int k : idx_)
            if (k < 1) throw std::invalid_argument("Word: indices must be >= 1");
    }

    static Word unit() { return Word(); }
    static Word letter(int k) { return Word({k}); }

    /// Parses "2,1,1" or "(2,1,1)"; empty / "()" is the unit word.
    static Word parse(std::string_view s);

    const std::vector<int>& indices() const { return idx_; }
    bool empty() const { return idx_.empty(); }
    int depth() const { return static_cast<int>(idx_.size()); }
    int weight() const { return std::accumulate(idx_.begin(), idx_.end(), 0); }

    int front() const { return idx_.front(); }
    int back() const { return idx_.back(); }

    /// True when the associated nested series converges: unit, or last index >= 2.
    bool convergent() const { return idx_.empty() || idx_.back() >= 2; }

    Word tail() const { return Word(std::vector<int>(idx_.begin() + 1, idx_.end())); }
    Word prefix() const { return Word(std::vector<int>(idx_.begin(), idx_.end() - 1)); }

    friend Word concat(const Word& a, const Word& b) {
        std::vector<int> v = a.idx_;
        v.insert(v.end(), b.idx_.begin(), b.idx_.end());
        return Word(std::move(v));
    }
    friend Word prepend(int k, const Word& w) {
        std::vector<int> v;
        v.reserve(w.idx_.size() + 1);
        v.push_back(k);
        v.insert(v.end(), w.idx_.begin(), w.idx_.end());
        return Word(std::move(v));
    }

    std::string str() const;  // "(2,1,1)"; unit is "()"

    friend bool operator==(const Word& a, const Word& b) { return a.idx_ == b.idx_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        if (auto c = a.depth() <=> b.depth(); c != 0) return c;
        return a.idx_ <=> b.idx_;
    }

private:
    std::vector<int> idx_;
};

/// Argument tuple (-k_1,...,-k_r) of non-positive integers, stored as the
/// magnitudes k_j >= 0; never empty. External (CLI/JSON) form is signed.
class NegTuple {
public:
    explicit NegTuple(std::vector<int> magnitudes) : mag_(std::move(magnitudes)) {
        if (mag_.empty()) throw std::invalid_argument("NegTuple: empty tuple");
        for (int k : mag_)
            if (k < 0) throw std::invalid_argument("NegTuple: entries must be non-negative magnitudes");
    }

    /// Parses the signed external form, e.g. "0,-3,-1" or "(0,-3,-1)".
    static NegTuple parse(std::string_view s);
    /// From signed non-positive entries, e.g. [0,-3,-1].
    static NegTuple from_signed(const std::vector<int>& signed_entries);

    const std::vector<int>& magnitudes() const { return mag_; }
    std::vector<int> signed_entries() const {
        std::vector<int> v;
        v.reserve(mag_.size());
        for (int k : mag_) v.push_back(-k);
        return v;
    }

    int depth() const { return static_cast<int>(mag_.size()); }
    int weight() const { return std::accumulate(mag_.begin(), mag_.end(), 0); }
    int front() const { return mag_.front(); }

    NegTuple tail() const {
        if (depth() < 2) throw std::logic_error("NegTuple::tail: depth 1");
        return NegTuple(std::vector<int>(mag_.begin() + 1, mag_.end()));
    }

    std::string str() const;  // signed, "(0,-3,-1)"

    friend bool operator==(const NegTuple& a, const NegTuple& b) { return a.mag_ == b.mag_; }
    friend std::strong_ordering operator<=>(const NegTuple& a, const NegTuple& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        if (auto c = a.depth() <=> b.depth(); c != 0) return c;
        return a.mag_ <=> b.mag_;
    }

private:
    std::vector<int> mag_;
};

/// All words with the given exact weight (2^(weight-1) of them; unit for 0).
std::vector<Word> words_of_weight(int weight);
/// All words with weight <= bound, canonical order, including the unit.
std::vector<Word> words_up_to_weight(int max_weight);
/// All NegTuples with depth in [1, max_depth] and every magnitude <= max_index.
std::vector<NegTuple> neg_tuples_up_to(int max_depth, int max_index);

}  // namespace polyzeta
