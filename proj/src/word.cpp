#include "polyzeta/word.hpp"

#include <algorithm>
#include <charconv>

namespace polyzeta {

namespace {

std::vector<int> parse_int_tuple(std::string_view s) {
    // strip optional parens and whitespace
    auto drop = [&](char c) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        if (!s.empty() && s.front() == '(' && s.back() == ')' && c == '(') {
            s.remove_prefix(1);
            s.remove_suffix(1);
        }
    };
    drop('(');
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("cannot parse integer tuple entry '" + std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_tuple(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    out += ')';
    return out;
}

}  // namespace

Word Word::parse(std::string_view s) { return Word(parse_int_tuple(s)); }

std::string Word::str() const { return format_tuple(idx_); }

NegTuple NegTuple::parse(std::string_view s) { return from_signed(parse_int_tuple(s)); }

NegTuple NegTuple::from_signed(const std::vector<int>& signed_entries) {
    std::vector<int> mags;
    mags.reserve(signed_entries.size());
    for (int e : signed_entries) {
        if (e > 0) throw std::invalid_argument("NegTuple: entries must be non-positive");
        mags.push_back(-e);
    }
    return NegTuple(std::move(mags));
}

std::string NegTuple::str() const { return format_tuple(signed_entries()); }

std::vector<Word> words_of_weight(int weight) {
    std::vector<Word> out;
    if (weight == 0) {
        out.push_back(Word::unit());
        return out;
    }
    // compositions of `weight`
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = 1; k <= remaining; ++k) {
            cur.push_back(k);
            self(self, remaining - k);
            cur.pop_back();
        }
    };
    rec(rec, weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> words_up_to_weight(int max_weight) {
    std::vector<Word> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto ws = words_of_weight(w);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

std::vector<NegTuple> neg_tuples_up_to(int max_depth, int max_index) {
    std::vector<NegTuple> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth_left) -> void {
        if (!cur.empty()) out.push_back(NegTuple(cur));
        if (depth_left == 0) return;
        for (int k = 0; k <= max_index; ++k) {
            cur.push_back(k);
            self(self, depth_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_depth);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace polyzeta
