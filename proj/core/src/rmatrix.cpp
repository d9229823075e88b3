#include "klrtab/rmatrix.hpp"

#include <stdexcept>

#include "klrtab/crystal.hpp"

namespace klrtab {

namespace {

// eps, phi, and the single A_1 weight coordinate of each letter.
// 10 has weight +1, 01 has weight -1, 00 and 11 weight 0 (the unique
// assignment with eps = phi = 0 on the weight-0 letters).
detail::FactorStat letter_stat(BitLetter b) {
    switch (b) {
        case BitLetter::b10: return {0, 1, 1};
        case BitLetter::b01: return {1, 0, -1};
        default: return {0, 0, 0};
    }
}

bool first_bit(BitLetter b) { return b == BitLetter::b10 || b == BitLetter::b11; }
bool second_bit(BitLetter b) { return b == BitLetter::b01 || b == BitLetter::b11; }

BitLetter make_letter(bool in_first, bool in_second) {
    if (in_first && in_second) return BitLetter::b11;
    if (in_first) return BitLetter::b10;
    if (in_second) return BitLetter::b01;
    return BitLetter::b00;
}

std::vector<detail::FactorStat> word_stats(const BitWord& w) {
    std::vector<detail::FactorStat> f;
    f.reserve(w.letters().size());
    for (BitLetter b : w.letters()) f.push_back(letter_stat(b));
    return f;
}

}  // namespace

std::string to_string(BitLetter b) {
    switch (b) {
        case BitLetter::b00: return "00";
        case BitLetter::b10: return "10";
        case BitLetter::b01: return "01";
        case BitLetter::b11: return "11";
    }
    return "??";
}

BitWord::BitWord(int n, std::vector<BitLetter> letters) : letters_(std::move(letters)) {
    if (static_cast<int>(letters_.size()) != n)
        throw std::invalid_argument("BitWord: need exactly n letters");
}

std::string BitWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        s += klrtab::to_string(letters_[i]);
    }
    return s;
}

BitWord encode(const ColumnTableau& first, const ColumnTableau& second, int n) {
    if (first.n != n || second.n != n) throw std::invalid_argument("encode: n mismatch");
    std::vector<BitLetter> letters(n);
    for (int a = n; a >= 1; --a)
        letters[n - a] = make_letter(first.contains(a), second.contains(a));
    return BitWord(n, std::move(letters));
}

std::pair<ColumnTableau, ColumnTableau> decode(const BitWord& w) {
    std::vector<int> f, s;
    for (int a = 1; a <= w.n(); ++a) {
        if (first_bit(w.at_value(a))) f.push_back(a);
        if (second_bit(w.at_value(a))) s.push_back(a);
    }
    return {ColumnTableau(w.n(), std::move(f)), ColumnTableau(w.n(), std::move(s))};
}

std::optional<BitWord> bitword_apply_e(const BitWord& w) {
    int pos = detail::tensor_e_position(word_stats(w));
    if (pos < 0) return std::nullopt;
    auto letters = w.letters();
    letters[pos] = BitLetter::b10;  // e(01) = 10
    return BitWord(w.n(), std::move(letters));
}

std::optional<BitWord> bitword_apply_f(const BitWord& w) {
    int pos = detail::tensor_f_position(word_stats(w));
    if (pos < 0) return std::nullopt;
    auto letters = w.letters();
    letters[pos] = BitLetter::b01;  // f(10) = 01
    return BitWord(w.n(), std::move(letters));
}

SigmaResult sigma_with_words(const ColumnTableau& first, const ColumnTableau& second, int n) {
    int k = first.size(), l = second.size();
    if (k < 1 || k > n - 1 || l < 1 || l > n - 1)
        throw std::invalid_argument("sigma: column sizes must be in 1..n-1");
    BitWord w = encode(first, second, n);
    BitWord cur = w;
    // k <= l: raise l-k times; k > l: lower k-l times; k = l: identity.
    for (int step = 0; step < l - k; ++step) {
        auto next = bitword_apply_e(cur);
        if (!next) throw std::logic_error("sigma: e-power not applicable (encoding bug)");
        cur = std::move(*next);
    }
    for (int step = 0; step < k - l; ++step) {
        auto next = bitword_apply_f(cur);
        if (!next) throw std::logic_error("sigma: f-power not applicable (encoding bug)");
        cur = std::move(*next);
    }
    auto [f, s] = decode(cur);
    return {std::move(f), std::move(s), std::move(w), std::move(cur)};
}

std::pair<ColumnTableau, ColumnTableau> sigma(const ColumnTableau& first,
                                              const ColumnTableau& second, int n) {
    auto r = sigma_with_words(first, second, n);
    return {std::move(r.first), std::move(r.second)};
}

}  // namespace klrtab
