#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klrtab/tableaux.hpp"

namespace klrtab {

/// Letter of the rank-one crystal B = {00, 10, 01, 11}.  The first bit
/// records membership in the first tableau, the second bit in the
/// second; e(01) = 10 and f(10) = 01 are the only defined moves.
enum class BitLetter : std::uint8_t { b00, b10, b01, b11 };

std::string to_string(BitLetter b);

/// Word b_n (x) b_{n-1} (x) ... (x) b_1; letters are stored in tensor
/// order, so index 0 corresponds to the value a = n.
class BitWord {
public:
    BitWord() = default;
    BitWord(int n, std::vector<BitLetter> letters);

    int n() const { return static_cast<int>(letters_.size()); }
    BitLetter at_value(int a) const { return letters_.at(n() - a); }
    const std::vector<BitLetter>& letters() const { return letters_; }

    /// Rendered in tensor order with single spaces, e.g. "10 01 01 00".
    std::string to_string() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    std::vector<BitLetter> letters_;
};

BitWord encode(const ColumnTableau& first, const ColumnTableau& second, int n);
std::pair<ColumnTableau, ColumnTableau> decode(const BitWord& w);

/// Rank-one Kashiwara operators on the word, via the same tensor rule
/// as module crystal.
std::optional<BitWord> bitword_apply_e(const BitWord& w);
std::optional<BitWord> bitword_apply_f(const BitWord& w);

struct SigmaResult {
    ColumnTableau first, second;
    BitWord bits_in, bits_out;
};

/// Combinatorial R-matrix on a pair of columns: encode, apply
/// e^(l-k) (or f^(k-l) when k > l), decode.  Output sizes are (l, k).
SigmaResult sigma_with_words(const ColumnTableau& first, const ColumnTableau& second, int n);
std::pair<ColumnTableau, ColumnTableau> sigma(const ColumnTableau& first,
                                              const ColumnTableau& second, int n);

}  // namespace klrtab
