#pragma once

#include <cstdint>
#include <vector>

namespace klrtab {

/// Permutation of {1,...,m} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int m);
    static Permutation longest(int m);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_.at(i - 1); }  // 1-based
    const std::vector<int>& word() const { return w_; }

    int length() const;  // inversion count
    bool is_identity() const;

    Permutation inverse() const;
    /// Composition acting on positions: (a*b)(i) = a(b(i)).
    Permutation operator*(const Permutation& o) const;

    bool right_descent(int i) const { return w_.at(i - 1) > w_.at(i); }
    /// w s_i: swap positions i, i+1.
    Permutation swap_positions(int i) const;
    /// s_i w: swap values i, i+1.
    Permutation swap_values(int i) const;

    /// Packed code, 4 bits per letter; requires m <= 16.
    std::uint64_t code() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.w_ <=> b.w_;
    }

private:
    std::vector<int> w_;
};

/// Bruhat order via prefix domination of sorted initial segments.
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// Composition of m into positive parts.
class Composition {
public:
    explicit Composition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// Minimal-length representatives of the left cosets S_nu \ S_m, where
/// S_nu permutes the consecutive value blocks cut out by nu.  A
/// representative is minimal iff within each block the values appear in
/// the one-line word in increasing position order.  Lex order, size
/// m!/prod(nu_k!).
std::vector<Permutation> coset_min_reps(const Composition& nu);

/// Minimal representative of the coset S_nu w.
Permutation coset_minimize(const Permutation& w, const Composition& nu);

}  // namespace klrtab
