#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/laurent.hpp"
#include "klrtab/tableaux.hpp"

namespace klrtab {

/// Formal sum of residue words with Laurent coefficients.  All words of
/// a nonzero QChar share one content beta; the zero sum is content-free.
class QChar {
public:
    explicit QChar(int n) : n_(n) {}

    /// The unit for the shuffle product: the empty word with coefficient 1.
    static QChar one(int n);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, LaurentInt>& terms() const { return terms_; }
    LaurentInt coeff(const std::vector<int>& word) const;

    /// Content of the words as an element of Q_+.
    RootVec content(const CartanA& cd) const;

    void add_term(std::vector<int> word, const LaurentInt& coeff);

    QChar operator+(const QChar& o) const;
    QChar operator-(const QChar& o) const;
    friend bool operator==(const QChar&, const QChar&) = default;

    /// Coefficientwise q -> q^{-1}.
    QChar bar() const;
    bool bar_invariant() const { return *this == bar(); }
    bool nonneg_coeffs() const;

    /// Terms sorted lexicographically by word, e.g. "(1+q^2)(2,1,3)".
    std::string to_string() const;

private:
    int n_;
    std::map<std::vector<int>, LaurentInt> terms_;
};

/// q-character of the homogeneous module Sp^T: one degree-0 word per
/// standard tableau of shape xi_T.
QChar qch_sp(const ColumnTableau& T, const CartanA& cd);

/// Quantum shuffle product realizing the convolution at the level of
/// q-characters: each interleaving carries q^{-sum (alpha_u, alpha_v)}
/// over the inverted letter pairs.
QChar shuffle(const QChar& x, const QChar& y, const CartanA& cd);

/// Multiply every coefficient by q^d.
QChar shift(const QChar& x, int d);

/// Given monomial q-characters M_0, ..., M_{N-1} with
/// M_i = L_i + sum_{j>i} c_{ij} L_j for unknown simples L_j and unknown
/// c_{ij} in qZ[q], recover the L_i (each bar-invariant) by Gaussian
/// elimination against the bar involution.  Throws std::domain_error if
/// the system is not unitriangular in the given order or inconsistent.
std::vector<std::pair<std::string, QChar>> solve_unitriangular(
    const std::vector<std::pair<std::string, QChar>>& monomials, const CartanA& cd);

/// Same, also reporting the extracted coefficients c_{ij} keyed by
/// (label_i, label_j).
struct UnitriangularSolution {
    std::vector<std::pair<std::string, QChar>> simples;
    std::map<std::pair<std::string, std::string>, LaurentInt> coeffs;
};
UnitriangularSolution solve_unitriangular_full(
    const std::vector<std::pair<std::string, QChar>>& monomials, const CartanA& cd);

namespace detail {
/// Shuffle with the inversion exponent negated; exists so tests can
/// show the opposite convention breaks bar-invariance.
QChar shuffle_signed(const QChar& x, const QChar& y, const CartanA& cd, int sign);
}  // namespace detail

}  // namespace klrtab
