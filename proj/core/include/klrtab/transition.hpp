#pragma once

#include <map>
#include <vector>

#include "klrtab/cartan.hpp"
#include "klrtab/kl.hpp"
#include "klrtab/laurent.hpp"
#include "klrtab/permutation.hpp"
#include "klrtab/tableaux.hpp"

namespace klrtab {

/// Column-strict concatenation T = T_1 * ... * T_r of columns with
/// weakly decreasing sizes; the shape is the conjugate of the size
/// sequence.  Semistandard iff rows weakly increase across columns.
struct ColumnStrictConcat {
    ColumnStrictConcat() = default;
    ColumnStrictConcat(int n, std::vector<ColumnTableau> columns);

    int n = 0;
    std::vector<ColumnTableau> columns;  // T_1, ..., T_r left to right

    int m() const;  // number of boxes
    YoungDiagram shape() const;
    std::vector<int> content() const;  // multiplicity of 1..n
    bool is_semistandard() const;
    SSYTab to_ssyt() const;
};

ColumnStrictConcat concat_of_ssyt(const SSYTab& T);

/// The words attached to T: the content composition nu_T (multiplicity
/// blocks of the weakly decreasing sort of gamma_T), the column reading
/// gamma_T (top to bottom within a column, columns right to left), and
/// the unique minimal coset representative d_T with gamma_T d_T^{-1}
/// weakly decreasing.
struct TableauWords {
    Composition nu;
    std::vector<int> gamma;
    Permutation d;
};

TableauWords tableau_words(const ColumnStrictConcat& T);

/// Transition entry A_{T,T'}(q) between the standard monomial of T and
/// the upper global basis element of T', via Kazhdan-Lusztig
/// polynomials of S_m.  Zero when contents differ; throws when shapes
/// differ.
LaurentInt transition_entry(const ColumnStrictConcat& T, const SSYTab& T2);

/// The square transition block on semistandard rows of one shape and
/// content, rows and columns sorted by ascending l(d_T).  Construction
/// verifies unitriangularity with unit diagonal and throws otherwise.
class TransitionMatrix {
public:
    TransitionMatrix(const YoungDiagram& lambda, const std::vector<int>& content, int n);

    const std::vector<SSYTab>& labels() const { return labels_; }
    const LaurentInt& entry(int row, int col) const { return a_.at(row).at(col); }

private:
    std::vector<SSYTab> labels_;
    std::vector<std::vector<LaurentInt>> a_;
};

/// Graded decomposition numbers of Sp^{T_r} o ... o Sp^{T_1}:
/// T' -> q^{-t} A_{T,T'}(q) with t = sum_{a<b} (beta_a, Lambda_{mu_b}).
/// Columns are given in tableau order T_1, ..., T_r.
std::map<SSYTab, LaurentInt> graded_decomposition(const std::vector<ColumnTableau>& columns,
                                                  const CartanA& cd);

}  // namespace klrtab
