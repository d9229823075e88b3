#pragma once

#include <vector>

#include "klrtab/cartan.hpp"

namespace klrtab {

/// Partition, stored as its weakly decreasing positive parts.  The
/// empty vector is the empty diagram.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int p) const { return p <= rows() ? parts_[p - 1] : 0; }  // 1-based
    long long size() const;
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// One-column tableau: a strictly increasing subset of {1,...,n}.
/// Empty and full columns are legal values (the bit-word encoding
/// ranges over 0 <= k <= n); crystal-facing operations restrict to
/// 1 <= k <= n-1 at their own boundaries.
struct ColumnTableau {
    ColumnTableau() = default;
    ColumnTableau(int n, std::vector<int> entries);

    int n = 0;
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool contains(int a) const;

    friend bool operator==(const ColumnTableau&, const ColumnTableau&) = default;
    friend auto operator<=>(const ColumnTableau&, const ColumnTableau&) = default;
};

/// Semistandard tableau with entries in {1,...,n}: rows weakly
/// increase, columns strictly increase, fewer than n rows.
struct SSYTab {
    SSYTab() = default;
    SSYTab(int n, std::vector<std::vector<int>> rows);

    int n = 0;
    std::vector<std::vector<int>> rows;

    YoungDiagram shape() const;
    int entry(int p, int q) const { return rows.at(p - 1).at(q - 1); }  // 1-based
    int num_columns() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    ColumnTableau column(int q) const;
    /// Multiplicity of each value 1..n.
    std::vector<int> content() const;

    friend bool operator==(const SSYTab&, const SSYTab&) = default;
    friend auto operator<=>(const SSYTab& a, const SSYTab& b) { return a.rows <=> b.rows; }
};

/// Standard tableau: bijective filling with 1..|shape|, rows and
/// columns strictly increasing.
struct StandardTab {
    StandardTab() = default;
    StandardTab(YoungDiagram shape, std::vector<std::vector<int>> rows);

    YoungDiagram shape;
    std::vector<std::vector<int>> rows;

    long long size() const { return shape.size(); }
    /// (row, col) of the box holding entry v, 1-based.
    std::pair<int, int> find(int v) const;
    /// Swap entries j and j+1; the result may fail is_standard().
    StandardTab swap_entries(int j) const;
    bool is_standard() const;

    friend bool operator==(const StandardTab&, const StandardTab&) = default;
};

YoungDiagram conjugate(const YoungDiagram& lambda);

/// xi_T = (t_k - k, t_{k-1} - k + 1, ..., t_1 - 1) with zero parts dropped.
YoungDiagram xi_of(const ColumnTableau& T);

/// All standard tableaux of the given shape, deterministic order.
std::vector<StandardTab> standard_tableaux(const YoungDiagram& xi);

/// Residue word of S for a column of size k: res(b) = q - p + k per box,
/// listed from the box holding m down to the box holding 1.  Residues
/// must land in {1,...,n-1}.
std::vector<int> residue_sequence(const StandardTab& S, int k, int n);

/// beta_T = Lambda_k - wt(T) as an element of Q_+.
RootVec beta_of_column(const ColumnTableau& T, const CartanA& cd);

/// All semistandard tableaux of shape lambda with entries <= n, ordered
/// lexicographically by row-reading word.
std::vector<SSYTab> enumerate_ssyt(const YoungDiagram& lambda, int n);

}  // namespace klrtab
